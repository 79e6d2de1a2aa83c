#include "dfilab/algebra.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "dfilab/error.hpp"

namespace dfilab {

void Monomial::set(std::size_t v, Exponent e) {
  degree_ = degree_ - exps_.at(v) + e;
  exps_[v] = e;
}

bool Monomial::is_squarefree() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  for (std::size_t v = 0; v < exps_.size(); ++v)
    if (exps_[v] > other.exps_[v]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t v = 0; v < exps_.size(); ++v)
    if (exps_[v] && other.exps_[v]) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial out(exps_.size());
  for (std::size_t v = 0; v < exps_.size(); ++v) {
    out.exps_[v] = std::max(exps_[v], other.exps_[v]);
    out.degree_ += out.exps_[v];
  }
  return out;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial out(exps_.size());
  for (std::size_t v = 0; v < exps_.size(); ++v) {
    out.exps_[v] = std::min(exps_[v], other.exps_[v]);
    out.degree_ += out.exps_[v];
  }
  return out;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out(*this);
  for (std::size_t v = 0; v < exps_.size(); ++v) out.exps_[v] += other.exps_[v];
  out.degree_ += other.degree_;
  return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial out(*this);
  for (std::size_t v = 0; v < exps_.size(); ++v) out.exps_[v] -= other.exps_[v];
  out.degree_ -= other.degree_;
  return out;
}

Monomial Monomial::resized(std::size_t nvars) const {
  Monomial out(nvars);
  for (std::size_t v = 0; v < std::min(nvars, exps_.size()); ++v) out.set(v, exps_[v]);
  return out;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exps_) h = (h ^ e) * 1099511628211ull;
  return h;
}

TermOrder::TermOrder(Tiebreak tiebreak, std::vector<std::size_t> ranking, std::vector<std::vector<std::int64_t>> weights)
    : tiebreak_(tiebreak), ranking_(std::move(ranking)), weights_(std::move(weights)) {
  std::vector<std::size_t> sorted = ranking_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k)
    if (sorted[k] != k) throw Error(ErrorCode::InvalidInput, "variable ranking is not a permutation");
  for (const auto& w : weights_) {
    if (w.size() != ranking_.size()) throw Error(ErrorCode::InvalidInput, "weight vector length differs from variable count");
    if (tiebreak_ == Tiebreak::Lex || tiebreak_ == Tiebreak::GrLex)
      for (auto x : w)
        if (x < 0) throw Error(ErrorCode::InvalidInput, "negative weights do not give a well-order");
  }
}

TermOrder TermOrder::row_major_lex(int n, int m) {
  std::vector<std::size_t> ranking(static_cast<std::size_t>(n * m));
  std::iota(ranking.begin(), ranking.end(), 0);
  return TermOrder(Tiebreak::Lex, std::move(ranking));
}

TermOrder TermOrder::row_permuted_lex(int m, const std::vector<int>& rows) {
  std::vector<std::size_t> ranking;
  for (int r : rows)
    for (int j = 1; j <= m; ++j) ranking.push_back(static_cast<std::size_t>((r - 1) * m + (j - 1)));
  return TermOrder(Tiebreak::Lex, std::move(ranking));
}

TermOrder TermOrder::with_leading_variable(std::size_t v) const {
  if (v != ranking_.size()) throw Error(ErrorCode::InvalidInput, "auxiliary variable must be the next index");
  std::vector<std::size_t> ranking = ranking_;
  ranking.push_back(v);
  std::vector<std::vector<std::int64_t>> weights;
  std::vector<std::int64_t> lead(v + 1, 0);
  lead[v] = 1;
  weights.push_back(std::move(lead));
  for (auto w : weights_) {
    w.push_back(0);
    weights.push_back(std::move(w));
  }
  return TermOrder(tiebreak_, std::move(ranking), std::move(weights));
}

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
  for (const auto& w : weights_) {
    std::int64_t sa = 0, sb = 0;
    for (std::size_t v = 0; v < w.size(); ++v) {
      sa += w[v] * a[v];
      sb += w[v] * b[v];
    }
    if (sa != sb) return sa <=> sb;
  }
  if (tiebreak_ != Tiebreak::Lex && a.degree() != b.degree()) return a.degree() <=> b.degree();
  if (tiebreak_ == Tiebreak::GrevLex) {
    for (auto it = ranking_.rbegin(); it != ranking_.rend(); ++it)
      if (a[*it] != b[*it]) return b[*it] <=> a[*it];
    return std::strong_ordering::equal;
  }
  for (auto v : ranking_)
    if (a[v] != b[v]) return a[v] <=> b[v];
  return std::strong_ordering::equal;
}

namespace {

std::string variable_name(std::size_t index, int n, int m) {
  const auto matrix = static_cast<std::size_t>(n * m);
  if (index >= matrix) {
    const auto k = index - matrix;
    return k == 0 ? "t" : "t" + std::to_string(k + 1);
  }
  return "x_{" + std::to_string(index / m + 1) + "," + std::to_string(index % m + 1) + "}";
}

}  // namespace

std::string TermOrder::describe(int n, int m) const {
  std::ostringstream out;
  switch (tiebreak_) {
    case Tiebreak::Lex: out << "lex"; break;
    case Tiebreak::GrLex: out << "grlex"; break;
    case Tiebreak::GrevLex: out << "grevlex"; break;
  }
  out << '(';
  for (std::size_t k = 0; k < ranking_.size(); ++k) out << (k ? " > " : "") << variable_name(ranking_[k], n, m);
  out << ')';
  for (const auto& w : weights_) {
    out << " weights[";
    for (std::size_t k = 0; k < w.size(); ++k) out << (k ? "," : "") << w[k];
    out << ']';
  }
  return out.str();
}

PolyRing::PolyRing(int n, int m, Field field, TermOrder order, int extra)
    : n_(n), m_(m), extra_(extra), field_(std::move(field)), order_(std::move(order)) {
  if (n < 1 || m < 1 || extra < 0) throw Error(ErrorCode::InvalidInput, "ring needs n, m >= 1");
  if (order_.nvars() != nvars())
    throw Error(ErrorCode::InvalidInput, "term order ranks " + std::to_string(order_.nvars()) + " variables, ring has " +
                                             std::to_string(nvars()));
}

std::size_t PolyRing::index(Variable v) const {
  if (v.row < 1 || v.row > n_ || v.col < 1 || v.col > m_)
    throw Error(ErrorCode::InvalidInput, "variable x_{" + std::to_string(v.row) + "," + std::to_string(v.col) + "} out of range");
  return static_cast<std::size_t>((v.row - 1) * m_ + (v.col - 1));
}

Variable PolyRing::variable(std::size_t index) const {
  if (index >= static_cast<std::size_t>(n_ * m_)) throw Error(ErrorCode::InvalidInput, "not a matrix variable");
  return {static_cast<int>(index) / m_ + 1, static_cast<int>(index) % m_ + 1};
}

Monomial PolyRing::var(Variable v) const { return var_index(index(v)); }

Monomial PolyRing::var_index(std::size_t index) const {
  Monomial out(nvars());
  out.set(index, 1);
  return out;
}

Monomial PolyRing::monomial(const std::vector<Variable>& vars) const {
  Monomial out(nvars());
  for (auto v : vars) {
    const auto k = index(v);
    out.set(k, out[k] + 1);
  }
  return out;
}

std::string PolyRing::render(const Monomial& mono) const {
  if (mono.is_one()) return "1";
  std::string out;
  // Print in ranking order so the largest variable leads.
  for (auto v : order_.ranking()) {
    if (mono[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += variable_name(v, n_, m_);
    if (mono[v] > 1) out += "^" + std::to_string(mono[v]);
  }
  return out;
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  const auto& order = ring_->order();
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return order.greater(a.first, b.first); });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().first == t.first) {
      terms_.back().second += t.second;
      if (terms_.back().second.is_zero()) terms_.pop_back();
    } else if (!t.second.is_zero()) {
      terms_.push_back(std::move(t));
    }
  }
}

Polynomial Polynomial::term(RingPtr ring, Monomial mono, FieldElement coeff) {
  Polynomial p(std::move(ring));
  if (!coeff.is_zero()) p.terms_.emplace_back(std::move(mono), std::move(coeff));
  return p;
}

const Monomial& Polynomial::lead_monomial() const {
  if (terms_.empty()) throw Error(ErrorCode::InvalidInput, "zero polynomial has no lead term");
  return terms_.front().first;
}

const FieldElement& Polynomial::lead_coeff() const {
  if (terms_.empty()) throw Error(ErrorCode::InvalidInput, "zero polynomial has no lead coefficient");
  return terms_.front().second;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.first.degree() != terms_.front().first.degree()) return false;
  return true;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

namespace {

// Merges two descending term lists, scaling the right-hand one by `c` and
// shifting it by `mono` (mono may be null for no shift).
std::vector<Polynomial::Term> merge(const TermOrder& order, const std::vector<Polynomial::Term>& a,
                                    const std::vector<Polynomial::Term>& b, const FieldElement& c,
                                    const Monomial* mono) {
  std::vector<Polynomial::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  Monomial shifted;
  auto right = [&](std::size_t k) -> const Monomial& {
    if (!mono) return b[k].first;
    shifted = b[k].first * *mono;
    return shifted;
  };
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    const Monomial& rm = right(j);
    if (i == a.size()) {
      out.emplace_back(rm, b[j++].second * c);
      continue;
    }
    const auto cmp = order.compare(a[i].first, rm);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.emplace_back(rm, b[j++].second * c);
    } else {
      FieldElement sum = a[i].second + b[j].second * c;
      if (!sum.is_zero()) out.emplace_back(a[i].first, std::move(sum));
      ++i;
      ++j;
    }
  }
  return out;
}

void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.ring() != b.ring()) throw Error(ErrorCode::InvalidInput, "polynomials live in different rings");
}

}  // namespace

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  require_same_ring(*this, rhs);
  Polynomial out(ring_);
  out.terms_ = merge(ring_->order(), terms_, rhs.terms_, FieldElement::one(ring_->field()), nullptr);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  require_same_ring(*this, rhs);
  Polynomial out(ring_);
  out.terms_ = merge(ring_->order(), terms_, rhs.terms_, -FieldElement::one(ring_->field()), nullptr);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  require_same_ring(*this, rhs);
  std::unordered_map<Monomial, FieldElement, MonomialHash> acc;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : rhs.terms_) {
      auto [it, fresh] = acc.try_emplace(ma * mb, ca * cb);
      if (!fresh) it->second += ca * cb;
    }
  std::vector<Term> terms(acc.begin(), acc.end());
  return Polynomial(ring_, std::move(terms));
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
  Polynomial out(ring_);
  if (c.is_zero()) return out;
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.second *= c;
  return out;
}

Polynomial Polynomial::times_term(const Monomial& mono, const FieldElement& c) const {
  Polynomial out(ring_);
  if (c.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.emplace_back(t.first * mono, t.second * c);
  return out;
}

Polynomial Polynomial::minus_term_times(const FieldElement& c, const Monomial& mono, const Polynomial& g) const {
  require_same_ring(*this, g);
  Polynomial out(ring_);
  out.terms_ = merge(ring_->order(), terms_, g.terms_, -c, &mono);
  return out;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty() || terms_.front().second.is_one()) return *this;
  return scaled(terms_.front().second.inverse());
}

Polynomial Polynomial::tail() const {
  Polynomial out(ring_);
  if (!terms_.empty()) out.terms_.assign(terms_.begin() + 1, terms_.end());
  return out;
}

Polynomial Polynomial::moved_to(const RingPtr& target) const {
  if (target->m() != ring_->m() || target->n() != ring_->n())
    throw Error(ErrorCode::InvalidInput, "target ring has a different matrix shape");
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& [mono, c] : terms_) {
    for (std::size_t v = target->nvars(); v < mono.nvars(); ++v)
      if (mono[v]) throw Error(ErrorCode::InvalidInput, "term uses a variable absent from the target ring");
    terms.emplace_back(mono.resized(target->nvars()), c);
  }
  return Polynomial(target, std::move(terms));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& [mono, c] = terms_[k];
    std::string coeff = c.to_string();
    bool negative = !coeff.empty() && coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    if (k == 0)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const bool unit = coeff == "1";
    if (mono.is_one())
      out += coeff;
    else
      out += (unit ? "" : coeff + "*") + ring_->render(mono);
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k)
    if (!(a.terms_[k].first == b.terms_[k].first) || !(a.terms_[k].second == b.terms_[k].second)) return false;
  return true;
}

namespace {

void validate_indices(const std::vector<int>& idx, int bound, const char* what) {
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] < 1 || idx[k] > bound)
      throw Error(ErrorCode::InvalidInput, std::string(what) + " index " + std::to_string(idx[k]) + " out of range");
    if (k && idx[k] <= idx[k - 1]) throw Error(ErrorCode::InvalidInput, std::string(what) + " indices must increase");
  }
}

}  // namespace

Polynomial minor(const RingPtr& ring, const std::vector<int>& rows, const std::vector<int>& cols) {
  const std::size_t r = rows.size();
  if (r != cols.size()) throw Error(ErrorCode::InvalidInput, "minor needs as many rows as columns");
  if (r == 0) throw Error(ErrorCode::InvalidInput, "minor of size 0");
  if (r > static_cast<std::size_t>(ring->n()))
    throw Error(ErrorCode::MinorTooLarge, std::to_string(r) + "-minor of a matrix with " + std::to_string(ring->n()) + " rows");
  validate_indices(rows, ring->n(), "row");
  validate_indices(cols, ring->m(), "column");

  // Cofactor expansion along the first remaining row; the sub-determinant
  // depends only on which column positions remain.
  std::unordered_map<std::uint32_t, Polynomial> memo;
  const FieldElement one = FieldElement::one(ring->field());
  std::function<Polynomial(std::uint32_t)> det = [&](std::uint32_t mask) -> Polynomial {
    const auto depth = r - static_cast<std::size_t>(std::popcount(mask));
    if (depth == r) return Polynomial::term(ring, ring->one(), one);
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    Polynomial sum(ring);
    int sign = 1;
    for (std::size_t j = 0; j < r; ++j) {
      if (!(mask >> j & 1u)) continue;
      const Monomial x = ring->var({rows[depth], cols[j]});
      Polynomial sub = det(mask & ~(1u << j));
      sum = sign > 0 ? sum + sub.times_term(x, one) : sum - sub.times_term(x, one);
      sign = -sign;
    }
    memo.emplace(mask, sum);
    return sum;
  };
  return det((1u << r) - 1);
}

Monomial diagonal_monomial(const PolyRing& ring, const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw Error(ErrorCode::InvalidInput, "diagonal needs as many rows as columns");
  std::vector<Variable> vars;
  for (std::size_t k = 0; k < rows.size(); ++k) vars.push_back({rows[k], cols[k]});
  return ring.monomial(vars);
}

bool is_diagonal(const TermOrder& order, int n, int m) {
  const int matrix = n * m;
  if (static_cast<int>(order.nvars()) < matrix) throw Error(ErrorCode::InvalidInput, "order has too few variables");
  auto ring = PolyRing::make(n, m, Field::prime(2), order, static_cast<int>(order.nvars()) - matrix);
  // Over GF(2) signs vanish but no cancellation occurs: each permutation
  // contributes a distinct monomial, so the lead monomial is unaffected.
  std::vector<int> rows, cols;
  std::function<bool(int, int, int)> choose_cols;
  std::function<bool(int)> choose_rows = [&](int start) -> bool {
    if (!rows.empty() && !choose_cols(1, 0, static_cast<int>(rows.size()))) return false;
    for (int i = start; i <= n; ++i) {
      rows.push_back(i);
      const bool ok = choose_rows(i + 1);
      rows.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  choose_cols = [&](int start, int taken, int need) -> bool {
    if (taken == need) return minor(ring, rows, cols).lead_monomial() == diagonal_monomial(*ring, rows, cols);
    for (int j = start; j <= m; ++j) {
      cols.push_back(j);
      const bool ok = choose_cols(j + 1, taken + 1, need);
      cols.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  return choose_rows(1);
}

}  // namespace dfilab
