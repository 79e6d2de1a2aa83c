#include "dfilab/poset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "dfilab/error.hpp"

namespace dfilab {

namespace {

std::vector<std::string> default_labels(std::size_t size, std::vector<std::string> labels) {
  if (labels.empty()) {
    labels.resize(size);
    for (std::size_t k = 0; k < size; ++k) labels[k] = std::to_string(k);
  }
  if (labels.size() != size) throw Error(ErrorCode::InvalidInput, "label count differs from poset size");
  return labels;
}

}  // namespace

FinitePoset::FinitePoset(std::size_t size, const std::vector<std::pair<std::size_t, std::size_t>>& relations,
                         std::vector<std::string> labels)
    : size_(size), words_((size + 63) / 64), rows_(size * words_, 0), labels_(default_labels(size, std::move(labels))) {
  for (std::size_t a = 0; a < size; ++a) set(a, a);
  for (auto [a, b] : relations) {
    if (a >= size || b >= size) throw Error(ErrorCode::InvalidInput, "relation names a missing element");
    set(a, b);
  }
  // Warshall closure on bit rows.
  for (std::size_t k = 0; k < size; ++k)
    for (std::size_t i = 0; i < size; ++i)
      if (bit(i, k))
        for (std::size_t w = 0; w < words_; ++w) rows_[i * words_ + w] |= rows_[k * words_ + w];
  check_antisymmetric();
}

FinitePoset FinitePoset::from_order(std::size_t size, const std::function<bool(std::size_t, std::size_t)>& leq,
                                    std::vector<std::string> labels) {
  FinitePoset p;
  p.size_ = size;
  p.words_ = (size + 63) / 64;
  p.rows_.assign(size * p.words_, 0);
  p.labels_ = default_labels(size, std::move(labels));
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b)
      if (a == b || leq(a, b)) p.set(a, b);
  p.check_antisymmetric();
  return p;
}

void FinitePoset::check_antisymmetric() const {
  for (std::size_t a = 0; a < size_; ++a)
    for (std::size_t b = a + 1; b < size_; ++b)
      if (bit(a, b) && bit(b, a)) throw Error(ErrorCode::InvalidInput, "relation is not antisymmetric");
}

std::optional<std::size_t> FinitePoset::bottom() const {
  for (std::size_t a = 0; a < size_; ++a) {
    bool ok = true;
    for (std::size_t b = 0; b < size_ && ok; ++b) ok = bit(a, b);
    if (ok) return a;
  }
  return std::nullopt;
}

std::optional<std::size_t> FinitePoset::top() const {
  for (std::size_t a = 0; a < size_; ++a) {
    bool ok = true;
    for (std::size_t b = 0; b < size_ && ok; ++b) ok = bit(b, a);
    if (ok) return a;
  }
  return std::nullopt;
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < size_; ++a)
    for (std::size_t b = 0; b < size_; ++b) {
      if (!less(a, b)) continue;
      bool between = false;
      for (std::size_t c = 0; c < size_ && !between; ++c) between = less(a, c) && less(c, b);
      if (!between) out.emplace_back(a, b);
    }
  return out;
}

FinitePoset FinitePoset::induced(const std::vector<std::size_t>& keep) const {
  std::vector<std::string> labels;
  for (auto k : keep) labels.push_back(labels_.at(k));
  return from_order(
      keep.size(), [&](std::size_t a, std::size_t b) { return bit(keep[a], keep[b]); }, std::move(labels));
}

std::vector<std::size_t> FinitePoset::linear_extension() const {
  // a < b implies a strictly smaller down-set, so sorting by down-set size works.
  std::vector<std::size_t> below(size_, 0);
  for (std::size_t a = 0; a < size_; ++a)
    for (std::size_t b = 0; b < size_; ++b)
      if (bit(b, a)) ++below[a];
  std::vector<std::size_t> order(size_);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
  return order;
}

FinitePoset boolean_lattice(int k) {
  if (k < 0 || k > 16) throw Error(ErrorCode::InvalidInput, "Boolean lattice rank out of range");
  const std::size_t size = std::size_t{1} << k;
  std::vector<std::string> labels(size);
  for (std::size_t s = 0; s < size; ++s) {
    std::string l = "{";
    for (int v = 0; v < k; ++v)
      if (s >> v & 1u) l += (l.size() > 1 ? "," : "") + std::to_string(v + 1);
    labels[s] = l + "}";
  }
  return FinitePoset::from_order(
      size, [](std::size_t a, std::size_t b) { return (a & ~b) == 0; }, std::move(labels));
}

FinitePoset chain(std::size_t size) {
  return FinitePoset::from_order(size, [](std::size_t a, std::size_t b) { return a <= b; });
}

FinitePoset proper_part(const FinitePoset& p) {
  const auto lo = p.bottom();
  const auto hi = p.top();
  if (p.size() < 2 || !lo || !hi) throw Error(ErrorCode::NotBounded, "proper part needs a top and a bottom");
  std::vector<std::size_t> keep;
  for (std::size_t a = 0; a < p.size(); ++a)
    if (a != *lo && a != *hi) keep.push_back(a);
  return p.induced(keep);
}

FinitePoset remove_bottom(const FinitePoset& p) {
  const auto lo = p.bottom();
  if (!lo) throw Error(ErrorCode::NotBounded, "poset has no bottom element");
  std::vector<std::size_t> keep;
  for (std::size_t a = 0; a < p.size(); ++a)
    if (a != *lo) keep.push_back(a);
  return p.induced(keep);
}

FinitePoset cartesian_product(const FinitePoset& p, const FinitePoset& q) {
  const std::size_t nq = q.size();
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < nq; ++b) labels.push_back("(" + p.label(a) + "," + q.label(b) + ")");
  return FinitePoset::from_order(
      p.size() * nq,
      [&](std::size_t x, std::size_t y) { return p.leq(x / nq, y / nq) && q.leq(x % nq, y % nq); },
      std::move(labels));
}

std::size_t OrderComplex::total() const {
  std::size_t sum = 0;
  for (std::size_t d = 0; d < faces.size(); ++d) sum += count(d);
  return sum;
}

OrderComplex order_complex(const FinitePoset& p, std::size_t max_faces) {
  const auto order = p.linear_extension();
  std::vector<std::vector<std::uint32_t>> up(p.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      if (p.less(order[i], order[j])) up[order[i]].push_back(static_cast<std::uint32_t>(order[j]));

  OrderComplex k;
  std::size_t produced = 0;
  std::vector<std::uint32_t> current;
  std::function<void()> extend = [&]() {
    const std::size_t dim = current.size() - 1;
    if (k.faces.size() <= dim) k.faces.resize(dim + 1);
    k.faces[dim].insert(k.faces[dim].end(), current.begin(), current.end());
    if (++produced > max_faces)
      throw Error(ErrorCode::ComplexTooLarge, "order complex exceeds " + std::to_string(max_faces) + " faces");
    for (auto y : up[current.back()]) {
      current.push_back(y);
      extend();
      current.pop_back();
    }
  };
  for (auto x : order) {
    current.assign(1, static_cast<std::uint32_t>(x));
    extend();
  }
  return k;
}

std::vector<std::size_t> homology_ranks(const ChainComplex& complex, const Field& field) {
  const std::size_t levels = complex.dims.size();
  std::vector<std::size_t> ranks(levels + 1, 0);
  for (std::size_t k = 0; k < levels && k < complex.boundary.size(); ++k) ranks[k] = rank(complex.boundary[k], field);
  std::vector<std::size_t> out(levels);
  for (std::size_t k = 0; k < levels; ++k) out[k] = complex.dims[k] - ranks[k] - ranks[k + 1];
  return out;
}

bool boundary_squares_to_zero(const ChainComplex& complex) {
  for (std::size_t k = 1; k < complex.boundary.size(); ++k) {
    const auto& upper = complex.boundary[k];
    const auto& lower = complex.boundary[k - 1];
    for (std::size_t r = 0; r < upper.rows(); ++r) {
      std::unordered_map<std::uint32_t, std::int64_t> acc;
      for (auto [mid, a] : upper.row(r))
        for (auto [col, b] : lower.row(mid)) acc[col] += a * b;
      for (const auto& [col, v] : acc)
        if (v != 0) return false;
    }
  }
  return true;
}

ChainComplex augmented_chain_complex(const OrderComplex& k) {
  ChainComplex c;
  c.lowest = -1;
  c.dims.push_back(1);
  SparseMatrix to_nothing(0, 0);
  to_nothing.append_row({});
  c.boundary.push_back(std::move(to_nothing));
  if (k.faces.empty()) return c;

  c.dims.push_back(k.count(0));
  SparseMatrix d0(0, 1);
  for (std::size_t v = 0; v < k.count(0); ++v) d0.append_row({{0, 1}});
  c.boundary.push_back(std::move(d0));

  for (std::size_t dim = 1; dim < k.faces.size(); ++dim) {
    std::unordered_map<std::u32string, std::uint32_t> index;
    const auto& lower = k.faces[dim - 1];
    for (std::size_t f = 0; f < k.count(dim - 1); ++f)
      index.emplace(std::u32string(lower.begin() + f * dim, lower.begin() + (f + 1) * dim), static_cast<std::uint32_t>(f));
    SparseMatrix d(0, k.count(dim - 1));
    const auto& faces = k.faces[dim];
    std::u32string key(dim, 0);
    for (std::size_t f = 0; f < k.count(dim); ++f) {
      const auto* chain = faces.data() + f * (dim + 1);
      std::vector<SparseMatrix::Entry> row;
      for (std::size_t drop = 0; drop <= dim; ++drop) {
        for (std::size_t s = 0, t = 0; s <= dim; ++s)
          if (s != drop) key[t++] = chain[s];
        row.emplace_back(index.at(key), drop % 2 == 0 ? 1 : -1);
      }
      d.append_row(std::move(row));
    }
    c.dims.push_back(k.count(dim));
    c.boundary.push_back(std::move(d));
  }
  return c;
}

std::size_t HomologyRanks::at(int dim) const {
  const int k = dim - lowest;
  return k < 0 || k >= static_cast<int>(ranks.size()) ? 0 : ranks[static_cast<std::size_t>(k)];
}

std::string HomologyRanks::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < ranks.size(); ++k)
    if (ranks[k]) {
      out << (first ? "" : " ") << lowest + static_cast<int>(k) << ':' << ranks[k];
      first = false;
    }
  return first ? "0" : out.str();
}

bool operator==(const HomologyRanks& a, const HomologyRanks& b) {
  const int lo = std::min(a.lowest, b.lowest);
  const int hi = std::max(a.highest(), b.highest());
  for (int d = lo; d <= hi; ++d)
    if (a.at(d) != b.at(d)) return false;
  return true;
}

HomologyRanks reduced_homology(const OrderComplex& k, const Field& field) {
  return {-1, homology_ranks(augmented_chain_complex(k), field)};
}

HomologyRanks homology(const OrderComplex& k, const Field& field) {
  HomologyRanks reduced = reduced_homology(k, field);
  HomologyRanks out{0, {}};
  if (k.faces.empty()) return out;
  out.ranks.assign(reduced.ranks.begin() + 1, reduced.ranks.end());
  out.ranks[0] += 1;
  return out;
}

namespace {

HomologyRanks convolve(const HomologyRanks& a, const HomologyRanks& b, int shift) {
  HomologyRanks out{a.lowest + b.lowest + shift, {}};
  const int hi = a.highest() + b.highest() + shift;
  for (int r = out.lowest; r <= hi; ++r) {
    std::size_t sum = 0;
    for (int i = a.lowest; i <= a.highest(); ++i) sum += a.at(i) * b.at(r - i - shift);
    out.ranks.push_back(sum);
  }
  return out;
}

}  // namespace

KunnethReport kunneth_check(const FinitePoset& p, const FinitePoset& q, KunnethVariant variant, const Field& field,
                            std::size_t max_faces) {
  const FinitePoset prod = cartesian_product(p, q);
  auto reduced = [&](const FinitePoset& x) { return reduced_homology(order_complex(x, max_faces), field); };
  KunnethReport report{};
  switch (variant) {
    case KunnethVariant::Plain:
      report.product_side = homology(order_complex(prod, max_faces), field);
      report.tensor_side = convolve(homology(order_complex(p, max_faces), field),
                                    homology(order_complex(q, max_faces), field), 0);
      break;
    case KunnethVariant::RemoveBottom:
      report.tensor_side = convolve(reduced(remove_bottom(p)), reduced(remove_bottom(q)), 1);
      report.product_side = reduced(remove_bottom(prod));
      break;
    case KunnethVariant::ProperParts:
      report.tensor_side = convolve(reduced(proper_part(p)), reduced(proper_part(q)), 2);
      report.product_side = reduced(proper_part(prod));
      break;
  }
  report.holds = report.product_side == report.tensor_side;
  return report;
}

}  // namespace dfilab
