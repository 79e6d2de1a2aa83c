#include "dfilab/lcmlattice.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <sstream>
#include <tuple>

#include "dfilab/error.hpp"
#include "dfilab/parallel.hpp"

namespace dfilab {

bool canonical_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.exponents() > b.exponents();
}

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<Monomial> gens) : ring_(std::move(ring)) {
  std::sort(gens.begin(), gens.end(), canonical_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (auto& g : gens) {
    if (g.nvars() != ring_->nvars()) throw Error(ErrorCode::InvalidInput, "generator has the wrong variable count");
    // Sorted by degree, so any divisor of g is already kept.
    if (!contains(g)) gens_.push_back(std::move(g));
  }
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

std::string MonomialIdeal::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < gens_.size(); ++k) out += (k ? ", " : "") + ring_->render(gens_[k]);
  return out + ")";
}

MonomialIdeal lead_term_ideal(const std::vector<Polynomial>& polys) {
  if (polys.empty()) throw Error(ErrorCode::InvalidInput, "lead-term ideal of an empty list");
  std::vector<Monomial> leads;
  for (const auto& p : polys) leads.push_back(p.lead_monomial());
  return MonomialIdeal(polys.front().ring(), std::move(leads));
}

LcmLattice::LcmLattice(const MonomialIdeal& ideal, std::size_t max_elements) {
  const auto& gens = ideal.generators();
  std::vector<Monomial> found;
  std::unordered_map<Monomial, std::size_t, MonomialHash> seen;
  auto admit = [&](Monomial m) -> bool {
    if (seen.count(m)) return false;
    if (found.size() + 1 > max_elements)
      throw Error(ErrorCode::LatticeTooLarge, "lcm lattice exceeds " + std::to_string(max_elements) + " elements");
    seen.emplace(m, found.size());
    found.push_back(std::move(m));
    return true;
  };
  admit(ideal.ring()->one());
  std::deque<std::size_t> work;
  for (const auto& g : gens)
    if (admit(g)) work.push_back(found.size() - 1);
  // Every lcm of a subset is reached by repeatedly joining with atoms.
  while (!work.empty()) {
    const std::size_t k = work.front();
    work.pop_front();
    for (const auto& g : gens) {
      Monomial j = found[k].lcm(g);
      if (admit(std::move(j))) work.push_back(found.size() - 1);
    }
  }
  std::sort(found.begin(), found.end(), canonical_less);
  elements_ = std::move(found);
  for (std::size_t k = 0; k < elements_.size(); ++k) index_.emplace(elements_[k], k);
  for (const auto& g : gens) atoms_.push_back(index_.at(g));
}

std::optional<std::size_t> LcmLattice::find(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

FinitePoset LcmLattice::open_interval_below(std::size_t k) const {
  const Monomial& top = elements_.at(k);
  std::vector<std::size_t> inside;
  for (std::size_t e = 1; e < k; ++e)
    if (elements_[e].divides(top)) inside.push_back(e);
  return FinitePoset::from_order(inside.size(), [&](std::size_t a, std::size_t b) {
    return elements_[inside[a]].divides(elements_[inside[b]]);
  });
}

FinitePoset LcmLattice::as_poset() const {
  return FinitePoset::from_order(size(), [&](std::size_t a, std::size_t b) { return elements_[a].divides(elements_[b]); });
}

std::vector<long> LcmLattice::mobius_from_bottom() const {
  // Canonical order is a linear extension of divisibility (degree first).
  std::vector<long> mu(elements_.size(), 0);
  mu[0] = 1;
  for (std::size_t k = 1; k < elements_.size(); ++k) {
    long sum = 0;
    for (std::size_t e = 0; e < k; ++e)
      if (elements_[e].divides(elements_[k])) sum += mu[e];
    mu[k] = -sum;
  }
  return mu;
}

void BettiTable::add(int i, const Monomial& mdeg, std::size_t beta) {
  if (beta == 0) return;
  entries_[{i, mdeg}] += beta;
  coarse_[{i, static_cast<int>(mdeg.degree())}] += beta;
}

std::size_t BettiTable::at(int i, const Monomial& mdeg) const {
  auto it = entries_.find({i, mdeg});
  return it == entries_.end() ? 0 : it->second;
}

std::size_t BettiTable::coarse(int i, int j) const {
  auto it = coarse_.find({i, j});
  return it == coarse_.end() ? 0 : it->second;
}

std::size_t BettiTable::total(int i) const {
  std::size_t sum = 0;
  for (const auto& [key, beta] : coarse_)
    if (key.first == i) sum += beta;
  return sum;
}

int BettiTable::projective_dimension() const {
  int pd = 0;
  for (const auto& [key, beta] : coarse_) pd = std::max(pd, key.first);
  return pd;
}

int BettiTable::max_degree() const {
  int d = 0;
  for (const auto& [key, beta] : coarse_) d = std::max(d, key.second);
  return d;
}

std::vector<std::tuple<int, Monomial, std::size_t>> BettiTable::multigraded() const {
  std::vector<std::tuple<int, Monomial, std::size_t>> out;
  for (const auto& [key, beta] : entries_) out.emplace_back(key.i, key.mdeg, beta);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
    return canonical_less(std::get<1>(a), std::get<1>(b));
  });
  return out;
}

std::vector<std::tuple<int, int, std::size_t>> BettiTable::coarse_entries() const {
  std::vector<std::tuple<int, int, std::size_t>> out;
  for (const auto& [key, beta] : coarse_) out.emplace_back(key.first, key.second, beta);
  return out;
}

std::string BettiTable::render() const {
  const int pd = projective_dimension();
  int max_row = 0;
  for (const auto& [key, beta] : coarse_) max_row = std::max(max_row, key.second - key.first);
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> heads{""};
  for (int i = 0; i <= pd; ++i) heads.push_back(std::to_string(i));
  cells.push_back(heads);
  std::vector<std::string> totals{"total:"};
  for (int i = 0; i <= pd; ++i) totals.push_back(std::to_string(total(i)));
  cells.push_back(totals);
  for (int row = 0; row <= max_row; ++row) {
    std::vector<std::string> line{std::to_string(row) + ":"};
    for (int i = 0; i <= pd; ++i) {
      const auto b = coarse(i, i + row);
      line.push_back(b ? std::to_string(b) : ".");
    }
    cells.push_back(line);
  }
  std::vector<std::size_t> width(static_cast<std::size_t>(pd) + 2, 0);
  for (const auto& line : cells)
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  std::ostringstream out;
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c) out << ' ';
      out << std::string(width[c] - line[c].size(), ' ') << line[c];
    }
    out << '\n';
  }
  return out.str();
}

bool operator==(const BettiTable& a, const BettiTable& b) { return a.entries_ == b.entries_; }

BettiTable tensor(const BettiTable& a, const BettiTable& b) {
  BettiTable out(a.ring());
  const auto left = a.multigraded();
  const auto right = b.multigraded();
  for (const auto& [i, m, x] : left)
    for (const auto& [j, w, y] : right) out.add(i + j, m * w, x * y);
  return out;
}

// TODO: use the crosscut complex on the atoms below each element; the full order
// complex of (1, m) exceeds the face cap already for the 3 x 7 interval DFIs.
BettiTable gpw_betti(const MonomialIdeal& ideal, const Field& field, Exec exec, const Caps& caps) {
  const LcmLattice lattice(ideal, caps.lattice_elements);
  std::vector<HomologyRanks> homology(lattice.size());
  for_each_index(lattice.size() - 1, exec, [&](std::size_t k) {
    const auto interval = lattice.open_interval_below(k + 1);
    homology[k + 1] = reduced_homology(order_complex(interval, caps.complex_faces), field);
  });
  BettiTable table(ideal.ring());
  table.add(0, lattice.element(0), 1);
  for (std::size_t k = 1; k < lattice.size(); ++k)
    for (int dim = homology[k].lowest; dim <= homology[k].highest(); ++dim)
      table.add(dim + 2, lattice.element(k), homology[k].at(dim));
  return table;
}

BettiTable taylor_betti_oracle(const MonomialIdeal& ideal, const Field& field, const Caps& caps) {
  const auto& gens = ideal.generators();
  const std::size_t g = gens.size();
  if (g > caps.oracle_generators)
    throw Error(ErrorCode::OracleTooLarge, std::to_string(g) + " generators exceed the Taylor oracle cap of " +
                                               std::to_string(caps.oracle_generators));
  // Taylor cells grouped by the lcm of their generator subset.
  std::unordered_map<Monomial, std::vector<std::uint32_t>, MonomialHash> cells;
  std::vector<Monomial> lcm_of(std::size_t{1} << g);
  lcm_of[0] = ideal.ring()->one();
  for (std::uint32_t s = 1; s < (1u << g); ++s) {
    const int low = std::countr_zero(s);
    lcm_of[s] = lcm_of[s & (s - 1)].lcm(gens[static_cast<std::size_t>(low)]);
  }
  for (std::uint32_t s = 0; s < (1u << g); ++s) cells[lcm_of[s]].push_back(s);

  BettiTable table(ideal.ring());
  for (const auto& [mdeg, subsets] : cells) {
    // Tensoring with k keeps only faces with the same lcm.
    std::vector<std::vector<std::uint32_t>> by_size(g + 1);
    for (auto s : subsets) by_size[static_cast<std::size_t>(std::popcount(s))].push_back(s);
    ChainComplex c;
    c.lowest = 0;
    std::vector<std::unordered_map<std::uint32_t, std::uint32_t>> position(g + 1);
    for (std::size_t k = 0; k <= g; ++k) {
      c.dims.push_back(by_size[k].size());
      for (std::size_t p = 0; p < by_size[k].size(); ++p) position[k].emplace(by_size[k][p], static_cast<std::uint32_t>(p));
      SparseMatrix d(0, k == 0 ? 0 : by_size[k - 1].size());
      for (auto s : by_size[k]) {
        std::vector<SparseMatrix::Entry> row;
        if (k > 0) {
          int sign = 1;
          for (std::uint32_t bits = s; bits; bits &= bits - 1) {
            const std::uint32_t face = s & ~(bits & (~bits + 1));
            auto it = position[k - 1].find(face);
            if (it != position[k - 1].end()) row.emplace_back(it->second, sign);
            sign = -sign;
          }
        }
        d.append_row(std::move(row));
      }
      c.boundary.push_back(std::move(d));
    }
    const auto ranks = homology_ranks(c, field);
    for (std::size_t k = 0; k < ranks.size(); ++k) table.add(static_cast<int>(k), mdeg, ranks[k]);
  }
  return table;
}

std::vector<Variable> m_k_pairs(const std::vector<int>& a, const Face& tau) {
  std::vector<Variable> out;
  int before = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int upto = before + a[i];
    for (int j = before + 1; j <= upto; ++j) out.push_back({static_cast<int>(i) + 1, tau.at(static_cast<std::size_t>(j))});
    before = upto;
  }
  return out;
}

Monomial m_k_monomial(const PolyRing& ring, const std::vector<int>& a, const Face& tau) {
  if (a.size() != static_cast<std::size_t>(ring.n()))
    throw Error(ErrorCode::ShapeMismatch, "composition has " + std::to_string(a.size()) + " parts, matrix has " +
                                              std::to_string(ring.n()) + " rows");
  for (int part : a)
    if (part < 0) throw Error(ErrorCode::InvalidInput, "composition parts must be nonnegative");
  const int k = std::accumulate(a.begin(), a.end(), 0);
  if (k != static_cast<int>(tau.size()))
    throw Error(ErrorCode::ShapeMismatch, "|a| = " + std::to_string(k) + " but |tau| = " + std::to_string(tau.size()));
  return ring.monomial(m_k_pairs(a, tau));
}

std::optional<std::pair<std::vector<int>, Face>> as_m_k(const PolyRing& ring, const Monomial& w, const Face& clique) {
  if (!w.is_squarefree()) return std::nullopt;
  std::vector<int> a(static_cast<std::size_t>(ring.n()), 0);
  std::vector<int> columns;
  for (std::size_t v = 0; v < w.nvars(); ++v) {
    if (!w[v]) continue;
    if (v >= static_cast<std::size_t>(ring.n() * ring.m())) return std::nullopt;
    const Variable x = ring.variable(v);  // row-major, so rows come out in order
    if (!columns.empty() && x.col <= columns.back()) return std::nullopt;
    columns.push_back(x.col);
    ++a[static_cast<std::size_t>(x.row - 1)];
  }
  if (static_cast<int>(columns.size()) < ring.n()) return std::nullopt;
  Face tau(columns);
  if (!tau.is_subset_of(clique)) return std::nullopt;
  return std::make_pair(std::move(a), std::move(tau));
}

LinStrandReport verify_lin_strand_bettis(const RingPtr& ring, const Face& clique, Exec exec, const Caps& caps) {
  const int n = ring->n();
  if (static_cast<int>(clique.size()) < n) throw Error(ErrorCode::InvalidInput, "clique smaller than n");
  std::vector<int> rows(static_cast<std::size_t>(n));
  std::iota(rows.begin(), rows.end(), 1);
  std::vector<Monomial> leads;
  for (const auto& cols : subsets_of_size(clique, static_cast<std::size_t>(n)))
    leads.push_back(minor(ring, rows, cols.vertices()).lead_monomial());
  const MonomialIdeal ideal(ring, std::move(leads));
  const LcmLattice lattice(ideal, caps.lattice_elements);
  const BettiTable table = gpw_betti(ideal, ring->field(), exec, caps);

  std::vector<std::vector<std::pair<int, std::size_t>>> betti_of(lattice.size());
  for (const auto& [i, mdeg, beta] : table.multigraded())
    if (auto k = lattice.find(mdeg)) betti_of[*k].emplace_back(i, beta);

  LinStrandReport report;
  for (std::size_t k = 1; k < lattice.size(); ++k) {
    LinStrandEntry e{lattice.element(k), as_m_k(*ring, lattice.element(k), clique), betti_of[k], false};
    ++report.lattice_elements;
    if (e.form) {
      ++report.m_k_elements;
      const int deg = static_cast<int>(e.w.degree());
      e.as_predicted = e.betti.size() == 1 && e.betti[0].first == deg - n + 1 && e.betti[0].second == 1;
      if (!e.as_predicted) ++report.m_k_mismatches;
    } else {
      e.as_predicted = e.betti.empty();
      if (!e.as_predicted) ++report.anomalies;
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace dfilab
