#include "dfilab/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>

#include "dfilab/error.hpp"

namespace dfilab {

Face::Face(std::initializer_list<int> vertices) : Face(std::vector<int>(vertices)) {}

Face::Face(std::vector<int> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  for (std::size_t k = 0; k < vertices_.size(); ++k) {
    const int v = vertices_[k];
    if (v < 1 || v > kMaxVertices)
      throw Error(ErrorCode::InvalidInput, "vertex label out of range: " + std::to_string(v));
    if (k > 0 && vertices_[k - 1] == v)
      throw Error(ErrorCode::InvalidInput, "repeated vertex " + std::to_string(v));
    mask_ |= std::uint64_t{1} << v;
  }
}

Face Face::from_mask(std::uint64_t mask) {
  Face f;
  f.mask_ = mask;
  while (mask) {
    f.vertices_.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return f;
}

Face Face::without_position(std::size_t position) const {
  if (position < 1 || position > vertices_.size())
    throw Error(ErrorCode::InvalidInput, "face position out of range");
  return from_mask(mask_ & ~(std::uint64_t{1} << vertices_[position - 1]));
}

std::string Face::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t k = 0; k < vertices_.size(); ++k) out << (k ? "," : "") << vertices_[k];
  out << '}';
  return out.str();
}

SimplicialComplex::SimplicialComplex(int m, int r, const std::vector<std::vector<int>>& facets) : m_(m), r_(r) {
  if (m < 0 || m > kMaxVertices)
    throw Error(ErrorCode::InvalidInput, "vertex count must lie in [0, " + std::to_string(kMaxVertices) + "]");
  if (r < 1) throw Error(ErrorCode::InvalidInput, "facet cardinality r must be >= 1");
  for (const auto& raw : facets) {
    Face f(raw);
    if (!f.empty() && f.vertices().back() > m)
      throw Error(ErrorCode::InvalidInput, "facet " + f.to_string() + " uses a vertex above m=" + std::to_string(m));
    if (static_cast<int>(f.size()) != r)
      throw Error(ErrorCode::NotPure, "facet " + f.to_string() + " has cardinality " + std::to_string(f.size()) +
                                          ", expected " + std::to_string(r));
    if (facet_masks_.insert(f.mask()).second) facets_.push_back(std::move(f));
  }
  std::sort(facets_.begin(), facets_.end());
}

SimplicialComplex SimplicialComplex::from_intervals(int m, int r, const std::vector<std::pair<int, int>>& intervals) {
  std::vector<std::vector<int>> facets;
  for (auto [a, b] : intervals) {
    if (a < 1 || b > m || a > b)
      throw Error(ErrorCode::InvalidInput, "bad interval [" + std::to_string(a) + "," + std::to_string(b) + "]");
    std::vector<int> clique;
    for (int v = a; v <= b; ++v) clique.push_back(v);
    if (static_cast<int>(clique.size()) < r)
      throw Error(ErrorCode::InvalidInput, "interval shorter than r");
    for (const auto& f : subsets_of_size(Face(clique), static_cast<std::size_t>(r))) facets.push_back(f.vertices());
  }
  return SimplicialComplex(m, r, facets);
}

std::string SimplicialComplex::to_string() const {
  std::string out;
  for (const auto& f : facets_) out += (out.empty() ? "" : " ") + f.to_string();
  return out.empty() ? "{}" : out;
}

CliqueDecomposition::CliqueDecomposition(int m, int r, std::vector<Face> cliques, const std::vector<Face>& facets)
    : m_(m), r_(r), cliques_(std::move(cliques)) {
  std::sort(cliques_.begin(), cliques_.end());
  back_map_.resize(facets.size());
  for (std::size_t f = 0; f < facets.size(); ++f)
    for (std::size_t c = 0; c < cliques_.size(); ++c)
      if (facets[f].is_subset_of(cliques_[c])) back_map_[f].push_back(c);
}

bool CliqueDecomposition::contains(std::uint64_t mask) const {
  return std::any_of(cliques_.begin(), cliques_.end(), [&](const Face& c) { return (mask & ~c.mask()) == 0; });
}

std::size_t CliqueDecomposition::dimension_plus_one() const {
  std::size_t best = 0;
  for (const auto& c : cliques_) best = std::max(best, c.size());
  return best;
}

std::vector<Face> subsets_of_size(const Face& from, std::size_t k) {
  std::vector<Face> out;
  const auto& v = from.vertices();
  if (k > v.size()) return out;
  std::vector<int> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (pick.size() == k) {
      out.emplace_back(pick);
      return;
    }
    for (std::size_t i = start; i + (k - pick.size()) <= v.size(); ++i) {
      pick.push_back(v[i]);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return out;
}

namespace {

// Bron-Kerbosch over the hereditary family {V : every r-subset of V is a
// facet}. A candidate u extends R iff every (r-1)-subset of R plus u is a
// facet. No pivoting: the pivot argument needs pairwise adjacency.
class HyperBronKerbosch {
 public:
  explicit HyperBronKerbosch(const SimplicialComplex& complex) : complex_(complex), r_(complex.facet_size()) {}

  std::vector<Face> run() {
    std::uint64_t universe = 0;
    for (const auto& f : complex_.facets()) universe |= f.mask();
    expand(0, universe, 0);
    return std::move(found_);
  }

 private:
  bool compatible(std::uint64_t current, int candidate) const {
    const int need = r_ - 1;
    if (std::popcount(current) < need) return true;
    const std::uint64_t bit = std::uint64_t{1} << candidate;
    // Walk (r-1)-subsets of `current` via Gosper-style recursion on bits.
    std::vector<int> members;
    for (std::uint64_t m = current; m; m &= m - 1) members.push_back(std::countr_zero(m));
    bool ok = true;
    std::function<void(std::size_t, int, std::uint64_t)> rec = [&](std::size_t start, int left, std::uint64_t acc) {
      if (!ok) return;
      if (left == 0) {
        if (!complex_.has_facet(acc | bit)) ok = false;
        return;
      }
      for (std::size_t i = start; i + left <= members.size() && ok; ++i)
        rec(i + 1, left - 1, acc | (std::uint64_t{1} << members[i]));
    };
    rec(0, need, 0);
    return ok;
  }

  void expand(std::uint64_t current, std::uint64_t candidates, std::uint64_t excluded) {
    if (candidates == 0 && excluded == 0) {
      if (std::popcount(current) >= r_) found_.push_back(Face::from_mask(current));
      return;
    }
    while (candidates) {
      const int v = std::countr_zero(candidates);
      const std::uint64_t bit = std::uint64_t{1} << v;
      const std::uint64_t next = current | bit;
      std::uint64_t next_candidates = 0, next_excluded = 0;
      for (std::uint64_t m = candidates & ~bit; m; m &= m - 1) {
        const int u = std::countr_zero(m);
        if (compatible(next, u)) next_candidates |= std::uint64_t{1} << u;
      }
      for (std::uint64_t m = excluded; m; m &= m - 1) {
        const int u = std::countr_zero(m);
        if (compatible(next, u)) next_excluded |= std::uint64_t{1} << u;
      }
      expand(next, next_candidates, next_excluded);
      candidates &= ~bit;
      excluded |= bit;
    }
  }

  const SimplicialComplex& complex_;
  int r_;
  std::vector<Face> found_;
};

}  // namespace

CliqueDecomposition clique_complex(const SimplicialComplex& complex) {
  auto cliques = HyperBronKerbosch(complex).run();
  return CliqueDecomposition(complex.vertex_count(), complex.facet_size(), std::move(cliques), complex.facets());
}

SimplicialComplex skeleton(const CliqueDecomposition& cliques) {
  std::vector<std::vector<int>> facets;
  for (const auto& c : cliques.cliques())
    for (const auto& f : subsets_of_size(c, static_cast<std::size_t>(cliques.facet_size())))
      facets.push_back(f.vertices());
  return SimplicialComplex(cliques.vertex_count(), cliques.facet_size(), facets);
}

std::vector<Face> i_nonfaces(const CliqueDecomposition& cliques, int i, int card) {
  if (i < 1) throw Error(ErrorCode::InvalidInput, "i-nonfaces need i >= 1");
  if (card < 2) throw Error(ErrorCode::InvalidInput, "i-nonfaces need cardinality >= 2");
  std::vector<Face> out;
  const int m = cliques.vertex_count();
  if (card > m) return out;
  std::vector<int> all(static_cast<std::size_t>(m));
  for (int v = 1; v <= m; ++v) all[v - 1] = v;
  for (const auto& sigma : subsets_of_size(Face(all), static_cast<std::size_t>(card))) {
    if (cliques.contains(sigma)) continue;
    bool is_nonface = false;
    for (int j = 1; j + i <= card && !is_nonface; ++j) {
      bool all_in = true;
      for (int k = 0; k <= i && all_in; ++k)
        all_in = cliques.contains(sigma.without_position(static_cast<std::size_t>(j + k)));
      is_nonface = all_in;
    }
    if (is_nonface) out.push_back(sigma);
  }
  return out;
}

std::vector<std::size_t> f_vector(const CliqueDecomposition& cliques) {
  std::unordered_set<std::uint64_t> faces;
  for (const auto& c : cliques.cliques()) {
    const std::uint64_t full = c.mask();
    // Enumerate all nonempty submasks of the clique.
    for (std::uint64_t s = full; s; s = (s - 1) & full) faces.insert(s);
  }
  std::vector<std::size_t> f(1, 1);
  for (auto mask : faces) {
    const auto k = static_cast<std::size_t>(std::popcount(mask));
    if (f.size() <= k) f.resize(k + 1, 0);
    ++f[k];
  }
  return f;
}

}  // namespace dfilab
