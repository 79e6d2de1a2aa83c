#include "dfilab/dfi.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "dfilab/error.hpp"
#include "dfilab/parallel.hpp"

namespace dfilab {

std::string MinorIndex::to_string() const {
  std::string out = "[";
  for (std::size_t k = 0; k < rows.size(); ++k) out += (k ? "," : "") + std::to_string(rows[k]);
  out += "|";
  for (std::size_t k = 0; k < cols.size(); ++k) out += (k ? "," : "") + std::to_string(cols.at(k + 1));
  return out + "]";
}

std::vector<Polynomial> RDfi::polynomials() const {
  std::vector<Polynomial> out;
  out.reserve(generators.size());
  for (const auto& g : generators) out.push_back(g.poly);
  return out;
}

std::vector<std::size_t> RDfi::generators_within(std::uint64_t vertex_mask) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < generators.size(); ++k)
    if ((generators[k].index.cols.mask() & ~vertex_mask) == 0) out.push_back(k);
  return out;
}

RDfi build_rdfi(const SimplicialComplex& complex, int n, const RingPtr& ring) {
  const int r = complex.facet_size();
  const int m = complex.vertex_count();
  if (r > n) throw Error(ErrorCode::RankTooLarge, "r=" + std::to_string(r) + " exceeds n=" + std::to_string(n));
  if (ring->n() != n || ring->m() != m)
    throw Error(ErrorCode::InvalidInput, "ring shape " + std::to_string(ring->n()) + "x" + std::to_string(ring->m()) +
                                             " does not match n=" + std::to_string(n) + ", m=" + std::to_string(m));
  if (n > m) throw Error(ErrorCode::InvalidInput, "need n <= m");

  std::vector<int> all_rows(static_cast<std::size_t>(n));
  std::iota(all_rows.begin(), all_rows.end(), 1);
  const auto row_sets = subsets_of_size(Face(all_rows), static_cast<std::size_t>(r));

  RDfi dfi{n, m, r, complex, clique_complex(complex), ring, {}};
  for (const auto& facet : complex.facets())
    for (const auto& rows : row_sets) {
      Polynomial p = minor(ring, rows.vertices(), facet.vertices());
      Monomial lead = p.lead_monomial();
      dfi.generators.push_back({{rows.vertices(), facet}, std::move(p), std::move(lead)});
    }
  return dfi;
}

namespace {

// Generators of J_{clique a} and J_{clique b} for one ordered clique pair,
// with the intersection generators used to resolve non-coprime pairs.
struct CliquePair {
  std::size_t a;
  std::size_t b;
  std::vector<std::size_t> from_a;  // excluding intersection generators
  std::vector<std::size_t> from_b;
  std::vector<std::size_t> shared;
};

std::vector<LcmWitness> check_row(const RDfi& dfi, const CliquePair& pair, std::size_t ga) {
  std::vector<LcmWitness> out;
  const auto& g = dfi.generators[ga];
  for (auto gb : pair.from_b) {
    const auto& h = dfi.generators[gb];
    if (g.lead.coprime(h.lead)) continue;
    LcmWitness w{pair.a, pair.b, g.index, h.index, g.lead.lcm(h.lead), std::nullopt};
    for (auto c : pair.shared)
      if (dfi.generators[c].lead.divides(w.lcm)) {
        w.resolver = dfi.generators[c].index;
        break;
      }
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace

ConditionReport is_lcm_closed(const RDfi& dfi, Exec exec) {
  const auto& cliques = dfi.cliques.cliques();
  std::vector<CliquePair> pairs;
  for (std::size_t a = 0; a < cliques.size(); ++a)
    for (std::size_t b = a + 1; b < cliques.size(); ++b) {
      const std::uint64_t inter = cliques[a].mask() & cliques[b].mask();
      CliquePair p{a, b, {}, {}, dfi.generators_within(inter)};
      for (auto k : dfi.generators_within(cliques[a].mask()))
        if (!std::binary_search(p.shared.begin(), p.shared.end(), k)) p.from_a.push_back(k);
      for (auto k : dfi.generators_within(cliques[b].mask()))
        if (!std::binary_search(p.shared.begin(), p.shared.end(), k)) p.from_b.push_back(k);
      pairs.push_back(std::move(p));
    }

  // Flatten to (pair, generator-from-a) tasks so the work splits evenly.
  std::vector<std::pair<std::size_t, std::size_t>> tasks;
  for (std::size_t p = 0; p < pairs.size(); ++p)
    for (auto ga : pairs[p].from_a) tasks.emplace_back(p, ga);

  std::vector<std::vector<LcmWitness>> found(tasks.size());
  for_each_index(tasks.size(), exec,
                 [&](std::size_t t) { found[t] = check_row(dfi, pairs[tasks[t].first], tasks[t].second); });

  ConditionReport report;
  report.order = dfi.ring->order().describe(dfi.n, dfi.m);
  std::vector<LcmWitness> resolved;
  for (auto& list : found)
    for (auto& w : list) {
      if (w.resolver) {
        resolved.push_back(std::move(w));
      } else {
        report.verdict = false;
        report.witnesses.push_back(std::move(w));
      }
    }
  for (auto& w : resolved) report.witnesses.push_back(std::move(w));
  return report;
}

bool is_unit_interval(const RDfi& dfi) {
  for (const auto& c : dfi.cliques.cliques()) {
    if (c.empty()) continue;
    if (c.vertices().back() - c.vertices().front() + 1 != static_cast<int>(c.size())) return false;
  }
  return true;
}

bool is_closed_bei(const RDfi& dfi) {
  if (dfi.r != 2 || dfi.n != 2) throw Error(ErrorCode::WrongShape, "closed-graph check needs r = n = 2");
  const auto& edges = dfi.complex.facets();
  auto has_edge = [&](int u, int v) { return dfi.complex.has_facet(Face{u, v}.mask()); };
  for (std::size_t x = 0; x < edges.size(); ++x)
    for (std::size_t y = 0; y < edges.size(); ++y) {
      if (x == y) continue;
      const int i = edges[x].at(1), j = edges[x].at(2), k = edges[y].at(1), l = edges[y].at(2);
      if (i == k && !has_edge(std::min(j, l), std::max(j, l))) return false;
      if (j == l && !has_edge(std::min(i, k), std::max(i, k))) return false;
    }
  return true;
}

bool is_closed_dfi(const RDfi& dfi) {
  if (dfi.r != dfi.n) throw Error(ErrorCode::WrongShape, "closed-DFI check needs r = n");
  const auto profile = clique_intersection_profile(dfi);
  if (profile.max > static_cast<std::size_t>(dfi.n - 1))
    throw Error(ErrorCode::LozengeViolated, "two maximal cliques share " + std::to_string(profile.max) + " vertices");
  const auto& cliques = dfi.cliques.cliques();
  for (std::size_t a = 0; a < cliques.size(); ++a)
    for (std::size_t b = a + 1; b < cliques.size(); ++b)
      for (auto x : dfi.generators_within(cliques[a].mask()))
        for (auto y : dfi.generators_within(cliques[b].mask()))
          if (!dfi.generators[x].lead.coprime(dfi.generators[y].lead)) return false;
  return true;
}

IntersectionProfile clique_intersection_profile(const RDfi& dfi) {
  IntersectionProfile profile;
  const auto& cliques = dfi.cliques.cliques();
  for (std::size_t a = 0; a < cliques.size(); ++a)
    for (std::size_t b = a + 1; b < cliques.size(); ++b) {
      const auto shared = static_cast<std::size_t>(std::popcount(cliques[a].mask() & cliques[b].mask()));
      profile.table.push_back({a, b, shared});
      profile.max = std::max(profile.max, shared);
    }
  return profile;
}

std::vector<OrderSweepEntry> lcm_closed_row_permutation_sweep(const SimplicialComplex& complex, int n,
                                                              const Field& field, Exec exec) {
  std::vector<OrderSweepEntry> out;
  std::vector<int> rows(static_cast<std::size_t>(n));
  std::iota(rows.begin(), rows.end(), 1);
  do {
    TermOrder order = TermOrder::row_permuted_lex(complex.vertex_count(), rows);
    const bool diagonal = is_diagonal(order, n, complex.vertex_count());
    auto ring = PolyRing::make(n, complex.vertex_count(), field, std::move(order));
    out.push_back({rows, diagonal, is_lcm_closed(build_rdfi(complex, n, ring), exec)});
  } while (std::next_permutation(rows.begin(), rows.end()));
  return out;
}

}  // namespace dfilab
