#include "dfilab/cm.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "dfilab/error.hpp"
#include "dfilab/groebner.hpp"

namespace dfilab {

namespace {

using Mask = std::vector<std::uint64_t>;

Mask support_mask(const Monomial& mono, std::size_t words) {
  Mask mask(words, 0);
  for (std::size_t v = 0; v < mono.nvars(); ++v)
    if (mono[v]) mask[v / 64] |= std::uint64_t{1} << (v % 64);
  return mask;
}

bool meets(const Mask& a, const Mask& b) {
  for (std::size_t w = 0; w < a.size(); ++w)
    if (a[w] & b[w]) return true;
  return false;
}

struct CoverSearch {
  std::vector<Mask> edges;
  std::size_t words;
  int best;

  void run(Mask chosen, int size) {
    if (size >= best) return;
    const Mask* open = nullptr;
    for (const auto& e : edges)
      if (!meets(e, chosen)) {
        open = &e;
        break;
      }
    if (!open) {
      best = size;
      return;
    }
    if (size + 1 >= best) return;
    for (std::size_t w = 0; w < words; ++w)
      for (std::uint64_t bits = (*open)[w]; bits; bits &= bits - 1) {
        Mask next = chosen;
        next[w] |= bits & -bits;
        run(std::move(next), size + 1);
      }
  }
};

int greedy_cover(const std::vector<Mask>& edges, std::size_t nvars) {
  std::vector<bool> covered(edges.size(), false);
  int size = 0;
  for (;;) {
    std::size_t best_v = nvars, best_hits = 0;
    for (std::size_t v = 0; v < nvars; ++v) {
      std::size_t hits = 0;
      for (std::size_t e = 0; e < edges.size(); ++e)
        if (!covered[e] && (edges[e][v / 64] >> (v % 64) & 1)) ++hits;
      if (hits > best_hits) best_hits = hits, best_v = v;
    }
    if (best_hits == 0) return size;
    ++size;
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (edges[e][best_v / 64] >> (best_v % 64) & 1) covered[e] = true;
  }
}

}  // namespace

int height_monomial(const MonomialIdeal& ideal) {
  if (ideal.generators().empty()) return 0;
  const std::size_t nvars = ideal.ring()->nvars();
  const std::size_t words = (nvars + 63) / 64;
  std::vector<Mask> edges;
  for (const auto& g : ideal.generators()) {
    if (g.is_one()) throw Error(ErrorCode::InvalidInput, "unit ideal has no height");
    edges.push_back(support_mask(g, words));
  }
  // Small edges first: branching on them keeps the tree narrow.
  std::sort(edges.begin(), edges.end(), [](const Mask& a, const Mask& b) {
    int ca = 0, cb = 0;
    for (auto w : a) ca += std::popcount(w);
    for (auto w : b) cb += std::popcount(w);
    return ca < cb;
  });
  CoverSearch search{edges, words, greedy_cover(edges, nvars) + 1};
  search.run(Mask(words, 0), 0);
  return search.best;
}

PdCm pd_and_cm(const MonomialIdeal& ideal, const Field& field, Exec exec, const Caps& caps) {
  PdCm out;
  out.ht = height_monomial(ideal);
  out.pd = gpw_betti(ideal, field, exec, caps).projective_dimension();
  if (out.ht > out.pd) throw std::logic_error("height exceeds projective dimension");
  out.is_cm = out.pd == out.ht;
  return out;
}

MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f.lcm(g));
  return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.ring(), std::move(gens));
}

SumCriterionReport cm_sum_criterion(const std::vector<Polynomial>& i_gens, const std::vector<Polynomial>& j_gens,
                                    Exec exec, const Caps& caps) {
  for (const auto* side : {&i_gens, &j_gens})
    for (const auto& p : *side)
      if (!p.is_homogeneous()) throw Error(ErrorCode::InvalidInput, "generators must be homogeneous: " + p.to_string());
  if (i_gens.empty() || j_gens.empty()) throw Error(ErrorCode::InvalidInput, "both ideals need generators");
  const RingPtr ring = i_gens.front().ring();

  const GroebnerBasis gi = buchberger(i_gens, caps.buchberger_steps);
  const GroebnerBasis gj = buchberger(j_gens, caps.buchberger_steps);
  const auto meet_gens = intersect(i_gens, j_gens, caps.buchberger_steps);
  std::vector<Monomial> meet_leads;
  if (!meet_gens.empty()) meet_leads = buchberger(meet_gens, caps.buchberger_steps).lead_monomials();

  SumCriterionReport report{MonomialIdeal(ring, gi.lead_monomials()), MonomialIdeal(ring, gj.lead_monomials()),
                            MonomialIdeal(ring, std::move(meet_leads)), false, false, {}, {}, {}};
  const MonomialIdeal meet = ideal_intersection(report.in_i, report.in_j);
  report.intersection_is_meet = report.in_intersection.generators() == meet.generators();
  report.meet_is_product = meet.generators() == ideal_product(report.in_i, report.in_j).generators();
  report.i_cm = pd_and_cm(report.in_i, ring->field(), exec, caps);
  report.j_cm = pd_and_cm(report.in_j, ring->field(), exec, caps);
  if (report.intersection_is_meet && report.meet_is_product && report.i_cm.is_cm && report.j_cm.is_cm)
    report.sum_cm = pd_and_cm(ideal_sum(report.in_i, report.in_j), ring->field(), exec, caps);
  return report;
}

CmVerdict cor_cmness_check(const RDfi& dfi, Exec exec, const Caps& caps) {
  CmVerdict verdict;
  const auto profile = clique_intersection_profile(dfi);
  verdict.max_intersection = profile.max;
  const auto r = static_cast<std::size_t>(dfi.r);
  const auto unit_bound = static_cast<std::size_t>(std::max(0, 2 * dfi.r - dfi.n - 1));
  if (profile.max <= r - 1 && is_lcm_closed(dfi, exec).verdict) {
    verdict.hypothesis = "lcm-closed";
  } else if (profile.max <= unit_bound && is_unit_interval(dfi) &&
             is_diagonal(dfi.ring->order(), dfi.n, dfi.m)) {
    verdict.hypothesis = "unit-interval";
  } else {
    throw Error(ErrorCode::HypothesisFailed,
                "needs lcm-closed with clique intersections <= " + std::to_string(r - 1) +
                    ", or unit interval under a diagonal order with intersections <= " + std::to_string(unit_bound) +
                    "; largest intersection is " + std::to_string(profile.max));
  }

  const auto& cliques = dfi.cliques.cliques();
  std::vector<std::vector<std::size_t>> owned;
  for (const auto& c : cliques) owned.push_back(dfi.generators_within(c.mask()));
  for (std::size_t a = 0; a < owned.size() && verdict.coprime_cross_leads; ++a)
    for (std::size_t b = a + 1; b < owned.size() && verdict.coprime_cross_leads; ++b)
      for (auto ga : owned[a])
        for (auto gb : owned[b])
          if (!dfi.generators[ga].lead.coprime(dfi.generators[gb].lead)) verdict.coprime_cross_leads = false;

  const Field& field = dfi.ring->field();
  const MonomialIdeal lead_ideal = lead_term_ideal(dfi.polynomials());
  const PdCm pc = pd_and_cm(lead_ideal, field, exec, caps);
  verdict.ht = pc.ht;
  verdict.pd = pc.pd;
  verdict.cm_initial = pc.is_cm;

  std::optional<BettiTable> product;
  for (const auto& gens : owned) {
    std::vector<Monomial> leads;
    for (auto g : gens) leads.push_back(dfi.generators[g].lead);
    BettiTable t = gpw_betti(MonomialIdeal(dfi.ring, std::move(leads)), field, exec, caps);
    product = product ? tensor(*product, t) : std::move(t);
  }
  verdict.tensor_matches = product && *product == gpw_betti(lead_ideal, field, exec, caps);
  verdict.cm_transfer_note = verdict.cm_initial
                                 ? "initial ideal is Cohen-Macaulay, hence so is the determinantal facet ideal"
                                 : "initial ideal is not Cohen-Macaulay; no conclusion transfers to the original ideal";
  return verdict;
}

}  // namespace dfilab
