#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dfilab/algebra.hpp"
#include "dfilab/caps.hpp"
#include "dfilab/dfi.hpp"
#include "dfilab/lcmlattice.hpp"

namespace dfilab {

/// Height of a monomial ideal: the least number of variables meeting the
/// support of every generator (exact branch and bound). Exponents are
/// ignored, so this is the height of the radical, which is the same.
int height_monomial(const MonomialIdeal& ideal);

struct PdCm {
  int pd = 0;
  int ht = 0;
  bool is_cm = true;
};

/// pd(S/M) from gpw_betti and ht(M); Cohen-Macaulay iff they agree.
PdCm pd_and_cm(const MonomialIdeal& ideal, const Field& field, Exec exec = Exec::Serial, const Caps& caps = Caps{});

/// Monomial ideals built from minimal generators.
MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);

struct SumCriterionReport {
  MonomialIdeal in_i;
  MonomialIdeal in_j;
  MonomialIdeal in_intersection;  // in(I ∩ J)
  bool intersection_is_meet = false;  // in(I ∩ J) = in(I) ∩ in(J)
  bool meet_is_product = false;       // in(I) ∩ in(J) = in(I) in(J)
  PdCm i_cm;
  PdCm j_cm;
  /// in(I) + in(J) when both equalities hold and both initial ideals are CM.
  std::optional<PdCm> sum_cm;
  bool concludes_cm() const { return sum_cm && sum_cm->is_cm; }
};

/// Tests the initial-ideal conditions under which CM of I and J passes to
/// I + J, in the term order of the generators' ring. Both inputs must be
/// homogeneous (else InvalidInput).
SumCriterionReport cm_sum_criterion(const std::vector<Polynomial>& i_gens, const std::vector<Polynomial>& j_gens,
                                    Exec exec = Exec::Serial, const Caps& caps = Caps{});

struct CmVerdict {
  std::string hypothesis;          // "lcm-closed" or "unit-interval"
  std::size_t max_intersection = 0;
  bool coprime_cross_leads = true;
  int ht = 0;
  int pd = 0;
  bool cm_initial = false;
  bool tensor_matches = false;      // lead-term Betti table = tensor of per-clique tables
  std::string cm_transfer_note;
};

/// Small-intersection CM check for an r-DFI. Requires either lcm-closed with
/// pairwise clique intersections of at most r-1 vertices, or unit interval
/// under a diagonal order with intersections of at most max(0, 2r-n-1);
/// otherwise HypothesisFailed. Verifies coprime lead terms across cliques,
/// then CM of the lead-term ideal.
CmVerdict cor_cmness_check(const RDfi& dfi, Exec exec = Exec::Serial, const Caps& caps = Caps{});

}  // namespace dfilab
