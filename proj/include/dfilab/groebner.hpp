#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "dfilab/algebra.hpp"
#include "dfilab/caps.hpp"
#include "dfilab/simplicial.hpp"

namespace dfilab {

/// Reduced Groebner basis: monic, no lead divides another, tails reduced.
/// Elements are sorted by lead monomial, largest first.
struct GroebnerBasis {
  RingPtr ring;
  std::vector<Polynomial> elements;

  std::vector<Monomial> lead_monomials() const;
};

/// Remainder of f on full division by `divisors` (any lead coefficients).
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors);

/// S-polynomial lcm/lt(f) * f / lc(f) - lcm/lt(g) * g / lc(g).
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Buchberger's algorithm with normal selection (smallest lcm degree
/// first), the coprime and chain criteria, top reduction in the main loop
/// and full inter-reduction at the end. Each reduction step counts against
/// `budget`; running out raises BudgetExceeded. Zero inputs are ignored;
/// an all-zero input raises InvalidInput.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, std::size_t budget = Caps{}.buchberger_steps);

struct GroebnerCheck {
  bool is_groebner = true;
  std::optional<std::pair<std::size_t, std::size_t>> failing_pair;  // indices into the input
  std::optional<Polynomial> remainder;                              // nonzero normal form of its S-polynomial
};

/// Buchberger criterion on the given set as is: every S-polynomial reduces
/// to zero modulo the set. Reports the first failing pair in (i, j) order.
GroebnerCheck is_groebner(const std::vector<Polynomial>& gens);

/// Generators of (I) ∩ (J) via t*I + (1-t)*J in one extra variable t,
/// eliminated by a block order with t first. Output is the t-free part of
/// the reduced Groebner basis, moved back to the original ring.
std::vector<Polynomial> intersect(const std::vector<Polynomial>& i_gens, const std::vector<Polynomial>& j_gens,
                                  std::size_t budget = Caps{}.buchberger_steps);

struct ConcaWitness {
  std::size_t f;
  std::size_t g;
  Monomial lcm;
  std::optional<Polynomial> h;  // element of I ∩ J with lead monomial lcm
};

struct ConcaReport {
  bool holds = true;
  std::vector<ConcaWitness> pairs;  // one per (f, g), f-major
};

/// For every f in F, g in G: is lcm(in f, in g) the lead monomial of some
/// element of (F) ∩ (G)? Decided through a Groebner basis of the
/// intersection; when F and G are Groebner bases this is equivalent to F ∪ G
/// being a Groebner basis of (F) + (G).
ConcaReport conca_pair_check(const std::vector<Polynomial>& f_gens, const std::vector<Polynomial>& g_gens,
                             std::size_t budget = Caps{}.buchberger_steps);

struct SearchRow {
  int m;
  std::vector<Face> facets;
  bool unit_interval;
  bool lcm_closed;
  bool groebner;
  bool counterexample;      // generators form a Groebner basis without being lcm-closed
  bool theorem_violation;   // lcm-closed yet not a Groebner basis (must never happen)
};

struct SearchResult {
  std::vector<SearchRow> rows;
  bool truncated = false;  // stopped at the complex-count cap
};

struct SearchOptions {
  int r = 2;
  int n = 2;
  int m_max = 3;
  bool intervals_only = false;
  std::size_t max_complexes = Caps{}.search_complexes;
  std::function<TermOrder(int, int)> order = TermOrder::row_major_lex;
  Field field = Field::rationals();
};

/// Enumerates every pure (r-1)-dimensional complex whose largest vertex is
/// m, for m = r..m_max, and tabulates lcm-closed against Groebner. Complexes
/// are not identified up to relabeling: diagonal orders are not symmetric
/// under vertex permutations. Requires r = n.
SearchResult necessity_search(const SearchOptions& options, Exec exec = Exec::Serial);

}  // namespace dfilab
