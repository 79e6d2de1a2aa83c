#include "selftest.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "dfilab/cm.hpp"
#include "dfilab/dfi.hpp"
#include "dfilab/encomplex.hpp"
#include "dfilab/error.hpp"
#include "dfilab/groebner.hpp"
#include "dfilab/lcmlattice.hpp"

namespace dfilab::cli {

namespace {

RDfi rdfi_from_facets(int n, int m, int r, const std::vector<std::vector<int>>& facets) {
  auto ring = PolyRing::make(n, m, Field::rationals(), TermOrder::row_major_lex(n, m));
  return build_rdfi(SimplicialComplex(m, r, facets), n, ring);
}

RDfi rdfi_from_intervals(int n, int m, int r, const std::vector<std::pair<int, int>>& intervals) {
  auto ring = PolyRing::make(n, m, Field::rationals(), TermOrder::row_major_lex(n, m));
  return build_rdfi(SimplicialComplex::from_intervals(m, r, intervals), n, ring);
}

}  // namespace

int run_selftest(std::ostream& out) {
  std::vector<std::pair<std::string, std::function<bool()>>> checks = {
      {"index set (1,1,1) on 1..6",
       [] {
         return index_set({1, 1, 1}, Face{1, 2, 3, 4, 5, 6}) ==
                std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 3}, {2, 4}, {3, 5}, {3, 6}};
       }},
      {"index set (1,0,2) on 1..6",
       [] {
         return index_set({1, 0, 2}, Face{1, 2, 3, 4, 5, 6}) ==
                std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {3, 4}, {3, 5}, {3, 6}};
       }},
      {"index set (2,1) on 1,2,4,5,6",
       [] {
         return index_set({2, 1}, Face{1, 2, 4, 5, 6}) ==
                std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {1, 4}, {2, 5}, {2, 6}};
       }},
      {"m_4((1,2,1); 1234)",
       [] {
         auto ring = PolyRing::make(3, 5, Field::rationals(), TermOrder::row_major_lex(3, 5));
         return ring->render(m_k_monomial(*ring, {1, 2, 1}, Face{1, 2, 3, 4})) == "x_{1,1}*x_{2,2}*x_{2,3}*x_{3,4}";
       }},
      {"1234 u 2345 is lcm-closed", [] { return is_lcm_closed(rdfi_from_intervals(3, 5, 3, {{1, 4}, {2, 5}})).verdict; }},
      {"1234 u 2345 generators are a Groebner basis",
       [] { return is_groebner(rdfi_from_intervals(3, 5, 3, {{1, 4}, {2, 5}}).polynomials()).is_groebner; }},
      {"[1,2] u [2,3], r=2, n=3 is not lcm-closed",
       [] { return !is_lcm_closed(rdfi_from_intervals(3, 3, 2, {{1, 2}, {2, 3}})).verdict; }},
      {"[1,2] u [2,3], r=2, n=3 generators are a Groebner basis",
       [] { return is_groebner(rdfi_from_intervals(3, 3, 2, {{1, 2}, {2, 3}}).polynomials()).is_groebner; }},
      {"three petals generators are not a Groebner basis",
       [] { return !is_groebner(rdfi_from_facets(3, 7, 3, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}}).polynomials()).is_groebner; }},
      {"three petals have no 1-nonfaces of cardinality 4",
       [] {
         return i_nonfaces(clique_complex(SimplicialComplex(7, 3, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}})), 1, 4).empty();
       }},
      {"graph 124,134 has the 1-nonface 1234",
       [] {
         const auto nf = i_nonfaces(clique_complex(SimplicialComplex(4, 3, {{1, 2, 4}, {1, 3, 4}})), 1, 4);
         return nf.size() == 1 && nf[0] == Face{1, 2, 3, 4};
       }},
      {"graph 124,234 has the 1-nonface 134 and none of cardinality 4",
       [] {
         const auto cliques = clique_complex(SimplicialComplex(4, 3, {{1, 2, 4}, {2, 3, 4}}));
         const auto three = i_nonfaces(cliques, 1, 3);
         return i_nonfaces(cliques, 1, 4).empty() &&
                std::find(three.begin(), three.end(), Face{1, 3, 4}) != three.end();
       }},
      {"[1,3] u [2,4], n=4, r=3 lead-term Betti table",
       [] {
         const RDfi dfi = rdfi_from_intervals(4, 4, 3, {{1, 3}, {2, 4}});
         const BettiTable t = gpw_betti(lead_term_ideal(dfi.polynomials()), Field::rationals());
         const std::vector<std::size_t> totals{1, 8, 17, 16, 6};
         for (int i = 0; i <= 4; ++i)
           if (t.total(i) != totals[static_cast<std::size_t>(i)]) return false;
         return t.projective_dimension() == 4 && t.coarse(1, 3) == 8 && t.coarse(2, 4) == 7 && t.coarse(2, 6) == 10 &&
                t.coarse(3, 7) == 16 && t.coarse(4, 8) == 6;
       }},
      {"123 u 345, r=n=3 is Cohen-Macaulay",
       [] {
         const CmVerdict v = cor_cmness_check(rdfi_from_facets(3, 5, 3, {{1, 2, 3}, {3, 4, 5}}));
         return v.coprime_cross_leads && v.cm_initial && v.pd == v.ht;
       }},
      {"[1,3] u [2,4], n=4, r=3 fails the small-intersection hypothesis",
       [] {
         try {
           cor_cmness_check(rdfi_from_intervals(4, 4, 3, {{1, 3}, {2, 4}}));
         } catch (const Error& e) {
           return e.code() == ErrorCode::HypothesisFailed;
         }
         return false;
       }},
  };
  int failures = 0;
  for (const auto& [name, check] : checks) {
    bool ok = false;
    std::string note;
    try {
      ok = check();
    } catch (const std::exception& e) {
      note = std::string(" (") + e.what() + ")";
    }
    if (!ok) ++failures;
    out << (ok ? "[PASS] " : "[FAIL] ") << name << note << '\n';
  }
  out << (checks.size() - static_cast<std::size_t>(failures)) << '/' << checks.size() << " passed\n";
  return failures;
}

}  // namespace dfilab::cli
