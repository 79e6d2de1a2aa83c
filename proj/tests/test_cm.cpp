#include "doctest.h"

#include "dfilab/cm.hpp"
#include "dfilab/error.hpp"
#include "oracles.hpp"

using namespace dfilab;

namespace {

MonomialIdeal full_minor_leads(int n, int m) {
  const auto ring = oracle::lex_ring(n, m);
  std::vector<int> all(static_cast<std::size_t>(m));
  std::iota(all.begin(), all.end(), 1);
  const RDfi dfi = build_rdfi(SimplicialComplex::from_intervals(m, n, {{1, m}}), n, ring);
  return lead_term_ideal(dfi.polynomials());
}

RDfi make(int n, int m, int r, const std::vector<std::vector<int>>& facets) {
  return build_rdfi(SimplicialComplex(m, r, facets), n, oracle::lex_ring(n, m));
}

}  // namespace

TEST_CASE("heights of small monomial ideals") {
  const auto ring = oracle::lex_ring(1, 3);
  const Monomial x = ring->var({1, 1}), y = ring->var({1, 2}), z = ring->var({1, 3});
  CHECK(height_monomial(MonomialIdeal(ring, {x * y, y * z, z * x})) == 2);
  CHECK(height_monomial(MonomialIdeal(ring, {x})) == 1);
  CHECK(height_monomial(MonomialIdeal(ring, {x * x * y, z * z})) == 2);
  CHECK(height_monomial(MonomialIdeal(ring, {})) == 0);
}

TEST_CASE("initial ideal of maximal minors has height m - n + 1") {
  for (auto [n, m] : {std::pair{2, 3}, {2, 4}, {3, 4}, {3, 5}, {2, 6}}) {
    const MonomialIdeal ideal = full_minor_leads(n, m);
    CHECK(height_monomial(ideal) == m - n + 1);
    CHECK(oracle::brute_height(ideal) == m - n + 1);
  }
}

TEST_CASE("branch and bound height matches exhaustive covers") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const auto ring = oracle::lex_ring(1, 10);
    const MonomialIdeal ideal(ring, oracle::random_squarefree(rng, *ring, 3 + static_cast<std::size_t>(trial % 8), 10));
    CHECK(height_monomial(ideal) == oracle::brute_height(ideal));
  }
}

TEST_CASE("projective dimension and CM verdicts") {
  const auto ring = oracle::lex_ring(1, 2);
  const PdCm single = pd_and_cm(MonomialIdeal(ring, {ring->var({1, 1})}), Field::rationals());
  CHECK(single.pd == 1);
  CHECK(single.ht == 1);
  CHECK(single.is_cm);

  const PdCm two_by_three = pd_and_cm(full_minor_leads(2, 3), Field::rationals());
  CHECK(two_by_three.pd == 2);
  CHECK(two_by_three.ht == 2);
  CHECK(two_by_three.is_cm);

  const auto r44 = oracle::lex_ring(4, 4);
  const RDfi dfi = build_rdfi(SimplicialComplex::from_intervals(4, 3, {{1, 3}, {2, 4}}), 4, r44);
  const PdCm noncm = pd_and_cm(lead_term_ideal(dfi.polynomials()), Field::rationals());
  CHECK(noncm.pd == 4);
  CHECK_FALSE(noncm.is_cm);
  CHECK(noncm.ht < noncm.pd);
}

TEST_CASE("monomial ideal operations") {
  const auto ring = oracle::lex_ring(1, 3);
  const Monomial x = ring->var({1, 1}), y = ring->var({1, 2}), z = ring->var({1, 3});
  const MonomialIdeal a(ring, {x, y}), b(ring, {y, z});
  CHECK(ideal_intersection(a, b).to_string() == "(x_{1,2}, x_{1,1}*x_{1,3})");
  CHECK(ideal_product(a, b).size() == 4);
  CHECK(ideal_sum(a, b).size() == 3);
}

TEST_CASE("sum criterion: disjoint supports") {
  const auto ring = oracle::lex_ring(2, 4);
  const auto report = cm_sum_criterion({minor(ring, {1, 2}, {1, 2})}, {minor(ring, {1, 2}, {3, 4})});
  CHECK(report.intersection_is_meet);
  CHECK(report.meet_is_product);
  CHECK(report.i_cm.is_cm);
  CHECK(report.j_cm.is_cm);
  CHECK(report.concludes_cm());
  CHECK(report.sum_cm->pd == 2);
}

TEST_CASE("sum criterion: two cliques sharing one vertex") {
  const RDfi a = make(3, 5, 3, {{1, 2, 3}});
  const RDfi b = build_rdfi(SimplicialComplex(5, 3, {{3, 4, 5}}), 3, a.ring);
  const auto report = cm_sum_criterion(a.polynomials(), b.polynomials());
  CHECK(report.intersection_is_meet);
  CHECK(report.meet_is_product);
  CHECK(report.concludes_cm());
}

TEST_CASE("sum criterion: I = J fails the product equality") {
  const auto ring = oracle::lex_ring(2, 3);
  const std::vector<Polynomial> gens = {minor(ring, {1, 2}, {1, 2}), minor(ring, {1, 2}, {1, 3}), minor(ring, {1, 2}, {2, 3})};
  const auto report = cm_sum_criterion(gens, gens);
  CHECK(report.intersection_is_meet);
  CHECK_FALSE(report.meet_is_product);
  CHECK_FALSE(report.sum_cm);
}

TEST_CASE("sum criterion rejects inhomogeneous input") {
  const auto ring = oracle::lex_ring(1, 2);
  const Polynomial x = Polynomial::term(ring, ring->var({1, 1}), FieldElement::one(ring->field()));
  const Polynomial one = Polynomial::term(ring, ring->one(), FieldElement::one(ring->field()));
  CHECK_THROWS_AS(cm_sum_criterion({x + one}, {x}), Error);
}

TEST_CASE("small clique intersections give Cohen-Macaulay facet ideals") {
  for (const auto& facets : {std::vector<std::vector<int>>{{1, 2, 3}, {4, 5, 6}}, {{1, 2, 3}, {3, 4, 5}}}) {
    const RDfi dfi = make(3, 6, 3, facets);
    const CmVerdict v = cor_cmness_check(dfi);
    CHECK(v.hypothesis == "lcm-closed");
    CHECK(v.coprime_cross_leads);
    CHECK(v.cm_initial);
    CHECK(v.pd == v.ht);
    CHECK(v.tensor_matches);
  }
  const CmVerdict serial = cor_cmness_check(make(3, 5, 3, {{1, 2, 3}, {3, 4, 5}}), Exec::Serial);
  const CmVerdict parallel = cor_cmness_check(make(3, 5, 3, {{1, 2, 3}, {3, 4, 5}}), Exec::Parallel);
  CHECK(serial.pd == parallel.pd);
}

TEST_CASE("unit intervals under the overlap bound") {
  // r = 2, n = 2: bound max(0, 1) = 1, path cliques share one vertex
  const RDfi dfi = build_rdfi(SimplicialComplex::from_intervals(5, 2, {{1, 3}, {3, 5}}), 2, oracle::lex_ring(2, 5));
  const CmVerdict v = cor_cmness_check(dfi);
  CHECK(v.cm_initial);
  CHECK(v.coprime_cross_leads);
}

TEST_CASE("large clique intersections fail the hypothesis") {
  const RDfi dfi = build_rdfi(SimplicialComplex::from_intervals(4, 3, {{1, 3}, {2, 4}}), 4, oracle::lex_ring(4, 4));
  CHECK_THROWS_WITH_AS(cor_cmness_check(dfi), doctest::Contains("HypothesisFailed"), Error);
}
