#include "doctest.h"

#include "dfilab/error.hpp"
#include "dfilab/simplicial.hpp"
#include "oracles.hpp"

using namespace dfilab;

TEST_CASE("faces sort their vertices and reject bad labels") {
  const Face f(std::vector<int>{4, 1, 2});
  CHECK(f.vertices() == std::vector<int>{1, 2, 4});
  CHECK(f.to_string() == "{1,2,4}");
  CHECK(f.at(3) == 4);
  CHECK(f.without_position(2) == Face{1, 4});
  CHECK(Face::from_mask(f.mask()) == f);
  CHECK_THROWS_AS(Face(std::vector<int>{1, 1}), Error);
  CHECK_THROWS_AS(Face(std::vector<int>{0, 2}), Error);
}

TEST_CASE("complexes must be pure and inside [m]") {
  CHECK_THROWS_WITH_AS(SimplicialComplex(4, 3, {{1, 2, 3}, {3, 4}}), doctest::Contains("NotPure"), Error);
  CHECK_THROWS_AS(SimplicialComplex(4, 2, {{1, 5}}), Error);
  const SimplicialComplex dup(4, 2, {{1, 2}, {2, 1}, {3, 4}});
  CHECK(dup.facets().size() == 2);
}

TEST_CASE("intervals expand to all r-subsets of each run") {
  const auto c = SimplicialComplex::from_intervals(5, 3, {{1, 4}, {2, 5}});
  // C(4,3) + C(4,3) - C(3,3) shared
  CHECK(c.facets().size() == 7);
  const auto cliques = clique_complex(c);
  REQUIRE(cliques.cliques().size() == 2);
  CHECK(cliques.cliques()[0] == Face{1, 2, 3, 4});
  CHECK(cliques.cliques()[1] == Face{2, 3, 4, 5});
}

TEST_CASE("clique decomposition matches subset enumeration") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = 4 + trial % 4;
    const int r = 2 + trial % 2;
    const auto complex = oracle::random_complex(rng, m, r, 0.55);
    const auto cliques = clique_complex(complex);
    std::vector<std::uint64_t> got;
    for (const auto& c : cliques.cliques()) got.push_back(c.mask());
    CHECK(got == oracle::brute_cliques(complex));
    for (std::size_t f = 0; f < complex.facets().size(); ++f)
      for (auto c : cliques.cliques_of_facet(f)) CHECK(complex.facets()[f].is_subset_of(cliques.cliques()[c]));
  }
}

TEST_CASE("graph cliques and their 1-nonfaces") {
  const auto g1 = clique_complex(SimplicialComplex(4, 3, {{1, 2, 4}, {1, 3, 4}}));
  CHECK(i_nonfaces(g1, 1, 4) == std::vector<Face>{Face{1, 2, 3, 4}});

  const auto g2 = clique_complex(SimplicialComplex(4, 3, {{1, 2, 3}, {2, 3, 4}}));
  CHECK(i_nonfaces(g2, 1, 4).empty());
  CHECK(i_nonfaces(g2, 1, 3).empty());

  const auto g3 = clique_complex(SimplicialComplex(4, 3, {{1, 2, 4}, {2, 3, 4}}));
  CHECK(i_nonfaces(g3, 1, 4).empty());
  const auto three = i_nonfaces(g3, 1, 3);
  CHECK(std::find(three.begin(), three.end(), Face{1, 3, 4}) != three.end());
}

TEST_CASE("i-nonfaces agree with the definition") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 5 + trial % 3;
    const auto cliques = clique_complex(oracle::random_complex(rng, m, 3, 0.4));
    for (int i = 1; i <= 2; ++i)
      for (int card = i + 2; card <= m; ++card) {
        std::vector<std::uint64_t> got;
        for (const auto& f : i_nonfaces(cliques, i, card)) got.push_back(f.mask());
        CHECK(got == oracle::brute_nonfaces(cliques, i, card));
      }
  }
}

TEST_CASE("i-nonfaces validate their arguments") {
  const auto g = clique_complex(SimplicialComplex(3, 2, {{1, 2}}));
  CHECK_THROWS_AS(i_nonfaces(g, 0, 3), Error);
  CHECK_THROWS_AS(i_nonfaces(g, 1, 1), Error);
}

TEST_CASE("f-vector of a simplex and of two glued simplices") {
  const auto single = clique_complex(SimplicialComplex::from_intervals(4, 2, {{1, 4}}));
  CHECK(f_vector(single) == std::vector<std::size_t>{1, 4, 6, 4, 1});
  const auto two = clique_complex(SimplicialComplex::from_intervals(5, 3, {{1, 4}, {2, 5}}));
  // faces of {1234} and {2345}, shared faces of {234} counted once
  CHECK(f_vector(two) == std::vector<std::size_t>{1, 5, 9, 7, 2});
}

TEST_CASE("skeleton of a clique complex recovers the facets") {
  const SimplicialComplex c(5, 2, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}});
  const auto sk = skeleton(clique_complex(c));
  CHECK(sk.facets() == c.facets());
  CHECK(subsets_of_size(Face{1, 2, 3}, 2) == std::vector<Face>{Face{1, 2}, Face{1, 3}, Face{2, 3}});
}
