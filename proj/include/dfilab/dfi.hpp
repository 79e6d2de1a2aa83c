#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dfilab/algebra.hpp"
#include "dfilab/caps.hpp"
#include "dfilab/simplicial.hpp"

namespace dfilab {

/// Row and column index sets of a minor, printed as "[1,2|1,3]".
struct MinorIndex {
  std::vector<int> rows;
  Face cols;
  std::string to_string() const;
  friend bool operator==(const MinorIndex&, const MinorIndex&) = default;
};

struct Generator {
  MinorIndex index;
  Polynomial poly;
  Monomial lead;
};

/// Ideal of r-minors [a|b] of the generic n x m matrix, b a facet of the
/// complex, together with the clique decomposition of the complex.
struct RDfi {
  int n;
  int m;
  int r;
  SimplicialComplex complex;
  CliqueDecomposition cliques;
  RingPtr ring;
  std::vector<Generator> generators;  // facets lexicographic, rows lexicographic within a facet

  /// Polynomials only, in generator order.
  std::vector<Polynomial> polynomials() const;
  /// Indices of generators whose column set lies inside `vertex_mask`.
  std::vector<std::size_t> generators_within(std::uint64_t vertex_mask) const;
};

/// Throws RankTooLarge when r > n and InvalidInput when the ring does not
/// match (ring rows != n, ring columns != complex vertex count, or n > m).
RDfi build_rdfi(const SimplicialComplex& complex, int n, const RingPtr& ring);

/// One examined pair of generators from two different maximal cliques with
/// non-coprime lead terms. `resolver` is the intersection generator whose
/// lead divides the lcm, or empty when none exists (a failure).
struct LcmWitness {
  std::size_t clique_a;
  std::size_t clique_b;
  MinorIndex first;
  MinorIndex second;
  Monomial lcm;
  std::optional<MinorIndex> resolver;
};

struct ConditionReport {
  bool verdict = true;
  std::string order;
  std::vector<LcmWitness> witnesses;  // failures first, then resolved pairs
};

ConditionReport is_lcm_closed(const RDfi& dfi, Exec exec = Exec::Serial);

/// Every maximal clique is a run of consecutive vertices.
bool is_unit_interval(const RDfi& dfi);

/// Closed-graph condition for binomial edge ideals; requires r = n = 2
/// (else WrongShape).
bool is_closed_bei(const RDfi& dfi);

/// For r = n and no two maximal cliques sharing more than n-1 vertices
/// (else WrongShape / LozengeViolated): lead terms of generators from
/// distinct maximal cliques are pairwise coprime.
bool is_closed_dfi(const RDfi& dfi);

struct IntersectionProfile {
  std::size_t max = 0;
  struct Entry {
    std::size_t clique_a;
    std::size_t clique_b;
    std::size_t shared;
  };
  std::vector<Entry> table;
};

IntersectionProfile clique_intersection_profile(const RDfi& dfi);

/// lcm-closed verdicts under each lex order that ranks whole rows of the
/// matrix in some permuted sequence (columns left to right within a row).
struct OrderSweepEntry {
  std::vector<int> row_sequence;
  bool diagonal;
  ConditionReport report;
};

std::vector<OrderSweepEntry> lcm_closed_row_permutation_sweep(const SimplicialComplex& complex, int n,
                                                              const Field& field, Exec exec = Exec::Serial);

}  // namespace dfilab
