#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dfilab/algebra.hpp"
#include "dfilab/caps.hpp"
#include "dfilab/simplicial.hpp"

namespace dfilab {

/// Pairs (i, I_{i+j}) for each i with alpha_i > 0 and
/// |alpha_{<=i-1}| <= j <= |alpha_{<=i}|, in increasing (i, position)
/// order. Positions are returned alongside: (row i, 1-based position p)
/// with the column being I_p. ShapeMismatch unless |I| = n + |alpha|.
std::vector<std::pair<int, std::size_t>> index_positions(const std::vector<int>& alpha, const Face& I);

/// Same set as (row, column) pairs.
std::vector<std::pair<int, int>> index_set(const std::vector<int>& alpha, const Face& I);

/// Basis element g^{*(alpha)} (x) f_sigma of homological degree |alpha| + 1;
/// degree 0 has the single element with empty alpha and sigma.
struct ENBasisElement {
  std::vector<int> alpha;
  Face sigma;
};

/// One matrix entry of a differential: coeff * mono times target basis element.
struct ENEntry {
  std::int64_t coeff;
  Monomial mono;
  std::size_t target;
};

/// Multidegree in Z^n x Z^m.
struct Multidegree {
  std::vector<int> rows;
  std::vector<int> cols;
  friend bool operator==(const Multidegree&, const Multidegree&) = default;
  friend auto operator<=>(const Multidegree&, const Multidegree&) = default;
};

class ENComplex {
 public:
  ENComplex(RingPtr ring, std::vector<std::vector<ENBasisElement>> basis,
            std::vector<std::vector<std::vector<ENEntry>>> differential);

  const RingPtr& ring() const noexcept { return ring_; }
  int n() const noexcept { return ring_->n(); }
  int m() const noexcept { return ring_->m(); }
  /// Highest homological degree with a nonzero module.
  int length() const noexcept { return static_cast<int>(basis_.size()) - 1; }
  std::size_t rank(int k) const;
  const std::vector<ENBasisElement>& basis(int k) const { return basis_.at(static_cast<std::size_t>(k)); }
  /// Image of basis element e of degree k >= 1 in degree k - 1.
  const std::vector<ENEntry>& image(int k, std::size_t e) const;
  /// Internal degree of the generators of C_k: 0 for k = 0, n + k - 1 after.
  int internal_degree(int k) const { return k == 0 ? 0 : n() + k - 1; }
  Multidegree multidegree(int k, std::size_t e) const;
  std::optional<std::size_t> find(int k, const std::vector<int>& alpha, const Face& sigma) const;

 private:
  RingPtr ring_;
  std::vector<std::vector<ENBasisElement>> basis_;
  std::vector<std::vector<std::vector<ENEntry>>> differential_;
};

/// Sparse complex on the faces of the clique complex. Requires r = n,
/// ring shape n x m with m the vertex count, and a diagonal order
/// (InvalidInput otherwise). The composite of consecutive differentials is
/// checked and DifferentialBroken raised if it is nonzero.
ENComplex build_en_complex(const CliqueDecomposition& cliques, const RingPtr& ring);

/// Element of C_k restricted to one multidegree: sum of coeff * mono * basis.
struct ChainTerm {
  std::int64_t coeff;
  Monomial mono;
  std::size_t basis;
};

struct StrandHomology {
  std::size_t rank = 0;
  std::size_t multidegrees = 0;  // multidegrees examined
  std::vector<std::pair<Multidegree, std::size_t>> nonzero;
};

/// dim H_i(C)_d summed over all Z^n x Z^m multidegrees of total degree d.
StrandHomology strand_homology(const ENComplex& c, int i, int degree, const Field& field, Exec exec = Exec::Serial);

struct CycleCertificate {
  bool is_cycle;
  bool is_boundary;
  Multidegree mdeg;
};

/// Decides whether a multihomogeneous element of C_k is a cycle and
/// whether it is a boundary. InvalidInput when the terms are not
/// multihomogeneous or reference missing basis elements.
CycleCertificate certify_cycle(const ENComplex& c, int k, const std::vector<ChainTerm>& terms, const Field& field);

struct NonfaceHomologyReport {
  bool h1_vanishes;          // H_1(C)_{n+1} = 0
  std::vector<Face> nonfaces;  // 1-nonfaces of cardinality n+1
  bool agree;                // h1_vanishes == nonfaces.empty()
};

NonfaceHomologyReport one_nonface_homology_equiv(const CliqueDecomposition& cliques, const RingPtr& ring,
                                                 Exec exec = Exec::Serial);

struct LinearStrandRow {
  int i;                         // homological degree, quotient convention
  std::size_t basis_rank;        // counted from the constructed basis
  std::size_t formula_rank;      // f_{n+i-2} * C(n+i-2, n-1)
  std::size_t betti;             // beta_{i, n+i-1}(S/M) = beta_{i-1, n+i-1}(M)
  bool equal;
};

struct LinearStrandReport {
  std::vector<LinearStrandRow> rows;
  int projective_dimension;
  bool all_equal;
};

/// Compares the module ranks of the complex with the linear Betti numbers
/// of the lead-term ideal of the n-minors on the faces of the clique
/// complex, computed from its lcm lattice. HypothesisFailed when a
/// 1-nonface of cardinality n+1 exists.
LinearStrandReport linear_strand_rank_check(const CliqueDecomposition& cliques, const RingPtr& ring,
                                            Exec exec = Exec::Serial, const Caps& caps = Caps{});

/// Compositions of `total` into `parts` nonnegative parts, lexicographically
/// decreasing ((total,0,..) first).
std::vector<std::vector<int>> compositions(int total, int parts);

}  // namespace dfilab
