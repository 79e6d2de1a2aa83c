#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dfilab/caps.hpp"
#include "dfilab/field.hpp"
#include "dfilab/linalg.hpp"

namespace dfilab {

/// Finite poset on elements 0..size-1 with the full order relation stored
/// as bit rows (reflexive and transitive).
class FinitePoset {
 public:
  FinitePoset() = default;
  /// Pairs (a, b) mean a <= b; the reflexive-transitive closure is taken.
  /// Throws InvalidInput if the closure is not antisymmetric.
  FinitePoset(std::size_t size, const std::vector<std::pair<std::size_t, std::size_t>>& relations,
              std::vector<std::string> labels = {});
  /// `leq` must already be a partial order; it is not closed further.
  static FinitePoset from_order(std::size_t size, const std::function<bool(std::size_t, std::size_t)>& leq,
                                std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return size_; }
  bool leq(std::size_t a, std::size_t b) const { return bit(a, b); }
  bool less(std::size_t a, std::size_t b) const { return a != b && bit(a, b); }
  const std::string& label(std::size_t a) const { return labels_.at(a); }

  std::optional<std::size_t> bottom() const;
  std::optional<std::size_t> top() const;
  /// Pairs (a, b) with a < b and nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;
  /// Subposet on the listed elements (in that order).
  FinitePoset induced(const std::vector<std::size_t>& keep) const;
  /// Elements in an order compatible with <.
  std::vector<std::size_t> linear_extension() const;

 private:
  bool bit(std::size_t a, std::size_t b) const { return rows_[a * words_ + b / 64] >> (b % 64) & 1u; }
  void set(std::size_t a, std::size_t b) { rows_[a * words_ + b / 64] |= std::uint64_t{1} << (b % 64); }
  void check_antisymmetric() const;

  std::size_t size_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<std::string> labels_;
};

/// Subsets of {1..k} under inclusion; element index = subset bitmask.
FinitePoset boolean_lattice(int k);
/// Totally ordered 0 < 1 < ... < size-1.
FinitePoset chain(std::size_t size);
/// P without its top and bottom; NotBounded unless both exist and |P| > 1.
FinitePoset proper_part(const FinitePoset& p);
FinitePoset remove_bottom(const FinitePoset& p);
/// Pairs (x, y) at index x * |Q| + y, ordered componentwise.
FinitePoset cartesian_product(const FinitePoset& p, const FinitePoset& q);

/// Chains of a poset grouped by dimension. faces[k] holds the k-dimensional
/// chains flattened with stride k+1, each chain listed bottom to top.
struct OrderComplex {
  std::vector<std::vector<std::uint32_t>> faces;
  std::size_t count(std::size_t dim) const { return dim < faces.size() ? faces[dim].size() / (dim + 1) : 0; }
  std::size_t total() const;
};

/// All chains; ComplexTooLarge once more than `max_faces` are produced.
OrderComplex order_complex(const FinitePoset& p, std::size_t max_faces = Caps{}.complex_faces);

/// Chain complex over a field. boundary[k] has one row per basis element
/// of degree lowest+k listing its image in degree lowest+k-1.
struct ChainComplex {
  int lowest = 0;
  std::vector<std::size_t> dims;
  std::vector<SparseMatrix> boundary;
};

/// dim H_k for k = lowest .. lowest+dims.size()-1.
std::vector<std::size_t> homology_ranks(const ChainComplex& complex, const Field& field);

/// True iff every composite of consecutive boundaries vanishes (checked in
/// exact integer arithmetic).
bool boundary_squares_to_zero(const ChainComplex& complex);

/// Augmented simplicial chain complex of an order complex (degree -1 is
/// the empty face).
ChainComplex augmented_chain_complex(const OrderComplex& k);

/// Homology ranks indexed from a starting dimension; out-of-range reads 0.
struct HomologyRanks {
  int lowest = -1;
  std::vector<std::size_t> ranks;
  std::size_t at(int dim) const;
  int highest() const { return lowest + static_cast<int>(ranks.size()) - 1; }
  /// Nonzero entries as "dim:rank" pairs, e.g. "2:1".
  std::string to_string() const;
  friend bool operator==(const HomologyRanks&, const HomologyRanks&);
};

/// Reduced homology of the order complex, dims -1 .. top.
HomologyRanks reduced_homology(const OrderComplex& k, const Field& field);
/// Ordinary homology, dims 0 .. top (all zero for the empty complex).
HomologyRanks homology(const OrderComplex& k, const Field& field);

enum class KunnethVariant {
  Plain,          // H_r(P x Q) = sum H_i(P) H_{r-i}(Q)
  RemoveBottom,   // reduced, bottoms removed, shift 1
  ProperParts,    // reduced, proper parts, shift 2
};

struct KunnethReport {
  bool holds;
  HomologyRanks product_side;    // computed from the product poset
  HomologyRanks tensor_side;     // convolution of the factors
};

/// Computes both sides of the chosen identity. NotBounded when the variant
/// needs bottoms (or tops) that a factor lacks.
KunnethReport kunneth_check(const FinitePoset& p, const FinitePoset& q, KunnethVariant variant, const Field& field,
                            std::size_t max_faces = Caps{}.complex_faces);

}  // namespace dfilab
