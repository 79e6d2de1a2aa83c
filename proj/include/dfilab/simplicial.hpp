#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <unordered_set>
#include <vector>

namespace dfilab {

/// Largest supported vertex label; faces are also kept as 64-bit masks.
inline constexpr int kMaxVertices = 63;

/// A set of vertices in [1, m], stored strictly increasing.
class Face {
 public:
  Face() = default;
  Face(std::initializer_list<int> vertices);
  /// Sorts; throws InvalidInput on repeats or labels outside [1, kMaxVertices].
  explicit Face(std::vector<int> vertices);
  static Face from_mask(std::uint64_t mask);

  std::size_t size() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }
  /// 1-based access, matching the usual sigma_1 < ... < sigma_k notation.
  int at(std::size_t position) const { return vertices_.at(position - 1); }
  auto begin() const noexcept { return vertices_.begin(); }
  auto end() const noexcept { return vertices_.end(); }
  const std::vector<int>& vertices() const noexcept { return vertices_; }

  std::uint64_t mask() const noexcept { return mask_; }
  bool contains(int v) const noexcept { return v >= 1 && v <= kMaxVertices && (mask_ >> v & 1u); }
  bool is_subset_of(const Face& other) const noexcept { return (mask_ & ~other.mask_) == 0; }
  /// The face with the vertex at 1-based `position` removed.
  Face without_position(std::size_t position) const;

  std::string to_string() const;  // "{1,2,4}"

  friend bool operator==(const Face& a, const Face& b) { return a.vertices_ == b.vertices_; }
  friend std::strong_ordering operator<=>(const Face& a, const Face& b) { return a.vertices_ <=> b.vertices_; }

 private:
  std::vector<int> vertices_;
  std::uint64_t mask_ = 0;
};

/// Pure complex on [m] given by facets of common cardinality r.
class SimplicialComplex {
 public:
  /// Throws NotPure on mixed cardinalities and InvalidInput on labels
  /// outside [1, m]. Duplicate facets are merged. An empty facet list is
  /// allowed (the void complex of the given rank).
  SimplicialComplex(int m, int r, const std::vector<std::vector<int>>& facets);
  /// Each [a, b] becomes the clique {a..b}; all its r-subsets are facets.
  static SimplicialComplex from_intervals(int m, int r, const std::vector<std::pair<int, int>>& intervals);

  int vertex_count() const noexcept { return m_; }
  int facet_size() const noexcept { return r_; }
  const std::vector<Face>& facets() const noexcept { return facets_; }
  bool has_facet(std::uint64_t mask) const { return facet_masks_.count(mask) != 0; }

  std::string to_string() const;

 private:
  int m_;
  int r_;
  std::vector<Face> facets_;
  std::unordered_set<std::uint64_t> facet_masks_;
};

/// Maximal cliques of a pure complex plus the facet -> clique back-map.
class CliqueDecomposition {
 public:
  CliqueDecomposition(int m, int r, std::vector<Face> cliques, const std::vector<Face>& facets);

  int vertex_count() const noexcept { return m_; }
  int facet_size() const noexcept { return r_; }
  const std::vector<Face>& cliques() const noexcept { return cliques_; }
  /// Indices of the cliques containing facet number `facet` of the source complex.
  const std::vector<std::size_t>& cliques_of_facet(std::size_t facet) const { return back_map_.at(facet); }

  /// Membership in the clique complex (any subset of a maximal clique).
  bool contains(std::uint64_t mask) const;
  bool contains(const Face& face) const { return contains(face.mask()); }
  std::size_t dimension_plus_one() const;  // largest clique size

 private:
  int m_;
  int r_;
  std::vector<Face> cliques_;
  std::vector<std::vector<std::size_t>> back_map_;
};

/// Maximal vertex sets of size >= r all of whose r-subsets are facets.
CliqueDecomposition clique_complex(const SimplicialComplex& complex);

/// r-skeleton of the clique complex, as a pure complex.
SimplicialComplex skeleton(const CliqueDecomposition& cliques);

/// All sets of cardinality `card` outside the clique complex that admit
/// i+1 consecutive vertex deletions landing inside it. Lexicographic order.
std::vector<Face> i_nonfaces(const CliqueDecomposition& cliques, int i, int card);

/// f_k for k = -1..dim of the clique complex; entry 0 is f_{-1} = 1.
std::vector<std::size_t> f_vector(const CliqueDecomposition& cliques);

/// All k-subsets of `from`, lexicographic.
std::vector<Face> subsets_of_size(const Face& from, std::size_t k);

}  // namespace dfilab
