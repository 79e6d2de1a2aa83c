#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dfilab/algebra.hpp"
#include "dfilab/caps.hpp"
#include "dfilab/poset.hpp"
#include "dfilab/simplicial.hpp"

namespace dfilab {

/// Total order used for reproducible listings: degree first, then the
/// exponent vectors compared with larger exponents in earlier variables
/// first.
bool canonical_less(const Monomial& a, const Monomial& b);

/// Monomial ideal given by its minimal generators (non-minimal and
/// repeated inputs are dropped), listed in canonical order.
class MonomialIdeal {
 public:
  MonomialIdeal(RingPtr ring, std::vector<Monomial> gens);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool contains(const Monomial& m) const;
  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Monomial> gens_;
};

/// Monomials m_1..m_g of the given polynomials' lead terms.
MonomialIdeal lead_term_ideal(const std::vector<Polynomial>& polys);

/// All lcms of subsets of the generators (the empty lcm is 1), ordered by
/// divisibility. Elements are listed in canonical order, so index 0 is 1.
class LcmLattice {
 public:
  /// LatticeTooLarge once more than `max_elements` elements appear.
  explicit LcmLattice(const MonomialIdeal& ideal, std::size_t max_elements = Caps{}.lattice_elements);

  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<Monomial>& elements() const noexcept { return elements_; }
  const Monomial& element(std::size_t k) const { return elements_.at(k); }
  std::optional<std::size_t> find(const Monomial& m) const;
  std::size_t top() const noexcept { return elements_.size() - 1; }
  const std::vector<std::size_t>& atoms() const noexcept { return atoms_; }

  /// Elements strictly between 1 and element k, as a poset.
  FinitePoset open_interval_below(std::size_t k) const;
  /// The whole lattice as a poset.
  FinitePoset as_poset() const;
  /// mu(1, element k) for every k.
  std::vector<long> mobius_from_bottom() const;

 private:
  std::vector<Monomial> elements_;
  std::vector<std::size_t> atoms_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

/// Betti numbers of S/M: multigraded entries beta_{i,m} and the coarse
/// entries beta_{i,j} obtained by summing over deg m = j.
class BettiTable {
 public:
  explicit BettiTable(RingPtr ring) : ring_(std::move(ring)) {}

  void add(int i, const Monomial& mdeg, std::size_t beta);

  std::size_t at(int i, const Monomial& mdeg) const;
  std::size_t coarse(int i, int j) const;
  std::size_t total(int i) const;
  /// Largest i with a nonzero entry.
  int projective_dimension() const;
  int max_degree() const;

  /// Nonzero multigraded entries sorted by (i, canonical monomial).
  std::vector<std::tuple<int, Monomial, std::size_t>> multigraded() const;
  /// Nonzero coarse entries sorted by (i, j).
  std::vector<std::tuple<int, int, std::size_t>> coarse_entries() const;

  /// Row-per-(j - i) layout with a "total:" header line, dots for zeros.
  std::string render() const;

  const RingPtr& ring() const noexcept { return ring_; }

  friend bool operator==(const BettiTable& a, const BettiTable& b);

 private:
  struct Key {
    int i;
    Monomial mdeg;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept { return k.mdeg.hash() * 31u + static_cast<std::size_t>(k.i); }
  };
  RingPtr ring_;
  std::unordered_map<Key, std::size_t, KeyHash> entries_;
  std::map<std::pair<int, int>, std::size_t> coarse_;
};

/// Table of the tensor product of two resolutions: entries multiply, homological
/// indices and multidegrees add. Meaningful when the ideals use disjoint
/// variables.
BettiTable tensor(const BettiTable& a, const BettiTable& b);

/// beta_{i,m}(S/M) = dim reduced H_{i-2} of the order complex of (1, m) in
/// the lcm lattice, for every lattice element m != 1; beta_{0,1} = 1.
BettiTable gpw_betti(const MonomialIdeal& ideal, const Field& field, Exec exec = Exec::Serial,
                     const Caps& caps = Caps{});

/// Same numbers from the Taylor complex, multidegree by multidegree,
/// without using the lattice. OracleTooLarge above caps.oracle_generators.
BettiTable taylor_betti_oracle(const MonomialIdeal& ideal, const Field& field, const Caps& caps = Caps{});

/// Pairs (i, tau_j) with |a_{<=i-1}| < j <= |a_{<=i}|, i = 1..n.
std::vector<Variable> m_k_pairs(const std::vector<int>& a, const Face& tau);

/// Product of x_{i,tau_j} over m_k_pairs(a, tau). ShapeMismatch when
/// |a| != |tau| or a has a length other than the ring's row count;
/// InvalidInput on negative parts.
Monomial m_k_monomial(const PolyRing& ring, const std::vector<int>& a, const Face& tau);

/// Recovers (a, tau) with w = m_k(a; tau) and tau inside `clique`, if any.
std::optional<std::pair<std::vector<int>, Face>> as_m_k(const PolyRing& ring, const Monomial& w, const Face& clique);

struct LinStrandEntry {
  Monomial w;
  std::optional<std::pair<std::vector<int>, Face>> form;  // set when w = m_k(a; tau)
  std::vector<std::pair<int, std::size_t>> betti;          // nonzero beta_{i,w}
  bool as_predicted;  // m_k: single 1 at i = k-n+1; otherwise: all zero
};

struct LinStrandReport {
  std::size_t lattice_elements = 0;
  std::size_t m_k_elements = 0;
  std::size_t m_k_mismatches = 0;  // violations of the main claim
  std::size_t anomalies = 0;       // non-m_k elements with some nonzero Betti number
  std::vector<LinStrandEntry> entries;
};

/// Lead terms of all n-minors on the columns of `clique`, its lcm lattice,
/// and a check of every lattice element against the single-entry
/// prediction for monomials of the form m_k(a; tau).
LinStrandReport verify_lin_strand_bettis(const RingPtr& ring, const Face& clique, Exec exec = Exec::Serial,
                                         const Caps& caps = Caps{});

}  // namespace dfilab
