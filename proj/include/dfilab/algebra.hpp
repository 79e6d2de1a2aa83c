#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "dfilab/field.hpp"

namespace dfilab {

/// Entry x_{row,col} of the generic n x m matrix (1-based).
struct Variable {
  int row;
  int col;
  friend bool operator==(const Variable&, const Variable&) = default;
};

/// Dense exponent vector over a fixed variable count. Variables of the
/// generic matrix are numbered row-major, (i-1)*m + (j-1); an optional
/// auxiliary variable (used by elimination) comes last.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}

  std::size_t nvars() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t v) const { return exps_[v]; }
  void set(std::size_t v, Exponent e);
  unsigned degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }
  bool is_squarefree() const noexcept;
  const std::vector<Exponent>& exponents() const noexcept { return exps_; }

  bool divides(const Monomial& other) const noexcept;
  bool coprime(const Monomial& other) const noexcept;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; caller guarantees divisibility.
  Monomial operator/(const Monomial& other) const;

  /// Same exponents padded (or truncated) to `nvars` variables.
  Monomial resized(std::size_t nvars) const;

  std::size_t hash() const noexcept;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  std::vector<Exponent> exps_;
  unsigned degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Monomial order: a list of integer weight vectors compared first, then a
/// tiebreak (lex, graded lex, or graded reverse lex) over a variable
/// ranking (`ranking[0]` is the largest variable).
class TermOrder {
 public:
  enum class Tiebreak { Lex, GrLex, GrevLex };

  TermOrder(Tiebreak tiebreak, std::vector<std::size_t> ranking, std::vector<std::vector<std::int64_t>> weights = {});

  /// Lex with x_{11} > x_{12} > ... > x_{1m} > x_{21} > ... > x_{nm}.
  static TermOrder row_major_lex(int n, int m);
  /// Lex ranking rows in the order `rows` (a permutation of 1..n), each row's
  /// columns left to right.
  static TermOrder row_permuted_lex(int m, const std::vector<int>& rows);

  /// Prepends weight vector e_v and appends variable v at the bottom of the
  /// ranking. Used for elimination of an auxiliary variable.
  TermOrder with_leading_variable(std::size_t v) const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  Tiebreak tiebreak() const noexcept { return tiebreak_; }
  const std::vector<std::size_t>& ranking() const noexcept { return ranking_; }
  const std::vector<std::vector<std::int64_t>>& weights() const noexcept { return weights_; }
  std::size_t nvars() const noexcept { return ranking_.size(); }

  /// e.g. "lex(x_{1,1} > x_{1,2} > ...)"; indices past n*m print as t, t2, ...
  std::string describe(int n, int m) const;

 private:
  Tiebreak tiebreak_;
  std::vector<std::size_t> ranking_;
  std::vector<std::vector<std::int64_t>> weights_;
};

/// Ambient ring: variables of the generic n x m matrix plus `extra`
/// auxiliary variables, a coefficient field, and a term order.
class PolyRing {
 public:
  PolyRing(int n, int m, Field field, TermOrder order, int extra = 0);

  static std::shared_ptr<const PolyRing> make(int n, int m, Field field, TermOrder order, int extra = 0) {
    return std::make_shared<const PolyRing>(n, m, std::move(field), std::move(order), extra);
  }

  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }
  int extra() const noexcept { return extra_; }
  std::size_t nvars() const noexcept { return static_cast<std::size_t>(n_ * m_ + extra_); }
  const Field& field() const noexcept { return field_; }
  const TermOrder& order() const noexcept { return order_; }

  std::size_t index(Variable v) const;
  Variable variable(std::size_t index) const;  // throws for auxiliary indices
  Monomial one() const { return Monomial(nvars()); }
  Monomial var(Variable v) const;
  Monomial var_index(std::size_t index) const;
  /// Product of the listed matrix entries.
  Monomial monomial(const std::vector<Variable>& vars) const;

  std::string render(const Monomial& mono) const;  // "x_{1,1}*x_{2,2}", "1"

 private:
  int n_;
  int m_;
  int extra_;
  Field field_;
  TermOrder order_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

/// Polynomial with terms kept strictly descending in the ring's order.
class Polynomial {
 public:
  using Term = std::pair<Monomial, FieldElement>;

  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  Polynomial(RingPtr ring, std::vector<Term> terms);  // sorts and combines
  static Polynomial term(RingPtr ring, Monomial mono, FieldElement coeff);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const Monomial& lead_monomial() const;
  const FieldElement& lead_coeff() const;
  bool is_homogeneous() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial scaled(const FieldElement& c) const;
  Polynomial times_term(const Monomial& mono, const FieldElement& c) const;
  /// this - c * mono * g, in one merge pass.
  Polynomial minus_term_times(const FieldElement& c, const Monomial& mono, const Polynomial& g) const;
  Polynomial monic() const;
  /// All terms but the leading one.
  Polynomial tail() const;

  /// Same terms in another ring with compatible matrix shape (variables
  /// are padded or truncated; terms re-sorted in the target order).
  Polynomial moved_to(const RingPtr& target) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Determinant of the submatrix on `rows` x `cols` (strictly increasing,
/// equal length). Throws MinorTooLarge when |rows| > n, InvalidInput on
/// malformed index lists.
Polynomial minor(const RingPtr& ring, const std::vector<int>& rows, const std::vector<int>& cols);

/// Main-diagonal product x_{a_1 b_1} ... x_{a_r b_r}.
Monomial diagonal_monomial(const PolyRing& ring, const std::vector<int>& rows, const std::vector<int>& cols);

/// True iff every minor of the generic n x m matrix has its main-diagonal
/// product as lead term under `order` (exhaustive over all minors).
bool is_diagonal(const TermOrder& order, int n, int m);

}  // namespace dfilab
