#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

namespace dfilab {

/// Coefficient field: the rationals or a prime field GF(p).
class Field {
 public:
  static Field rationals() { return Field(0); }
  /// Throws InvalidInput unless p is a prime below 2^31.
  static Field prime(std::uint32_t p);

  bool is_rational() const noexcept { return p_ == 0; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class FieldElement;
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

/// Exact scalar: a rational in lowest terms, or a residue in [0, p).
class FieldElement {
 public:
  FieldElement() : value_(mpq_class(0)) {}
  FieldElement(long value, const Field& field);
  explicit FieldElement(mpq_class value);

  static FieldElement zero(const Field& field) { return FieldElement(0, field); }
  static FieldElement one(const Field& field) { return FieldElement(1, field); }

  bool is_zero() const;
  bool is_one() const;
  Field field() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  /// Throws InvalidInput on division by zero.
  FieldElement& operator/=(const FieldElement& rhs);
  FieldElement inverse() const;

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  std::string to_string() const;

 private:
  struct Residue {
    std::uint32_t value;
    std::uint32_t p;
  };
  std::variant<mpq_class, Residue> value_;
};

}  // namespace dfilab
