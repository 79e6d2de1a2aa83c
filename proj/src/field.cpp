#include "dfilab/field.hpp"

#include "dfilab/error.hpp"

namespace dfilab {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw Error(ErrorCode::InvalidInput, "field characteristic must be a prime < 2^31, got " + std::to_string(p));
  return Field(p);
}

std::string Field::name() const {
  return is_rational() ? "QQ" : "GF(" + std::to_string(p_) + ")";
}

FieldElement::FieldElement(long value, const Field& field) {
  if (field.is_rational()) {
    value_ = mpq_class(value);
  } else {
    const auto p = static_cast<long>(field.characteristic());
    long r = value % p;
    if (r < 0) r += p;
    value_ = Residue{static_cast<std::uint32_t>(r), field.characteristic()};
  }
}

FieldElement::FieldElement(mpq_class value) : value_(std::move(value)) {
  std::get<mpq_class>(value_).canonicalize();
}

bool FieldElement::is_zero() const {
  if (auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool FieldElement::is_one() const {
  if (auto* r = std::get_if<Residue>(&value_)) return r->value == 1;
  return std::get<mpq_class>(value_) == 1;
}

Field FieldElement::field() const {
  if (auto* r = std::get_if<Residue>(&value_)) return Field(r->p);
  return Field::rationals();
}

FieldElement FieldElement::operator-() const {
  FieldElement out = *this;
  if (auto* r = std::get_if<Residue>(&out.value_)) {
    r->value = r->value == 0 ? 0 : r->p - r->value;
  } else {
    auto& q = std::get<mpq_class>(out.value_);
    q = -q;
  }
  return out;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  if (auto* r = std::get_if<Residue>(&value_)) {
    const auto& o = std::get<Residue>(rhs.value_);
    r->value = static_cast<std::uint32_t>((std::uint64_t{r->value} + o.value) % r->p);
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  if (auto* r = std::get_if<Residue>(&value_)) {
    const auto& o = std::get<Residue>(rhs.value_);
    r->value = static_cast<std::uint32_t>((std::uint64_t{r->value} + r->p - o.value) % r->p);
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  if (auto* r = std::get_if<Residue>(&value_)) {
    const auto& o = std::get<Residue>(rhs.value_);
    r->value = static_cast<std::uint32_t>(std::uint64_t{r->value} * o.value % r->p);
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorCode::InvalidInput, "division by zero in field");
  FieldElement out = *this;
  if (auto* r = std::get_if<Residue>(&out.value_)) {
    r->value = pow_mod(r->value, r->p - 2, r->p);
  } else {
    auto& q = std::get<mpq_class>(out.value_);
    q = 1 / q;
  }
  return out;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
  return *this *= rhs.inverse();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.value_.index() != b.value_.index()) return false;
  if (auto* r = std::get_if<FieldElement::Residue>(&a.value_)) {
    const auto& o = std::get<FieldElement::Residue>(b.value_);
    return r->p == o.p && r->value == o.value;
  }
  return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

std::string FieldElement::to_string() const {
  if (auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
  return std::get<mpq_class>(value_).get_str();
}

}  // namespace dfilab
