#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "nearassoc/errors.hpp"

namespace nearassoc {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

enum class FieldKind { Rationals, Quadratic, Prime };

// Which field scalars live in. Quadratic contexts fix a single square-free d;
// values from Q(sqrt(2)) and Q(sqrt(3)) never mix.
class FieldContext {
 public:
  static FieldContext rationals();
  static FieldContext quadratic(long long d);  // d square-free, not 0 or 1
  static FieldContext prime(unsigned p);       // p prime, p <= 251

  FieldKind kind() const noexcept { return kind_; }
  long long d() const noexcept { return d_; }
  unsigned p() const noexcept { return p_; }
  unsigned characteristic() const noexcept { return kind_ == FieldKind::Prime ? p_ : 0; }

  bool operator==(const FieldContext& other) const noexcept {
    return kind_ == other.kind_ && d_ == other.d_ && p_ == other.p_;
  }
  bool operator!=(const FieldContext& other) const noexcept { return !(*this == other); }

  std::string describe() const;

 private:
  FieldContext(FieldKind kind, long long d, unsigned p) : kind_(kind), d_(d), p_(p) {}
  FieldKind kind_;
  long long d_;
  unsigned p_;
};

// Exact field element. Rationals and quadratic-extension values ride on
// arbitrary-precision fractions (always reduced, positive denominator);
// prime-field values are plain residues in [0, p).
class Scalar {
 public:
  Scalar() : ctx_(FieldContext::rationals()) {}  // rational zero

  static Scalar zero(const FieldContext& ctx);
  static Scalar one(const FieldContext& ctx);
  static Scalar of_int(const FieldContext& ctx, long long value);
  static Scalar of_rational(const FieldContext& ctx, const Rational& value);
  // Quadratic contexts only: a + b*sqrt(d).
  static Scalar quadratic(const FieldContext& ctx, const Rational& a, const Rational& b);

  static Scalar parse(const FieldContext& ctx, std::string_view text);
  std::string str() const;

  const FieldContext& context() const noexcept { return ctx_; }
  bool is_zero() const;
  bool is_one() const;

  // Rational / quadratic component access (rational part and radical coefficient).
  const Rational& rat_a() const noexcept { return a_; }
  const Rational& rat_b() const noexcept { return b_; }
  uint32_t residue() const noexcept { return r_; }

  Scalar operator-() const;
  Scalar inverse() const;  // DivisionByZero on 0

  friend Scalar operator+(const Scalar& lhs, const Scalar& rhs);
  friend Scalar operator-(const Scalar& lhs, const Scalar& rhs);
  friend Scalar operator*(const Scalar& lhs, const Scalar& rhs);
  friend Scalar operator/(const Scalar& lhs, const Scalar& rhs);  // DivisionByZero

  Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
  Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
  Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }

  bool operator==(const Scalar& other) const;  // ContextMismatch across contexts
  bool operator!=(const Scalar& other) const { return !(*this == other); }

 private:
  explicit Scalar(const FieldContext& ctx) : ctx_(ctx) {}
  FieldContext ctx_;
  Rational a_;    // rational value, or rational part of a + b*sqrt(d)
  Rational b_;    // radical coefficient (quadratic contexts only)
  uint32_t r_ = 0;  // prime-field residue
};

// s with s*s == x when one exists in x's field, otherwise absent.
std::optional<Scalar> sqrt_in_field(const Scalar& x);

}  // namespace nearassoc
