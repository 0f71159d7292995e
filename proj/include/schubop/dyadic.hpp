#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace schubop {

/// Exact element of Z[1/2], stored as mantissa * 2^exponent.
///
/// Canonical form: the mantissa is odd, or the value is zero with exponent 0.
/// Mantissas that fit in 64 bits are kept inline; larger ones spill to GMP.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Dyadic(int value) : Dyadic(static_cast<std::int64_t>(value)) {}  // NOLINT
  Dyadic(long long value) : Dyadic(static_cast<std::int64_t>(value)) {}  // NOLINT
  Dyadic(const mpz_class& mantissa, std::int32_t exponent);

  Dyadic(const Dyadic& other);
  Dyadic& operator=(const Dyadic& other);
  Dyadic(Dyadic&&) noexcept = default;
  Dyadic& operator=(Dyadic&&) noexcept = default;
  ~Dyadic() = default;

  /// 2^e.
  static Dyadic pow2(std::int32_t e) { return Dyadic(mpz_class(1), e); }

  /// Converts an exact rational; throws NonDyadic when the reduced denominator
  /// is not a power of two.
  static Dyadic from_rational(const mpq_class& q);

  /// Parses "m", "-m", "m/2^k" or "m/d" with d a power of two.
  static Dyadic parse(std::string_view text);

  bool is_zero() const noexcept { return !big_ && small_ == 0; }
  int sign() const noexcept;
  bool is_integer() const noexcept { return exp_ >= 0; }
  bool fits_small() const noexcept { return !big_; }

  std::int32_t exponent() const noexcept { return exp_; }
  mpz_class mantissa() const;
  mpq_class to_rational() const;

  /// Integer value; throws NonDyadic if not an integer.
  mpz_class to_integer() const;

  /// this * 2^k
  Dyadic scaled(std::int32_t k) const;

  Dyadic operator-() const;
  Dyadic& operator+=(const Dyadic& rhs);
  Dyadic& operator-=(const Dyadic& rhs);
  Dyadic& operator*=(const Dyadic& rhs);

  friend Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }
  friend Dyadic operator-(Dyadic a, const Dyadic& b) { return a -= b; }
  friend Dyadic operator*(Dyadic a, const Dyadic& b) { return a *= b; }

  /// Exact quotient; the divisor must be +-2^k times a unit of Z[1/2].
  Dyadic divided_by(const Dyadic& divisor) const;

  friend bool operator==(const Dyadic& a, const Dyadic& b) noexcept;
  friend bool operator!=(const Dyadic& a, const Dyadic& b) noexcept { return !(a == b); }

  /// Plain text: "m" for integers, "m/2^k" otherwise.
  std::string to_string() const;

  std::size_t hash() const noexcept;

 private:
  void normalize();
  void set_big(mpz_class value);

  std::int64_t small_ = 0;
  std::int32_t exp_ = 0;
  std::unique_ptr<mpz_class> big_;
};

}  // namespace schubop
