#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace lorentzvol {

using BigInt = mpz_class;

/// Signed rational of unbounded size, always kept in lowest terms with a
/// positive denominator. Zero is 0/1.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(long value);  // NOLINT(google-explicit-constructor)
  explicit ExactRational(const BigInt& value);
  ExactRational(const BigInt& numerator, const BigInt& denominator);

  /// Parses "p" or "p/q" in base 10.
  static ExactRational parse(const std::string& text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  ExactRational abs() const;
  ExactRational reciprocal() const;
  /// Integer power; negative exponents require a nonzero value.
  ExactRational pow(long exponent) const;

  std::string to_string() const;
  const mpq_class& raw() const { return value_; }

  ExactRational& operator+=(const ExactRational& rhs);
  ExactRational& operator-=(const ExactRational& rhs);
  ExactRational& operator*=(const ExactRational& rhs);
  ExactRational& operator/=(const ExactRational& rhs);

  friend ExactRational operator+(ExactRational lhs, const ExactRational& rhs) { return lhs += rhs; }
  friend ExactRational operator-(ExactRational lhs, const ExactRational& rhs) { return lhs -= rhs; }
  friend ExactRational operator*(ExactRational lhs, const ExactRational& rhs) { return lhs *= rhs; }
  friend ExactRational operator/(ExactRational lhs, const ExactRational& rhs) { return lhs /= rhs; }
  friend ExactRational operator-(const ExactRational& x);

  friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b);

  friend std::ostream& operator<<(std::ostream& os, const ExactRational& q);

 private:
  explicit ExactRational(mpq_class value);
  mpq_class value_{0};
};

/// Binomial coefficient C(m, j); zero when j > m.
BigInt binomial(unsigned long m, unsigned long j);

/// m! as an exact integer.
BigInt factorial(unsigned long m);

}  // namespace lorentzvol
