#pragma once

#include <string>

#include "lorentzvol/big_float.hpp"
#include "lorentzvol/rational.hpp"

namespace lorentzvol {

/// A real number known as a midpoint and a rigorous radius: the true value
/// lies in [value - abs_error, value + abs_error].
///
/// Every inexact rounding of the midpoint adds one ulp to the radius; the
/// radius itself is carried at a short precision and always rounded up.
class ApproxReal {
 public:
  /// Precision used for radii.
  static constexpr mpfr_prec_t kErrorPrecision = 64;

  ApproxReal(BigFloat value, BigFloat abs_error);

  static ApproxReal exact(long value, mpfr_prec_t precision);
  /// Nearest value to q at the given precision, with a one-ulp radius if inexact.
  static ApproxReal from_rational(const ExactRational& q, mpfr_prec_t precision);

  const BigFloat& value() const { return value_; }
  const BigFloat& abs_error() const { return error_; }
  mpfr_prec_t precision() const { return value_.precision(); }

  /// Upper bound on |x| over the enclosure.
  BigFloat magnitude_upper() const;
  /// Lower bound on |x| over the enclosure (zero if the ball contains 0).
  BigFloat magnitude_lower() const;
  BigFloat lower() const;
  BigFloat upper() const;

  bool contains(const BigFloat& x) const;
  bool overlaps(const ApproxReal& other) const;
  /// True when the whole enclosure is > 0.
  bool is_positive() const;

  ApproxReal pow(long exponent) const;
  ApproxReal sqrt() const;
  ApproxReal log() const;

  friend ApproxReal operator+(const ApproxReal& a, const ApproxReal& b);
  friend ApproxReal operator-(const ApproxReal& a, const ApproxReal& b);
  friend ApproxReal operator*(const ApproxReal& a, const ApproxReal& b);
  friend ApproxReal operator/(const ApproxReal& a, const ApproxReal& b);
  friend ApproxReal operator-(const ApproxReal& a);

  ApproxReal& operator+=(const ApproxReal& rhs) { return *this = *this + rhs; }
  ApproxReal& operator*=(const ApproxReal& rhs) { return *this = *this * rhs; }

  /// Adds a nonnegative amount to the radius.
  ApproxReal widened(const BigFloat& extra) const;

  double to_double() const { return value_.to_double(); }
  /// Number of significant decimal digits the midpoint precision supports.
  int decimal_digits() const;

 private:
  BigFloat value_;
  BigFloat error_;
};

/// pi to the given precision; the radius is at most 2^{-precision_bits+2}.
ApproxReal pi_approx(long precision_bits);

}  // namespace lorentzvol
