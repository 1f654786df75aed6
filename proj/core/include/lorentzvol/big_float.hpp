#pragma once

#include <string>

#include <mpfr.h>

namespace lorentzvol {

/// Owning wrapper around an mpfr_t. Copies preserve precision.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t precision);
  BigFloat(mpfr_prec_t precision, long value);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

  /// Scientific notation "d.ddd...e<exp>" with the given number of
  /// significant digits, independent of the C locale.
  std::string to_scientific(int digits, mpfr_rnd_t rounding = MPFR_RNDN) const;

 private:
  mpfr_t value_;
};

int compare(const BigFloat& a, const BigFloat& b);

}  // namespace lorentzvol
