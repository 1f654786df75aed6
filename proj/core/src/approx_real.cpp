#include "lorentzvol/approx_real.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "lorentzvol/errors.hpp"

namespace lorentzvol {
namespace {

constexpr mpfr_prec_t kErr = ApproxReal::kErrorPrecision;

BigFloat err_zero() { return BigFloat(kErr); }

// One ulp of v at its own precision, rounded up; zero for v == 0.
BigFloat ulp(const BigFloat& v) {
  BigFloat out(kErr);
  if (!v.is_zero()) {
    mpfr_set_ui_2exp(out.get(), 1, mpfr_get_exp(v.get()) - v.precision(), MPFR_RNDU);
  }
  return out;
}

BigFloat abs_up(const BigFloat& v) {
  BigFloat out(kErr);
  mpfr_abs(out.get(), v.get(), MPFR_RNDU);
  return out;
}

BigFloat abs_down(const BigFloat& v) {
  BigFloat out(kErr);
  mpfr_abs(out.get(), v.get(), MPFR_RNDD);
  return out;
}

BigFloat add_up(const BigFloat& a, const BigFloat& b) {
  BigFloat out(kErr);
  mpfr_add(out.get(), a.get(), b.get(), MPFR_RNDU);
  return out;
}

BigFloat mul_up(const BigFloat& a, const BigFloat& b) {
  BigFloat out(kErr);
  mpfr_mul(out.get(), a.get(), b.get(), MPFR_RNDU);
  return out;
}

void charge_rounding(BigFloat& err, const BigFloat& value, int ternary) {
  if (ternary != 0) err = add_up(err, ulp(value));
}

mpfr_prec_t joint_precision(const ApproxReal& a, const ApproxReal& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

ApproxReal::ApproxReal(BigFloat value, BigFloat abs_error)
    : value_(std::move(value)), error_(kErr) {
  if (abs_error.sign() < 0 || !mpfr_number_p(abs_error.get())) {
    throw DomainError("ApproxReal: radius must be finite and nonnegative");
  }
  mpfr_set(error_.get(), abs_error.get(), MPFR_RNDU);
}

ApproxReal ApproxReal::exact(long value, mpfr_prec_t precision) {
  BigFloat v(precision);
  BigFloat e = err_zero();
  const int t = mpfr_set_si(v.get(), value, MPFR_RNDN);
  charge_rounding(e, v, t);
  return {std::move(v), std::move(e)};
}

ApproxReal ApproxReal::from_rational(const ExactRational& q, mpfr_prec_t precision) {
  BigFloat v(precision);
  BigFloat e = err_zero();
  const int t = mpfr_set_q(v.get(), q.raw().get_mpq_t(), MPFR_RNDN);
  charge_rounding(e, v, t);
  return {std::move(v), std::move(e)};
}

BigFloat ApproxReal::magnitude_upper() const {
  return add_up(abs_up(value_), error_);
}

BigFloat ApproxReal::magnitude_lower() const {
  BigFloat out(kErr);
  mpfr_sub(out.get(), abs_down(value_).get(), error_.get(), MPFR_RNDD);
  if (out.sign() < 0) mpfr_set_zero(out.get(), 1);
  return out;
}

BigFloat ApproxReal::lower() const {
  BigFloat out(precision() + kErr);
  mpfr_sub(out.get(), value_.get(), error_.get(), MPFR_RNDD);
  return out;
}

BigFloat ApproxReal::upper() const {
  BigFloat out(precision() + kErr);
  mpfr_add(out.get(), value_.get(), error_.get(), MPFR_RNDU);
  return out;
}

bool ApproxReal::contains(const BigFloat& x) const {
  return compare(lower(), x) <= 0 && compare(x, upper()) <= 0;
}

bool ApproxReal::overlaps(const ApproxReal& other) const {
  return compare(lower(), other.upper()) <= 0 && compare(other.lower(), upper()) <= 0;
}

bool ApproxReal::is_positive() const { return lower().sign() > 0; }

ApproxReal operator+(const ApproxReal& a, const ApproxReal& b) {
  BigFloat v(joint_precision(a, b));
  const int t = mpfr_add(v.get(), a.value_.get(), b.value_.get(), MPFR_RNDN);
  BigFloat e = add_up(a.error_, b.error_);
  charge_rounding(e, v, t);
  return {std::move(v), std::move(e)};
}

ApproxReal operator-(const ApproxReal& a, const ApproxReal& b) {
  BigFloat v(joint_precision(a, b));
  const int t = mpfr_sub(v.get(), a.value_.get(), b.value_.get(), MPFR_RNDN);
  BigFloat e = add_up(a.error_, b.error_);
  charge_rounding(e, v, t);
  return {std::move(v), std::move(e)};
}

ApproxReal operator-(const ApproxReal& a) {
  BigFloat v(a.precision());
  mpfr_neg(v.get(), a.value_.get(), MPFR_RNDN);
  return {std::move(v), a.error_};
}

ApproxReal operator*(const ApproxReal& a, const ApproxReal& b) {
  BigFloat v(joint_precision(a, b));
  const int t = mpfr_mul(v.get(), a.value_.get(), b.value_.get(), MPFR_RNDN);
  // |xy - x~y~| <= |x~| e_y + |y~| e_x + e_x e_y
  BigFloat e = add_up(add_up(mul_up(abs_up(a.value_), b.error_), mul_up(abs_up(b.value_), a.error_)),
                      mul_up(a.error_, b.error_));
  charge_rounding(e, v, t);
  return {std::move(v), std::move(e)};
}

ApproxReal operator/(const ApproxReal& a, const ApproxReal& b) {
  const BigFloat denom_low = b.magnitude_lower();
  if (denom_low.is_zero()) throw DomainError("ApproxReal: divisor enclosure contains zero");
  BigFloat v(joint_precision(a, b));
  const int t = mpfr_div(v.get(), a.value_.get(), b.value_.get(), MPFR_RNDN);
  // |x/y - x~/y~| <= (|x~| e_y + |y~| e_x) / (|y~| (|y~| - e_y))
  BigFloat e = add_up(mul_up(abs_up(a.value_), b.error_), mul_up(abs_up(b.value_), a.error_));
  BigFloat d(kErr);
  mpfr_mul(d.get(), abs_down(b.value_).get(), denom_low.get(), MPFR_RNDD);
  mpfr_div(e.get(), e.get(), d.get(), MPFR_RNDU);
  charge_rounding(e, v, t);
  return {std::move(v), std::move(e)};
}

ApproxReal ApproxReal::pow(long exponent) const {
  if (exponent == 0) return exact(1, precision());
  if (exponent == 1) return *this;
  BigFloat v(precision());
  BigFloat e(kErr);
  const unsigned long n = static_cast<unsigned long>(std::labs(exponent));
  if (exponent > 0) {
    // |x^n - x~^n| <= n M^{n-1} e, M = |x~| + e
    mpfr_pow_ui(e.get(), magnitude_upper().get(), n - 1, MPFR_RNDU);
  } else {
    const BigFloat m = magnitude_lower();
    if (m.is_zero()) throw DomainError("ApproxReal: negative power of an enclosure containing zero");
    // |x^{-n} - x~^{-n}| <= n e m^{-n-1}, m = |x~| - e
    mpfr_pow_ui(e.get(), m.get(), n + 1, MPFR_RNDD);
    mpfr_ui_div(e.get(), 1, e.get(), MPFR_RNDU);
  }
  mpfr_mul_ui(e.get(), e.get(), n, MPFR_RNDU);
  e = mul_up(e, error_);
  const int t = mpfr_pow_si(v.get(), value_.get(), exponent, MPFR_RNDN);
  charge_rounding(e, v, t);
  return {std::move(v), std::move(e)};
}

ApproxReal ApproxReal::sqrt() const {
  if (lower().sign() < 0) throw DomainError("ApproxReal: sqrt of an enclosure reaching below zero");
  BigFloat v(precision());
  const int t = mpfr_sqrt(v.get(), value_.get(), MPFR_RNDN);
  BigFloat e = err_zero();
  if (!error_.is_zero()) {
    // |sqrt x - sqrt x~| <= e / sqrt(x~)
    BigFloat root(kErr);
    mpfr_sqrt(root.get(), abs_down(value_).get(), MPFR_RNDD);
    if (root.is_zero()) {
      mpfr_sqrt(e.get(), error_.get(), MPFR_RNDU);
    } else {
      mpfr_div(e.get(), error_.get(), root.get(), MPFR_RNDU);
    }
  }
  charge_rounding(e, v, t);
  return {std::move(v), std::move(e)};
}

ApproxReal ApproxReal::log() const {
  if (!is_positive()) throw DomainError("ApproxReal: log of a non-positive enclosure");
  BigFloat v(precision());
  const int t = mpfr_log(v.get(), value_.get(), MPFR_RNDN);
  // |log x - log x~| <= e / (x~ - e)
  BigFloat e(kErr);
  mpfr_div(e.get(), error_.get(), magnitude_lower().get(), MPFR_RNDU);
  charge_rounding(e, v, t);
  return {std::move(v), std::move(e)};
}

ApproxReal ApproxReal::widened(const BigFloat& extra) const {
  if (extra.sign() < 0) throw DomainError("ApproxReal: widening by a negative amount");
  return {value_, add_up(error_, abs_up(extra))};
}

int ApproxReal::decimal_digits() const {
  return std::max(1, static_cast<int>(std::floor(static_cast<double>(precision()) * 0.30102999566398120)));
}

ApproxReal pi_approx(long precision_bits) {
  if (precision_bits < 16) throw DomainError("pi_approx: precision_bits must be >= 16");
  BigFloat v(precision_bits + 32);
  const int t = mpfr_const_pi(v.get(), MPFR_RNDN);
  BigFloat e = err_zero();
  charge_rounding(e, v, t);
  return {std::move(v), std::move(e)};
}

}  // namespace lorentzvol
