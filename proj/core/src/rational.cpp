#include "lorentzvol/rational.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

#include "lorentzvol/errors.hpp"

namespace lorentzvol {

ExactRational::ExactRational(long value) : value_(value) {}

ExactRational::ExactRational(const BigInt& value) : value_(value) {}

ExactRational::ExactRational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw DomainError("ExactRational: zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

ExactRational::ExactRational(mpq_class value) : value_(std::move(value)) {}

ExactRational ExactRational::parse(const std::string& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw DomainError("ExactRational: cannot parse '" + text + "'");
  }
  if (q.get_den() == 0) throw DomainError("ExactRational: zero denominator");
  q.canonicalize();
  return ExactRational(std::move(q));
}

ExactRational ExactRational::abs() const {
  return ExactRational(mpq_class(::abs(value_)));
}

ExactRational ExactRational::reciprocal() const {
  if (is_zero()) throw DomainError("ExactRational: reciprocal of zero");
  return ExactRational(mpq_class(1 / value_));
}

ExactRational ExactRational::pow(long exponent) const {
  if (exponent < 0) return reciprocal().pow(-exponent);
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  // Powers of coprime integers stay coprime.
  mpq_class q;
  q.get_num() = num;
  q.get_den() = den;
  return ExactRational(std::move(q));
}

std::string ExactRational::to_string() const {
  return value_.get_str(10);
}

ExactRational& ExactRational::operator+=(const ExactRational& rhs) {
  value_ += rhs.value_;
  return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

ExactRational& ExactRational::operator*=(const ExactRational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
  if (rhs.is_zero()) throw DomainError("ExactRational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

ExactRational operator-(const ExactRational& x) {
  return ExactRational(mpq_class(-x.value_));
}

std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
  const int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const ExactRational& q) {
  return os << q.to_string();
}

BigInt binomial(unsigned long m, unsigned long j) {
  if (j > m) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), m, j);
  return out;
}

BigInt factorial(unsigned long m) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), m);
  return out;
}

}  // namespace lorentzvol
