#include "lorentzvol/volume.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>

#include "lorentzvol/errors.hpp"
#include "lorentzvol/zeta.hpp"

namespace lorentzvol {

VolumeExpression VolumeExpression::make(ExactRational coefficient, long sqrt3_exponent,
                                        long pi_exponent, std::vector<long> zeta_args,
                                        std::vector<long> l3_args, const BernoulliTable& table) {
  if (coefficient.sign() <= 0) throw DomainError("VolumeExpression: coefficient must be positive");

  VolumeExpression out;
  // sqrt(3)^{2q + e} = 3^q sqrt(3)^e
  const long e = ((sqrt3_exponent % 2) + 2) % 2;
  coefficient *= ExactRational(3).pow((sqrt3_exponent - e) / 2);
  out.sqrt3_exponent_ = e;

  for (long s : zeta_args) {
    if (s < 2) throw DomainError("VolumeExpression: zeta argument must be >= 2");
    if (s % 2 == 0) {
      const EvenZeta z = zeta_even_exact(static_cast<unsigned long>(s / 2), table);
      coefficient *= z.coefficient;
      pi_exponent += z.pi_exponent;
    } else {
      out.zeta_factors_.push_back(s);
    }
  }
  for (long t : l3_args) {
    if (t < 2) throw DomainError("VolumeExpression: L argument must be >= 2");
    out.l3_factors_.push_back(t);
  }
  std::sort(out.zeta_factors_.begin(), out.zeta_factors_.end());
  std::sort(out.l3_factors_.begin(), out.l3_factors_.end());
  out.coefficient_ = std::move(coefficient);
  out.pi_exponent_ = pi_exponent;
  return out;
}

std::string VolumeExpression::to_string() const {
  std::ostringstream os;
  os << coefficient_;
  if (sqrt3_exponent_ != 0) os << " * sqrt(3)";
  if (pi_exponent_ != 0) os << " * pi^" << pi_exponent_;
  for (long s : zeta_factors_) os << " * zeta(" << s << ")";
  for (long t : l3_factors_) os << " * L(" << t << ", chi_-3)";
  return os.str();
}

VolumeExpression multiply_scalar(const VolumeExpression& expr, const ExactRational& q) {
  if (q.sign() <= 0) throw DomainError("multiply_scalar: scalar must be positive");
  return VolumeExpression::make(expr.coefficient() * q, expr.sqrt3_exponent(), expr.pi_exponent(),
                                expr.zeta_factors(), expr.l3_factors());
}

VolumeExpression multiply(const VolumeExpression& a, const VolumeExpression& b) {
  std::vector<long> zetas = a.zeta_factors();
  zetas.insert(zetas.end(), b.zeta_factors().begin(), b.zeta_factors().end());
  std::vector<long> ls = a.l3_factors();
  ls.insert(ls.end(), b.l3_factors().begin(), b.l3_factors().end());
  return VolumeExpression::make(a.coefficient() * b.coefficient(),
                                a.sqrt3_exponent() + b.sqrt3_exponent(),
                                a.pi_exponent() + b.pi_exponent(), std::move(zetas), std::move(ls));
}

ApproxReal evaluate(const VolumeExpression& expr, long precision_bits) {
  if (precision_bits < 16) throw DomainError("evaluate: precision_bits must be >= 16");
  for (long s : expr.zeta_factors()) {
    if (s < 2) throw DomainError("evaluate: zeta argument must be >= 2");
  }
  for (long t : expr.l3_factors()) {
    if (t < 2) throw DomainError("evaluate: L argument must be >= 2");
  }
  // Each factor is evaluated a few bits past the target so the relative
  // errors of the product stay below 2^{-precision_bits}.
  const long factor_count = 2 + static_cast<long>(expr.zeta_factors().size() + expr.l3_factors().size());
  long extra = 8;
  while ((1L << (extra - 8)) < factor_count) ++extra;
  const long bits = precision_bits + extra;
  const mpfr_prec_t work = bits + 32;

  ApproxReal out = ApproxReal::from_rational(expr.coefficient(), work);
  if (expr.sqrt3_exponent() != 0) out *= ApproxReal::exact(3, work).sqrt();
  if (expr.pi_exponent() != 0) out *= pi_approx(bits).pow(expr.pi_exponent());
  for (long s : expr.zeta_factors()) out *= zeta_int(s, bits);
  for (long t : expr.l3_factors()) out *= dirichlet_L_chi3(t, bits);
  return out;
}

namespace {

long to_r(long n) { return (n + 1) / 2; }

// prod_{j=1}^{r-1} (2j-1)!/(2 pi)^{2j} * zeta(2j), as raw factors.
struct RawProduct {
  ExactRational coefficient{1};
  long pi_exponent = 0;
  std::vector<long> zeta_args;
};

RawProduct even_zeta_product(long r) {
  RawProduct p;
  for (long j = 1; j < r; ++j) {
    p.coefficient *= ExactRational(factorial(static_cast<unsigned long>(2 * j - 1))) /
                     ExactRational(2).pow(2 * j);
    p.pi_exponent -= 2 * j;
    p.zeta_args.push_back(2 * j);
  }
  return p;
}

}  // namespace

VolumeExpression covolume_smallest_orbifold(long n, const BernoulliTable& table) {
  if (n < 5 || n % 2 == 0) {
    throw DomainError("covolume_smallest_orbifold: n must be odd and >= 5, got " + std::to_string(n));
  }
  const long r = to_r(n);
  RawProduct p = even_zeta_product(r);
  const ExactRational two(2);

  if (n % 8 == 1) {
    p.zeta_args.push_back(r);
    return VolumeExpression::make(p.coefficient / two.pow(r - 2), 0, p.pi_exponent,
                                  std::move(p.zeta_args), {}, table);
  }
  if (n % 8 == 5) {
    const ExactRational prefactor =
        (two.pow(r) - ExactRational(1)) * (two.pow(r - 1) - ExactRational(1)) /
        (ExactRational(3) * two.pow(r - 1));
    p.zeta_args.push_back(r);
    return VolumeExpression::make(p.coefficient * prefactor, 0, p.pi_exponent,
                                  std::move(p.zeta_args), {}, table);
  }
  // n = 3 (mod 4): 3^{r-1/2} = sqrt(3)^{2r-1}
  return VolumeExpression::make(p.coefficient / two.pow(r - 1), 2 * r - 1, p.pi_exponent,
                                std::move(p.zeta_args), {r}, table);
}

VolumeExpression covolume_PO_even_unimodular(long n, const BernoulliTable& table) {
  if (n < 9 || n % 8 != 1) {
    throw DomainError("covolume_PO_even_unimodular: n must satisfy n = 1 (mod 8) and n >= 9, got " +
                      std::to_string(n));
  }
  const long r = to_r(n);
  ExactRational coefficient(1);
  for (long j = 1; j < r; ++j) {
    coefficient *= table(static_cast<unsigned long>(2 * j)).abs() / ExactRational(8 * j);
  }
  return VolumeExpression::make(std::move(coefficient), 0, 0, {r}, {}, table);
}

VolumeExpression covolume_PSO_odd_unimodular(long n, const BernoulliTable& table) {
  if (n < 5 || n % 8 != 5) {
    throw DomainError("covolume_PSO_odd_unimodular: n must satisfy n = 5 (mod 8), got " +
                      std::to_string(n));
  }
  return multiply_scalar(covolume_smallest_orbifold(n, table), ExactRational(3));
}

VolumeExpression coxeter_polytope_volume_17(const BernoulliTable& table) {
  return multiply_scalar(covolume_PO_even_unimodular(17, table), ExactRational(2));
}

}  // namespace lorentzvol
