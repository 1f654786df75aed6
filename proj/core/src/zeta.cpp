#include "lorentzvol/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "lorentzvol/bernoulli.hpp"
#include "lorentzvol/errors.hpp"

namespace lorentzvol {
namespace {

constexpr long kGuardBits = 32;
constexpr long kRemainderMargin = 8;

void require_precision(long precision_bits, const char* who) {
  if (precision_bits < 16) {
    throw DomainError(std::string(who) + ": precision_bits must be >= 16");
  }
}

// log2 of an upper estimate of |B_{2j}|/(2j)!, which equals 2 zeta(2j)/(2pi)^{2j}.
double log2_bernoulli_ratio(long j) {
  return std::log2(2.0 * std::numbers::pi * std::numbers::pi / 6.0) -
         2.0 * static_cast<double>(j) * std::log2(2.0 * std::numbers::pi);
}

double log2_rising(long s, long count) {
  return (std::lgamma(static_cast<double>(s + count)) - std::lgamma(static_cast<double>(s))) /
         std::numbers::ln2;
}

// Estimated log2 of the j-th correction for (k+a)^{-s} at cut point x.
double log2_hurwitz_correction(long s, long j, double x) {
  return log2_bernoulli_ratio(j) + log2_rising(s, 2 * j - 1) -
         static_cast<double>(s + 2 * j - 1) * std::log2(x);
}

// Same for g(x) = 1/(x+1/3) - 1/(x+2/3); its correction is
// B_{2j}/(2j) (u^{-2j} - v^{-2j}) with u^{-2j} - v^{-2j} <= (2j/3) u^{-2j-1}.
double log2_chi3_correction(long j, double u) {
  const double jj = static_cast<double>(j);
  return log2_bernoulli_ratio(j) + std::lgamma(2.0 * jj + 1.0) / std::numbers::ln2 -
         std::log2(3.0) - (2.0 * jj + 1.0) * std::log2(u);
}

template <typename Estimate>
EulerMaclaurinPlan choose_plan(long start_terms, long target_bits, Estimate estimate) {
  long terms = std::max(2L, start_terms);
  for (;;) {
    double previous = INFINITY;
    for (long m = 1;; ++m) {
      const double est = estimate(terms, m);
      if (est <= -static_cast<double>(target_bits)) return {terms, m};
      if (est >= previous) break;  // corrections began to grow
      previous = est;
    }
    terms += terms / 2 + 1;
  }
}

long magnitude_bits(long s, double a) {
  return static_cast<long>(std::ceil(static_cast<double>(s) * std::max(0.0, -std::log2(a)))) + 1;
}

// sum_{k>=0} (k+a)^{-s} at working precision `work`, remainder below 2^{-target}.
ApproxReal hurwitz_sum(long s, const ExactRational& a, mpfr_prec_t work, long target) {
  const EulerMaclaurinPlan plan = plan_hurwitz(s, a.raw().get_d(), target);
  const BernoulliTable& bern = BernoulliTable::standard();

  ApproxReal head = ApproxReal::exact(0, work);
  for (long k = 0; k < plan.terms; ++k) {
    head += ApproxReal::from_rational(a + ExactRational(k), work).pow(-s);
  }

  const ApproxReal x = ApproxReal::from_rational(a + ExactRational(plan.terms), work);
  const ApproxReal x_pow_s = x.pow(-s);
  // integral (N+a)^{1-s}/(s-1) and half the boundary term
  ApproxReal tail = x_pow_s * x / ApproxReal::exact(s - 1, work) +
                    x_pow_s / ApproxReal::exact(2, work);

  const ApproxReal inv_x2 = x.pow(-2);
  ApproxReal power = x_pow_s / x;  // x^{-s-2j+1} for j = 1
  BigInt rising = s;               // s (s+1) ... (s+2j-2)
  ApproxReal last = ApproxReal::exact(0, work);
  for (long j = 1; j <= plan.corrections; ++j) {
    if (j > 1) {
      rising *= BigInt(s + 2 * j - 3) * BigInt(s + 2 * j - 2);
      power = power * inv_x2;
    }
    const ExactRational coeff =
        bern(static_cast<unsigned long>(2 * j)) * ExactRational(rising) /
        ExactRational(factorial(static_cast<unsigned long>(2 * j)));
    last = ApproxReal::from_rational(coeff, work) * power;
    tail += last;
  }
  // The remainder after M corrections is bounded by the M-th correction,
  // because the 2M-th derivative of (x+a)^{-s} keeps one sign.
  return (head + tail).widened(last.magnitude_upper());
}

}  // namespace

EulerMaclaurinPlan plan_hurwitz(long s, double a, long target_bits) {
  return choose_plan(target_bits / 4, target_bits, [&](long terms, long m) {
    return log2_hurwitz_correction(s, m, static_cast<double>(terms) + a);
  });
}

ApproxReal hurwitz_zeta(long s, const ExactRational& a, long precision_bits) {
  require_precision(precision_bits, "hurwitz_zeta");
  if (s < 2) throw DomainError("hurwitz_zeta: s must be >= 2");
  if (a.sign() <= 0 || a > ExactRational(1)) {
    throw DomainError("hurwitz_zeta: a must lie in (0, 1]");
  }
  const double ad = a.raw().get_d();
  const mpfr_prec_t work = precision_bits + kGuardBits + magnitude_bits(s, ad);
  return hurwitz_sum(s, a, work, precision_bits + kRemainderMargin);
}

ApproxReal zeta_int(long s, long precision_bits) {
  require_precision(precision_bits, "zeta_int");
  if (s < 2) throw DomainError("zeta_int: s must be >= 2 (pole at s = 1)");
  return hurwitz_sum(s, ExactRational(1), precision_bits + kGuardBits,
                     precision_bits + kRemainderMargin);
}

namespace {

// L(1, chi_{-3}) = (1/3) sum_{k>=0} [1/(k+1/3) - 1/(k+2/3)], summed by
// Euler–Maclaurin with the logarithmic integral term.
ApproxReal dirichlet_L_chi3_at_one(long precision_bits) {
  const long target = precision_bits + kRemainderMargin;
  const mpfr_prec_t work = precision_bits + kGuardBits;
  const EulerMaclaurinPlan plan = choose_plan(target / 4, target, [](long terms, long m) {
    return log2_chi3_correction(m, static_cast<double>(terms) + 1.0 / 3.0);
  });
  const BernoulliTable& bern = BernoulliTable::standard();
  const ExactRational third(BigInt(1), BigInt(3));
  const ExactRational two_thirds(BigInt(2), BigInt(3));

  ApproxReal head = ApproxReal::exact(0, work);
  for (long k = 0; k < plan.terms; ++k) {
    // 1/(k+1/3) - 1/(k+2/3) = (1/3) / ((k+1/3)(k+2/3)), exactly
    const ExactRational term =
        third / ((ExactRational(k) + third) * (ExactRational(k) + two_thirds));
    head += ApproxReal::from_rational(term, work);
  }

  const ExactRational n(plan.terms);
  const ExactRational u_exact = n + third;
  const ExactRational v_exact = n + two_thirds;
  ApproxReal tail = ApproxReal::from_rational(v_exact / u_exact, work).log() +
                    ApproxReal::from_rational(third / (u_exact * v_exact) / ExactRational(2), work);

  const ApproxReal u_inv2 = ApproxReal::from_rational(u_exact.pow(-2), work);
  const ApproxReal v_inv2 = ApproxReal::from_rational(v_exact.pow(-2), work);
  ApproxReal u_pow = u_inv2;
  ApproxReal v_pow = v_inv2;
  ApproxReal last = ApproxReal::exact(0, work);
  for (long j = 1; j <= plan.corrections; ++j) {
    if (j > 1) {
      u_pow = u_pow * u_inv2;
      v_pow = v_pow * v_inv2;
    }
    const ExactRational coeff = bern(static_cast<unsigned long>(2 * j)) / ExactRational(2 * j);
    last = ApproxReal::from_rational(coeff, work) * (u_pow - v_pow);
    tail += last;
  }
  const ApproxReal sum = (head + tail).widened(last.magnitude_upper());
  return sum / ApproxReal::exact(3, work);
}

}  // namespace

ApproxReal dirichlet_L_chi3(long s, long precision_bits) {
  require_precision(precision_bits, "dirichlet_L_chi3");
  if (s < 1) throw DomainError("dirichlet_L_chi3: s must be >= 1");
  if (s == 1) return dirichlet_L_chi3_at_one(precision_bits);

  const ExactRational third(BigInt(1), BigInt(3));
  const ExactRational two_thirds(BigInt(2), BigInt(3));
  const mpfr_prec_t work = precision_bits + kGuardBits + magnitude_bits(s, 1.0 / 3.0);
  // 3^{-s} < 1 only shrinks the two remainders.
  const long target = precision_bits + kRemainderMargin + 1;
  const ApproxReal difference = hurwitz_sum(s, third, work, target) - hurwitz_sum(s, two_thirds, work, target);
  return ApproxReal::from_rational(ExactRational(3).pow(-s), work) * difference;
}

}  // namespace lorentzvol
