#include <gtest/gtest.h>

#include "lorentzvol/bernoulli.hpp"
#include "lorentzvol/errors.hpp"
#include "lorentzvol/zeta.hpp"
#include "oracles.hpp"

namespace lorentzvol {
namespace {

// Radius must respect |value - true| <= abs_error <= 2^{-bits+4}.
void expect_contract(const ApproxReal& x, long bits) {
  oracle::Mp bound(64);
  mpfr_set_ui_2exp(bound.v, 1, -bits + 4, MPFR_RNDN);
  EXPECT_LE(mpfr_cmp(x.abs_error().get(), bound.v), 0);
}

oracle::Mp& tiny(oracle::Mp& m, long bits) {
  mpfr_set_ui_2exp(m.v, 1, -bits, MPFR_RNDN);
  return m;
}

TEST(ZetaInt, EnclosesMpfrReference) {
  for (long bits : {64L, 128L, 256L}) {
    for (long s = 2; s <= 40; ++s) {
      const ApproxReal z = zeta_int(s, bits);
      expect_contract(z, bits);
      oracle::Mp ref(bits + 128), slack(64);
      mpfr_zeta_ui(ref.v, static_cast<unsigned long>(s), MPFR_RNDN);
      EXPECT_TRUE(oracle::encloses_within(z, ref.v, tiny(slack, bits + 100).v))
          << "s = " << s << " bits = " << bits;
    }
  }
}

TEST(ZetaInt, MatchesEvenExactFold) {
  const ApproxReal pi = pi_approx(128);
  for (unsigned long j = 1; j <= 8; ++j) {
    const EvenZeta e = zeta_even_exact(j);
    const ApproxReal folded = ApproxReal::from_rational(e.coefficient, 160) * pi.pow(e.pi_exponent);
    EXPECT_TRUE(folded.overlaps(zeta_int(static_cast<long>(2 * j), 128))) << j;
  }
}

TEST(ZetaInt, NineFromDirectSummation) {
  // sum_{n <= 10^6} n^{-9} plus integral tail bracket [ (N+1)^{-8}/8, N^{-8}/8 ]
  constexpr unsigned long kTerms = 1000000;
  oracle::Mp sum(160), t(160);
  for (unsigned long n = kTerms; n >= 1; --n) {
    mpfr_ui_pow_ui(t.v, n, 9, MPFR_RNDN);
    mpfr_ui_div(t.v, 1, t.v, MPFR_RNDN);
    mpfr_add(sum.v, sum.v, t.v, MPFR_RNDN);
  }
  mpfr_set_d(t.v, 0.125e-48, MPFR_RNDN);  // N^{-8}/8 for N = 10^6
  mpfr_add(sum.v, sum.v, t.v, MPFR_RNDN);
  const ApproxReal z = zeta_int(9, 128);
  oracle::Mp slack(64);
  mpfr_set_d(slack.v, 1e-45, MPFR_RNDN);
  EXPECT_TRUE(oracle::encloses_within(z, sum.v, slack.v));
  EXPECT_EQ(z.value().to_scientific(9), "1.00200839e0");
}

TEST(ZetaInt, ThirtyFromThreeTermPartialSum) {
  // zeta(30) - (1 + 2^-30 + 3^-30) lies in [4^-30, 4^-30 + 4^-29/29].
  const ApproxReal z = zeta_int(30, 64);
  const mpq_class partial = 1 + mpq_class(1, mpz_class(1) << 30) +
                            mpq_class(mpz_class(1), mpz_class("205891132094649"));
  mpq_class four30(mpz_class(1), mpz_class(1) << 60);
  const mpq_class upper = partial + four30 + mpq_class(mpz_class(1), (mpz_class(1) << 58) * 29);
  mpq_class lo;
  mpq_class hi;
  mpfr_get_q(lo.get_mpq_t(), z.lower().get());
  mpfr_get_q(hi.get_mpq_t(), z.upper().get());
  EXPECT_LE(lo, upper);
  EXPECT_GE(hi, partial + four30);
  // The three-term sum alone is off by slightly more than 2^-60.
  EXPECT_GT(hi - partial, mpq_class(four30));
}

TEST(ZetaInt, RejectsPoleAndLowPrecision) {
  EXPECT_THROW(zeta_int(1, 64), DomainError);
  EXPECT_THROW(zeta_int(0, 64), DomainError);
  EXPECT_THROW(zeta_int(3, 8), DomainError);
}

TEST(ZetaInt, MonotoneRefinementAndNestedEnclosures) {
  for (long s : {2L, 3L, 5L, 9L, 17L}) {
    for (long bits : {32L, 64L, 128L, 256L}) {
      const ApproxReal coarse = zeta_int(s, bits);
      const ApproxReal fine = zeta_int(s, 2 * bits);
      EXPECT_LE(compare(fine.abs_error(), coarse.abs_error()), 0) << s << " " << bits;
      EXPECT_TRUE(coarse.overlaps(fine)) << s << " " << bits;
    }
  }
}

TEST(HurwitzZeta, ReducesToRiemannZetaAtOne) {
  for (long s : {2L, 5L, 9L}) {
    EXPECT_TRUE(hurwitz_zeta(s, ExactRational(1), 128).overlaps(zeta_int(s, 128))) << s;
  }
}

TEST(HurwitzZeta, HalfShiftIdentity) {
  // zeta(2, 1/2) = (2^2 - 1) zeta(2)
  const ApproxReal half = hurwitz_zeta(2, ExactRational(BigInt(1), BigInt(2)), 128);
  const ApproxReal three_zeta2 = ApproxReal::exact(3, 160) * zeta_int(2, 128);
  EXPECT_TRUE(half.overlaps(three_zeta2));
}

TEST(HurwitzZeta, ThirdAgainstReferenceDigits) {
  const ApproxReal h = hurwitz_zeta(3, ExactRational(BigInt(1), BigInt(3)), 128);
  expect_contract(h, 128);
  EXPECT_GT(h.to_double(), 27.0);
  // mpmath, 30 significant digits
  oracle::Mp ref(200), slack(64);
  mpfr_set_str(ref.v, "27.5610611997008037762278779774", 10, MPFR_RNDN);
  mpfr_set_d(slack.v, 1e-28, MPFR_RNDN);
  EXPECT_TRUE(oracle::encloses_within(h, ref.v, slack.v));
}

TEST(HurwitzZeta, LargeLeadingTermKeepsAbsoluteContract) {
  const ApproxReal h = hurwitz_zeta(20, ExactRational(BigInt(1), BigInt(3)), 64);
  expect_contract(h, 64);
  EXPECT_GT(h.to_double(), 3486784401.0);  // 3^20
}

TEST(HurwitzZeta, RejectsBadArguments) {
  EXPECT_THROW(hurwitz_zeta(1, ExactRational(1), 64), DomainError);
  EXPECT_THROW(hurwitz_zeta(2, ExactRational(0), 64), DomainError);
  EXPECT_THROW(hurwitz_zeta(2, ExactRational(-1), 64), DomainError);
  EXPECT_THROW(hurwitz_zeta(2, ExactRational(BigInt(3), BigInt(2)), 64), DomainError);
}

TEST(DirichletL, AtOneMatchesClassNumberFormula) {
  for (long bits : {64L, 128L, 256L}) {
    const ApproxReal l1 = dirichlet_L_chi3(1, bits);
    expect_contract(l1, bits);
    oracle::Mp ref(bits + 128), root(bits + 128), slack(64);
    mpfr_const_pi(ref.v, MPFR_RNDN);
    mpfr_sqrt_ui(root.v, 27, MPFR_RNDN);
    mpfr_div(ref.v, ref.v, root.v, MPFR_RNDN);
    EXPECT_TRUE(oracle::encloses_within(l1, ref.v, tiny(slack, bits + 100).v)) << bits;
  }
}

TEST(DirichletL, AtOneAgainstAlternatingSeries) {
  // Grouped character series 1 - 1/2 + 1/4 - 1/5 + ...; the alternating
  // tail is bounded by the first omitted term 1/(3K+1).
  constexpr long kGroups = 200000;
  oracle::Mp sum(128), t(128);
  for (long k = kGroups - 1; k >= 0; --k) {
    mpfr_set_ui(t.v, 1, MPFR_RNDN);
    mpfr_div_ui(t.v, t.v, static_cast<unsigned long>((3 * k + 1) * (3 * k + 2)), MPFR_RNDN);
    mpfr_add(sum.v, sum.v, t.v, MPFR_RNDN);
  }
  oracle::Mp slack(64);
  mpfr_set_d(slack.v, 1.0 / (3.0 * kGroups + 1.0), MPFR_RNDU);
  const ApproxReal l1 = dirichlet_L_chi3(1, 64);
  EXPECT_TRUE(oracle::encloses_within(l1, sum.v, slack.v));
  EXPECT_EQ(l1.value().to_scientific(8), "6.0459979e-1");
}

TEST(DirichletL, AtTwoAgainstReferenceDigits) {
  const ApproxReal l2 = dirichlet_L_chi3(2, 128);
  expect_contract(l2, 128);
  oracle::Mp ref(200), slack(64);
  mpfr_set_str(ref.v, "0.781302412896486296867187429624", 10, MPFR_RNDN);
  mpfr_set_d(slack.v, 1e-29, MPFR_RNDN);
  EXPECT_TRUE(oracle::encloses_within(l2, ref.v, slack.v));
}

TEST(DirichletL, LargeSIsNearTwoTermSum) {
  const ApproxReal l = dirichlet_L_chi3(20, 64);
  oracle::Mp ref(128), slack(64);
  mpfr_set_ui_2exp(ref.v, 1, -20, MPFR_RNDN);
  mpfr_ui_sub(ref.v, 1, ref.v, MPFR_RNDN);
  mpfr_set_ui_2exp(slack.v, 1, -40, MPFR_RNDN);
  EXPECT_TRUE(oracle::encloses_within(l, ref.v, slack.v));
}

TEST(DirichletL, RejectsNonPositive) {
  EXPECT_THROW(dirichlet_L_chi3(0, 64), DomainError);
  EXPECT_THROW(dirichlet_L_chi3(-3, 64), DomainError);
}

TEST(DirichletL, MonotoneRefinement) {
  for (long s : {1L, 2L, 4L, 8L}) {
    for (long bits : {64L, 128L}) {
      const ApproxReal coarse = dirichlet_L_chi3(s, bits);
      const ApproxReal fine = dirichlet_L_chi3(s, 2 * bits);
      EXPECT_LE(compare(fine.abs_error(), coarse.abs_error()), 0) << s;
      EXPECT_TRUE(coarse.overlaps(fine)) << s;
    }
  }
}

TEST(EulerMaclaurinPlan, DeterministicAndSufficient) {
  EXPECT_EQ(plan_hurwitz(9, 1.0, 136), plan_hurwitz(9, 1.0, 136));
  const EulerMaclaurinPlan p = plan_hurwitz(2, 1.0, 136);
  EXPECT_GE(p.terms, 2);
  EXPECT_GE(p.corrections, 1);
}

}  // namespace
}  // namespace lorentzvol
