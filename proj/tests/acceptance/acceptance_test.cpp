// Acceptance suite: one line per criterion, exit status 0 iff all pass.
// Tolerances and runtime limits are fixed here and never tuned at run time.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <mpfr.h>

#include "lorentzvol/approx_real.hpp"
#include "lorentzvol/bernoulli.hpp"
#include "lorentzvol/coxeter.hpp"
#include "lorentzvol/gram.hpp"
#include "lorentzvol/mass.hpp"
#include "lorentzvol/volume.hpp"
#include "lorentzvol/zeta.hpp"
#include "oracles.hpp"

using namespace lorentzvol;

namespace {

struct Criterion {
  int id;
  std::string title;
  double time_limit_seconds;
  // Returns an empty string on success, else the reason for failure.
  std::function<std::string()> body;
};

std::string fail_if(bool bad, const std::string& why) { return bad ? why : std::string(); }

BigInt coxeter_denominator() {
  return (BigInt(1) << 38) * 59049 * 625 * 49 * 11 * 13 * 17;  // 2^38 3^10 5^4 7^2 11 13 17
}

std::string exact_coxeter() {
  const VolumeExpression v = coxeter_polytope_volume_17();
  const ExactRational expected(BigInt(691) * 3617, coxeter_denominator());
  if (v.coefficient() != expected) return "coefficient " + v.coefficient().to_string();
  if (v.zeta_factors() != std::vector<long>{9}) return "zeta factors differ";
  if (v.sqrt3_exponent() != 0 || v.pi_exponent() != 0 || !v.l3_factors().empty()) return "extra factors";
  return {};
}

std::string numeric_coxeter() {
  const ApproxReal x = evaluate(coxeter_polytope_volume_17(), 128);
  oracle::Mp ref(256), diff(256), tol(256), lo(256), hi(256);
  // Nine significant figures of 2.072451981e-18: |x - ref| <= 0.5e-8 * 1e-18.
  mpfr_set_str(ref.v, "2.072451981e-18", 10, MPFR_RNDN);
  mpfr_set_str(tol.v, "5e-27", 10, MPFR_RNDN);
  mpfr_sub(diff.v, x.value().get(), ref.v, MPFR_RNDN);
  mpfr_abs(diff.v, diff.v, MPFR_RNDN);
  mpfr_add(diff.v, diff.v, x.abs_error().get(), MPFR_RNDU);
  if (mpfr_cmp(diff.v, tol.v) > 0) return "value " + x.value().to_scientific(12) + " misses 9 figures";
  // Whole enclosure inside 2.069e-18 +/- 2.4e-20.
  mpfr_set_str(lo.v, "2.045e-18", 10, MPFR_RNDN);
  mpfr_set_str(hi.v, "2.093e-18", 10, MPFR_RNDN);
  if (mpfr_cmp(x.lower().get(), lo.v) < 0 || mpfr_cmp(x.upper().get(), hi.v) > 0) {
    return "enclosure leaves the numerical-integration interval";
  }
  return {};
}

std::string index_two() {
  for (long n : {9L, 17L, 25L, 33L, 41L}) {
    if (covolume_smallest_orbifold(n) != multiply_scalar(covolume_PO_even_unimodular(n), ExactRational(2))) {
      return "n = " + std::to_string(n);
    }
  }
  return {};
}

std::string mass_anchor() {
  const ExactRational m = mass_even_unimodular(8);
  return fail_if(m != ExactRational(BigInt(1), BigInt(696729600)), "mass(8) = " + m.to_string());
}

std::string ratio_identity() {
  std::vector<ApproxReal> values;
  for (long n : {9L, 17L, 25L, 33L}) {
    const VolumeExpression lhs =
        multiply_scalar(covolume_PO_even_unimodular(n), mass_even_unimodular(n - 1).reciprocal());
    const VolumeExpression rhs = volume_mass_ratio(n);
    if (lhs != rhs) return "identity fails at n = " + std::to_string(n);
    values.push_back(evaluate(rhs, 128));
  }
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (compare(values[i].lower(), values[i - 1].upper()) <= 0) return "ratios not strictly increasing";
  }
  return {};
}

std::string zeta_consistency() {
  const ApproxReal pi = pi_approx(128);
  for (unsigned long j = 1; j <= 8; ++j) {
    const EvenZeta e = zeta_even_exact(j);
    const ApproxReal numeric = zeta_int(static_cast<long>(2 * j), 128);
    const ApproxReal folded = ApproxReal::from_rational(e.coefficient, 160) * pi.pow(e.pi_exponent);
    // |a - b| <= err_a + err_b  <=>  the enclosures intersect
    if (!numeric.overlaps(folded)) return "zeta(" + std::to_string(2 * j) + ") fold disagrees";
  }
  for (long s : {3L, 5L, 9L}) {
    const ApproxReal base = zeta_int(s, 128);
    const ApproxReal half = zeta_int(s, 64);
    const ApproxReal twice = zeta_int(s, 256);
    if (!half.overlaps(base) || !base.overlaps(twice) || !half.overlaps(twice)) {
      return "enclosures for zeta(" + std::to_string(s) + ") do not intersect";
    }
    if (compare(twice.abs_error(), base.abs_error()) > 0 || compare(base.abs_error(), half.abs_error()) > 0) {
      return "radius grew with precision for zeta(" + std::to_string(s) + ")";
    }
  }
  return {};
}

std::string l_function_anchor() {
  const ApproxReal l1 = dirichlet_L_chi3(1, 128);
  oracle::Mp ref(320), root(320), diff(320), slack(64);
  mpfr_const_pi(ref.v, MPFR_RNDN);
  mpfr_sqrt_ui(root.v, 27, MPFR_RNDN);
  mpfr_div(ref.v, ref.v, root.v, MPFR_RNDN);
  mpfr_sub(diff.v, l1.value().get(), ref.v, MPFR_RNDN);
  mpfr_abs(diff.v, diff.v, MPFR_RNDN);
  mpfr_set_ui_2exp(slack.v, 1, -300, MPFR_RNDN);  // reference rounding
  mpfr_sub(diff.v, diff.v, slack.v, MPFR_RNDN);
  return fail_if(mpfr_cmp(diff.v, l1.abs_error().get()) > 0, "L(1) misses pi/sqrt(27) by more than its bound");
}

std::string lattice_certificates() {
  for (long n : {9L, 17L, 25L}) {
    const GramMatrix g = gram_II(n);
    if (!is_even(g)) return "II not even at n = " + std::to_string(n);
    if (determinant(g) != ExactRational(-1)) return "det II != -1 at n = " + std::to_string(n);
    if (signature(g) != Signature{static_cast<std::size_t>(n), 1, 0}) return "signature II at n = " + std::to_string(n);
    if (is_even(gram_identity_lorentzian(n)) || determinant(gram_identity_lorentzian(n)) != ExactRational(-1)) {
      return "I_{n,1} certificate at n = " + std::to_string(n);
    }
    if (is_even(gram_form_f(n)) || determinant(gram_form_f(n)) != ExactRational(-3)) {
      return "form f certificate at n = " + std::to_string(n);
    }
  }
  return {};
}

std::string coxeter_certificate() {
  const Signature s = signature(coxeter_gram(diagram_II17()));
  return fail_if(s != Signature{17, 1, 1} || s.rank() != 18, "signature of diagram differs from (17,1,1)");
}

std::string index_three() {
  for (long n : {5L, 13L, 21L}) {
    if (covolume_PSO_odd_unimodular(n) != multiply_scalar(covolume_smallest_orbifold(n), ExactRational(3))) {
      return "n = " + std::to_string(n);
    }
  }
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Coxeter polytope volume, exact coefficient", 1.0, exact_coxeter},
      {2, "Coxeter polytope volume, numeric at 128 bits", 5.0, numeric_coxeter},
      {3, "Index-two identity, n in {9,17,25,33,41}", 1.0, index_two},
      {4, "Mass anchor mass(8) = 1/696729600", 1.0, mass_anchor},
      {5, "Covolume/mass ratio identity and growth", 2.0, ratio_identity},
      {6, "Zeta consistency (even fold, nested enclosures)", 5.0, zeta_consistency},
      {7, "L(1, chi_-3) against pi/sqrt(27)", 2.0, l_function_anchor},
      {8, "Lattice certificates II, I, f", 2.0, lattice_certificates},
      {9, "Coxeter diagram certificate (17,1,1), rank 18", 1.0, coxeter_certificate},
      {10, "Index-three relation, n in {5,13,21}", 1.0, index_three},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
      failure = c.body();
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (failure.empty() && seconds > c.time_limit_seconds) {
      failure = "exceeded time limit of " + std::to_string(c.time_limit_seconds) + " s";
    }
    const bool ok = failure.empty();
    failures += ok ? 0 : 1;
    std::printf("[%s] AC%-2d %-50s %8.4f s%s%s\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), seconds,
                ok ? "" : "  -- ", failure.c_str());
  }
  std::printf("%d/%zu acceptance criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
