#include "lorentzvol/selfcheck.hpp"

#include <exception>
#include <functional>
#include <sstream>
#include <utility>

#include "lorentzvol/approx_real.hpp"
#include "lorentzvol/coxeter.hpp"
#include "lorentzvol/gram.hpp"
#include "lorentzvol/mass.hpp"
#include "lorentzvol/volume.hpp"
#include "lorentzvol/zeta.hpp"

namespace lorentzvol {
namespace {

CheckResult run(std::string name, const std::function<std::string()>& body) {
  // body returns an empty string on success, a failure description otherwise
  try {
    std::string failure = body();
    return {std::move(name), failure.empty(), failure.empty() ? "ok" : failure};
  } catch (const std::exception& e) {
    return {std::move(name), false, std::string("exception: ") + e.what()};
  }
}

}  // namespace

std::vector<CheckResult> run_selfcheck(const BernoulliTable& table) {
  std::vector<CheckResult> out;

  out.push_back(run("index-two identity", [&]() -> std::string {
    for (long n : {9L, 17L, 25L, 33L, 41L}) {
      if (covolume_smallest_orbifold(n, table) !=
          multiply_scalar(covolume_PO_even_unimodular(n, table), ExactRational(2))) {
        return "mismatch at n = " + std::to_string(n);
      }
    }
    return {};
  }));

  out.push_back(run("index-three relation", [&]() -> std::string {
    for (long n : {5L, 13L, 21L}) {
      if (covolume_PSO_odd_unimodular(n, table) !=
          multiply_scalar(covolume_smallest_orbifold(n, table), ExactRational(3))) {
        return "mismatch at n = " + std::to_string(n);
      }
    }
    return {};
  }));

  out.push_back(run("covolume/mass ratio identity", [&]() -> std::string {
    for (long n : {9L, 17L, 25L, 33L}) {
      const VolumeExpression lhs = multiply_scalar(covolume_PO_even_unimodular(n, table),
                                                   mass_even_unimodular(n - 1, table).reciprocal());
      if (lhs != volume_mass_ratio(n, table)) return "mismatch at n = " + std::to_string(n);
    }
    return {};
  }));

  out.push_back(run("E8 mass anchor", [&]() -> std::string {
    const ExactRational mass = mass_even_unimodular(8, table);
    if (mass != ExactRational(BigInt(1), BigInt(696729600))) return "mass(8) = " + mass.to_string();
    return {};
  }));

  out.push_back(run("Coxeter polytope coefficient", [&]() -> std::string {
    const BigInt den = BigInt(1) << 38;
    const ExactRational expected(BigInt(691 * 3617),
                                 den * 59049 * 625 * 49 * 11 * 13 * 17);
    const VolumeExpression v = coxeter_polytope_volume_17(table);
    if (v.coefficient() != expected || v.zeta_factors() != std::vector<long>{9}) {
      return "got " + v.to_string();
    }
    return {};
  }));

  out.push_back(run("even zeta fold vs numeric", [&]() -> std::string {
    constexpr long kBits = 128;
    const ApproxReal pi = pi_approx(kBits);
    for (unsigned long j = 1; j <= 8; ++j) {
      const EvenZeta exact = zeta_even_exact(j, table);
      const ApproxReal folded = ApproxReal::from_rational(exact.coefficient, kBits + 32) * pi.pow(exact.pi_exponent);
      if (!folded.overlaps(zeta_int(static_cast<long>(2 * j), kBits))) {
        return "zeta(" + std::to_string(2 * j) + ") disagrees";
      }
    }
    return {};
  }));

  out.push_back(run("lattice signatures", [&]() -> std::string {
    for (long n : {9L, 17L, 25L}) {
      const GramMatrix g = gram_II(n);
      const Signature expected{static_cast<std::size_t>(n), 1, 0};
      if (!is_even(g) || determinant(g) != ExactRational(-1) || signature(g) != expected) {
        return "II_{" + std::to_string(n) + ",1} certificate failed";
      }
      if (is_even(gram_identity_lorentzian(n)) || determinant(gram_identity_lorentzian(n)) != ExactRational(-1) ||
          signature(gram_identity_lorentzian(n)) != expected) {
        return "I_{" + std::to_string(n) + ",1} certificate failed";
      }
      if (is_even(gram_form_f(n)) || determinant(gram_form_f(n)) != ExactRational(-3)) {
        return "form f certificate failed at n = " + std::to_string(n);
      }
    }
    return {};
  }));

  out.push_back(run("Coxeter diagram signature", [&]() -> std::string {
    const Signature sig = signature(coxeter_gram(diagram_II17()));
    if (sig != Signature{17, 1, 1}) {
      std::ostringstream os;
      os << "signature (" << sig.positives << "," << sig.negatives << "," << sig.zeros << ")";
      return os.str();
    }
    return {};
  }));

  return out;
}

}  // namespace lorentzvol
