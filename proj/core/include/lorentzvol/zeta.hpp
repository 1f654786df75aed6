#pragma once

#include "lorentzvol/approx_real.hpp"
#include "lorentzvol/rational.hpp"

namespace lorentzvol {

/// Truncation parameters for Euler–Maclaurin summation: `terms` leading
/// terms are added directly and `corrections` Bernoulli corrections are
/// applied at the cut point.
struct EulerMaclaurinPlan {
  long terms = 0;
  long corrections = 0;
  friend bool operator==(const EulerMaclaurinPlan&, const EulerMaclaurinPlan&) = default;
};

/// Deterministic choice of (terms, corrections) for sum_{k>=0} (k+a)^{-s}
/// so that the estimated remainder falls below 2^{-target_bits}.
EulerMaclaurinPlan plan_hurwitz(long s, double a, long target_bits);

/// Riemann zeta(s), s >= 2, with |value - zeta(s)| <= abs_error <= 2^{-precision_bits+4}.
ApproxReal zeta_int(long s, long precision_bits);

/// Hurwitz zeta(s, a) for integer s >= 2 and rational 0 < a <= 1.
ApproxReal hurwitz_zeta(long s, const ExactRational& a, long precision_bits);

/// L(s, chi) for the nontrivial character mod 3, s >= 1.
ApproxReal dirichlet_L_chi3(long s, long precision_bits);

}  // namespace lorentzvol
