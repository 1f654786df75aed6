#pragma once

#include <string>
#include <vector>

#include "lorentzvol/approx_real.hpp"
#include "lorentzvol/bernoulli.hpp"
#include "lorentzvol/rational.hpp"

namespace lorentzvol {

/// Canonical symbolic volume
///
///     coefficient * sqrt(3)^sqrt3_exponent * pi^pi_exponent
///         * prod zeta(s_i) * prod L(t_i, chi_{-3})
///
/// Canonical means: coefficient > 0, sqrt3_exponent in {0, 1}, every zeta
/// argument is odd and >= 3 (even zeta values are folded into the
/// coefficient and the pi exponent), and both argument lists are sorted.
/// Two expressions are equal iff all five parts agree.
class VolumeExpression {
 public:
  /// Folds an arbitrary product into canonical form. Even zeta arguments
  /// are folded using `table`. Throws DomainError for a non-positive
  /// coefficient, a zeta argument < 2, or an L argument < 2.
  static VolumeExpression make(ExactRational coefficient, long sqrt3_exponent, long pi_exponent,
                               std::vector<long> zeta_args, std::vector<long> l3_args,
                               const BernoulliTable& table = BernoulliTable::standard());

  static VolumeExpression one() { return make(ExactRational(1), 0, 0, {}, {}); }

  const ExactRational& coefficient() const { return coefficient_; }
  long sqrt3_exponent() const { return sqrt3_exponent_; }
  long pi_exponent() const { return pi_exponent_; }
  const std::vector<long>& zeta_factors() const { return zeta_factors_; }
  const std::vector<long>& l3_factors() const { return l3_factors_; }

  std::string to_string() const;

  friend bool operator==(const VolumeExpression&, const VolumeExpression&) = default;

 private:
  VolumeExpression() = default;

  ExactRational coefficient_{1};
  long sqrt3_exponent_ = 0;
  long pi_exponent_ = 0;
  std::vector<long> zeta_factors_;
  std::vector<long> l3_factors_;
};

/// q * expr; q must be > 0.
VolumeExpression multiply_scalar(const VolumeExpression& expr, const ExactRational& q);
VolumeExpression multiply(const VolumeExpression& a, const VolumeExpression& b);

/// Numeric value with a rigorous radius.
ApproxReal evaluate(const VolumeExpression& expr, long precision_bits);

/// Covolume of the smallest orientable non-compact arithmetic hyperbolic
/// n-orbifold, for odd n >= 5. With r = (n+1)/2 the three congruence
/// classes n = 1 (mod 8), n = 5 (mod 8) and n = 3 (mod 4) have
///
///     2^{2-r} zeta(r) P_r
///     (2^r - 1)(2^{r-1} - 1) / (3 * 2^{r-1}) * zeta(r) P_r
///     3^{r-1/2} / 2^{r-1} * L(r, chi_{-3}) P_r
///
/// where P_r = prod_{j=1}^{r-1} (2j-1)! zeta(2j) / (2 pi)^{2j}.
VolumeExpression covolume_smallest_orbifold(long n,
                                            const BernoulliTable& table = BernoulliTable::standard());

/// Covolume of PO(II_{n,1}), n = 1 (mod 8), n >= 9: zeta(r) prod_{j<r} |B_{2j}| / (8j).
VolumeExpression covolume_PO_even_unimodular(long n,
                                             const BernoulliTable& table = BernoulliTable::standard());

/// Covolume of PSO(I_{n,1}) for n = 5 (mod 8): it sits with index 3 in the
/// smallest orbifold group, so this is three times that covolume.
VolumeExpression covolume_PSO_odd_unimodular(long n,
                                             const BernoulliTable& table = BernoulliTable::standard());

/// Volume of the 19-facet Coxeter polytope in H^17: twice the covolume of PO(II_{17,1}).
VolumeExpression coxeter_polytope_volume_17(const BernoulliTable& table = BernoulliTable::standard());

}  // namespace lorentzvol
