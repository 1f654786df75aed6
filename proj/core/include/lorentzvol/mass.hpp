#pragma once

#include "lorentzvol/bernoulli.hpp"
#include "lorentzvol/rational.hpp"
#include "lorentzvol/volume.hpp"

namespace lorentzvol {

/// Minkowski–Siegel mass of the genus of even unimodular positive-definite
/// lattices of dimension m (m = 0 mod 8, m >= 8):
///
///     mass = |B_{m/2}| / m * prod_{j=1}^{m/2-1} |B_{2j}| / (4j)
ExactRational mass_even_unimodular(long m, const BernoulliTable& table = BernoulliTable::standard());

/// covolume(PO(II_{n,1})) / mass in dimension n-1, as the closed form
/// 2^{-r} |B_{2r-2}| / |B_{r-1}| * zeta(r), r = (n+1)/2.
VolumeExpression volume_mass_ratio(long n, const BernoulliTable& table = BernoulliTable::standard());

}  // namespace lorentzvol
