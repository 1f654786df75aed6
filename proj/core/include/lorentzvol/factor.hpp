#pragma once

#include <string>
#include <vector>

#include "lorentzvol/rational.hpp"

namespace lorentzvol {

struct PrimePower {
  BigInt base;
  unsigned long exponent = 0;
  /// False only for a cofactor the search budget could not split.
  bool prime = true;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Factorization of |value| (value != 0) in ascending order of base, by
/// trial division followed by Pollard–Brent rho. Cofactors that survive the
/// rho budget are returned with prime = false. An empty result means 1.
std::vector<PrimePower> factorize(const BigInt& value);

/// "2^38 * 3^10 * 5^4 * ..." ; "1" for an empty factorization.
std::string format_factorization(const std::vector<PrimePower>& factors);

}  // namespace lorentzvol
