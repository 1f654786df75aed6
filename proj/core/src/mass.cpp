#include "lorentzvol/mass.hpp"

#include <string>

#include "lorentzvol/errors.hpp"

namespace lorentzvol {

ExactRational mass_even_unimodular(long m, const BernoulliTable& table) {
  if (m < 8 || m % 8 != 0) {
    throw DomainError("mass_even_unimodular: even unimodular lattices need m = 0 (mod 8), m >= 8; got " +
                      std::to_string(m));
  }
  const long half = m / 2;
  ExactRational mass = table(static_cast<unsigned long>(half)).abs() / ExactRational(m);
  for (long j = 1; j < half; ++j) {
    mass *= table(static_cast<unsigned long>(2 * j)).abs() / ExactRational(4 * j);
  }
  return mass;
}

VolumeExpression volume_mass_ratio(long n, const BernoulliTable& table) {
  if (n < 9 || n % 8 != 1) {
    throw DomainError("volume_mass_ratio: n must satisfy n = 1 (mod 8) and n >= 9, got " +
                      std::to_string(n));
  }
  const long r = (n + 1) / 2;
  const ExactRational coefficient = table(static_cast<unsigned long>(2 * r - 2)).abs() /
                                    table(static_cast<unsigned long>(r - 1)).abs() /
                                    ExactRational(2).pow(r);
  return VolumeExpression::make(coefficient, 0, 0, {r}, {}, table);
}

}  // namespace lorentzvol
