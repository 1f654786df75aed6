#pragma once

#include <string>
#include <vector>

#include "lorentzvol/bernoulli.hpp"

namespace lorentzvol {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Exact identity and anchor suite: index-two and index-three relations,
/// the covolume/mass ratio identity, the E8 mass anchor, the Coxeter
/// polytope coefficient, the even-zeta fold against numerics, and the
/// lattice/Coxeter signatures. Every formula draws its Bernoulli numbers
/// from `table`, so a corrupted table is reported as a failure.
std::vector<CheckResult> run_selfcheck(const BernoulliTable& table = BernoulliTable::standard());

}  // namespace lorentzvol
