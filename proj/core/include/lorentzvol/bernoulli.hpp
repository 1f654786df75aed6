#pragma once

#include <map>
#include <memory>

#include "lorentzvol/rational.hpp"

namespace lorentzvol {

/// Memoized Bernoulli numbers B_k with B_1 = -1/2, from the recurrence
/// sum_{j=0}^{m} C(m+1, j) B_j = 0. Lookups are safe from any thread.
///
/// A table may carry overrides (see with_override); these exist so that
/// self-checks can be shown to detect a corrupted table.
class BernoulliTable {
 public:
  BernoulliTable();

  ExactRational operator()(unsigned long k) const;

  BernoulliTable with_override(unsigned long k, ExactRational value) const;
  bool has_overrides() const { return !overrides_.empty(); }

  /// Shared process-wide table without overrides.
  static const BernoulliTable& standard();

 private:
  struct Cache;
  std::shared_ptr<Cache> cache_;
  std::map<unsigned long, ExactRational> overrides_;
};

/// B_k from the standard table.
ExactRational bernoulli(unsigned long k);

/// zeta(2j) = coefficient * pi^pi_exponent exactly.
struct EvenZeta {
  ExactRational coefficient;
  long pi_exponent = 0;
};

/// Exact value of zeta(2j), j >= 1: coefficient 2^{2j-1}|B_{2j}|/(2j)!, pi exponent 2j.
EvenZeta zeta_even_exact(unsigned long j, const BernoulliTable& table = BernoulliTable::standard());

}  // namespace lorentzvol
