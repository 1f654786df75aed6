#include "lorentzvol/bernoulli.hpp"

#include <mutex>
#include <utility>
#include <vector>

#include "lorentzvol/errors.hpp"

namespace lorentzvol {

struct BernoulliTable::Cache {
  std::mutex mutex;
  std::vector<ExactRational> values{ExactRational(1)};

  ExactRational get(unsigned long k) {
    if (k >= 3 && k % 2 == 1) return ExactRational(0);
    std::lock_guard<std::mutex> lock(mutex);
    while (values.size() <= k) {
      const unsigned long m = values.size();
      if (m >= 3 && m % 2 == 1) {
        values.emplace_back(0);
        continue;
      }
      // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j
      ExactRational sum;
      for (unsigned long j = 0; j < m; ++j) {
        if (values[j].is_zero()) continue;
        sum += ExactRational(binomial(m + 1, j)) * values[j];
      }
      values.push_back(-sum / ExactRational(static_cast<long>(m + 1)));
    }
    return values[k];
  }
};

BernoulliTable::BernoulliTable() : cache_(std::make_shared<Cache>()) {}

ExactRational BernoulliTable::operator()(unsigned long k) const {
  if (auto it = overrides_.find(k); it != overrides_.end()) return it->second;
  return cache_->get(k);
}

BernoulliTable BernoulliTable::with_override(unsigned long k, ExactRational value) const {
  BernoulliTable copy = *this;
  copy.overrides_[k] = std::move(value);
  return copy;
}

const BernoulliTable& BernoulliTable::standard() {
  static const BernoulliTable table;
  return table;
}

ExactRational bernoulli(unsigned long k) {
  return BernoulliTable::standard()(k);
}

EvenZeta zeta_even_exact(unsigned long j, const BernoulliTable& table) {
  if (j < 1) throw DomainError("zeta_even_exact: j must be >= 1");
  const ExactRational b = table(2 * j).abs();
  const ExactRational pow2 = ExactRational(2).pow(static_cast<long>(2 * j - 1));
  return {pow2 * b / ExactRational(factorial(2 * j)), static_cast<long>(2 * j)};
}

}  // namespace lorentzvol
