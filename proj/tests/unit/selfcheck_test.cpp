#include <gtest/gtest.h>

#include "lorentzvol/selfcheck.hpp"

namespace lorentzvol {
namespace {

TEST(Selfcheck, CleanTablePasses) {
  const auto results = run_selfcheck();
  EXPECT_GE(results.size(), 8u);
  for (const auto& r : results) EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
}

TEST(Selfcheck, CorruptedBernoulliIsDetected) {
  for (unsigned long k : {2UL, 4UL, 8UL, 12UL}) {
    const BernoulliTable bad = BernoulliTable::standard().with_override(k, bernoulli(k) * ExactRational(2));
    const auto results = run_selfcheck(bad);
    bool any_failed = false;
    for (const auto& r : results) any_failed = any_failed || !r.passed;
    EXPECT_TRUE(any_failed) << "corruption of B_" << k << " went unnoticed";
  }
}

}  // namespace
}  // namespace lorentzvol
