#include "lorentzvol/factor.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "lorentzvol/errors.hpp"

namespace lorentzvol {
namespace {

constexpr unsigned long kTrialLimit = 10000;
constexpr unsigned long kRhoIterations = 2000000;

bool probably_prime(const BigInt& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

// Brent's variant of Pollard rho; returns a nontrivial factor or 0.
BigInt rho(const BigInt& n, unsigned long seed) {
  BigInt y = seed + 1;
  const BigInt c = seed;
  BigInt g = 1;
  BigInt q = 1;
  BigInt x;
  BigInt ys;
  unsigned long r = 1;
  unsigned long spent = 0;
  constexpr unsigned long kBatch = 128;
  auto step = [&](BigInt& v) {
    v = v * v + c;
    v %= n;
  };
  while (g == 1) {
    x = y;
    for (unsigned long i = 0; i < r; ++i) step(y);
    unsigned long k = 0;
    while (k < r && g == 1) {
      ys = y;
      const unsigned long batch = std::min(kBatch, r - k);
      for (unsigned long i = 0; i < batch; ++i) {
        step(y);
        q = (q * abs(x - y)) % n;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += batch;
    }
    spent += r;
    r *= 2;
    if (spent > kRhoIterations) return 0;
  }
  if (g == n) {
    // Batched gcd overshot; retrace one step at a time.
    do {
      step(ys);
      BigInt d = abs(x - ys);
      mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g == n ? BigInt(0) : g;
}

void split(const BigInt& n, std::map<BigInt, PrimePower>& out) {
  if (n == 1) return;
  if (probably_prime(n)) {
    auto& slot = out[n];
    slot.base = n;
    ++slot.exponent;
    return;
  }
  for (unsigned long seed = 1; seed <= 8; ++seed) {
    const BigInt d = rho(n, seed);
    if (d != 0) {
      split(d, out);
      split(BigInt(n / d), out);
      return;
    }
  }
  auto& slot = out[n];
  slot.base = n;
  slot.prime = false;
  ++slot.exponent;
}

}  // namespace

std::vector<PrimePower> factorize(const BigInt& value) {
  if (value == 0) throw DomainError("factorize: zero has no factorization");
  BigInt n = abs(value);
  std::map<BigInt, PrimePower> found;
  for (unsigned long p = 2; p <= kTrialLimit && n > 1; p += (p == 2 ? 1 : 2)) {
    if (BigInt(p) * p > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      auto& slot = found[BigInt(p)];
      slot.base = p;
      ++slot.exponent;
      n /= p;
    }
  }
  split(n, found);
  std::vector<PrimePower> out;
  out.reserve(found.size());
  for (auto& [base, power] : found) out.push_back(power);
  return out;
}

std::string format_factorization(const std::vector<PrimePower>& factors) {
  if (factors.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const PrimePower& f : factors) {
    if (!first) os << " * ";
    first = false;
    os << f.base.get_str();
    if (f.exponent != 1) os << "^" << f.exponent;
  }
  return os.str();
}

}  // namespace lorentzvol
