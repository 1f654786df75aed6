#include "lorentzvol/gram.hpp"

#include <string>
#include <utility>

#include "lorentzvol/errors.hpp"

namespace lorentzvol {

GramMatrix::GramMatrix(std::size_t dimension)
    : dimension_(dimension), entries_(dimension * dimension) {
  if (dimension == 0) throw DomainError("GramMatrix: dimension must be positive");
}

GramMatrix::GramMatrix(const std::vector<std::vector<ExactRational>>& rows)
    : GramMatrix(rows.size()) {
  for (std::size_t i = 0; i < dimension_; ++i) {
    if (rows[i].size() != dimension_) throw DomainError("GramMatrix: rows must form a square matrix");
    for (std::size_t j = 0; j < dimension_; ++j) entries_[i * dimension_ + j] = rows[i][j];
  }
  for (std::size_t i = 0; i < dimension_; ++i) {
    for (std::size_t j = i + 1; j < dimension_; ++j) {
      if (at(i, j) != at(j, i)) throw DomainError("GramMatrix: matrix is not symmetric");
    }
  }
}

GramMatrix GramMatrix::diagonal(const std::vector<ExactRational>& entries) {
  GramMatrix g(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) g.set(i, i, entries[i]);
  return g;
}

void GramMatrix::set(std::size_t i, std::size_t j, const ExactRational& value) {
  entries_[i * dimension_ + j] = value;
  entries_[j * dimension_ + i] = value;
}

GramMatrix GramMatrix::direct_sum(const GramMatrix& other) const {
  GramMatrix out(dimension_ + other.dimension_);
  for (std::size_t i = 0; i < dimension_; ++i) {
    for (std::size_t j = 0; j < dimension_; ++j) out.entries_[i * out.dimension_ + j] = at(i, j);
  }
  for (std::size_t i = 0; i < other.dimension_; ++i) {
    for (std::size_t j = 0; j < other.dimension_; ++j) {
      out.entries_[(dimension_ + i) * out.dimension_ + dimension_ + j] = other.at(i, j);
    }
  }
  return out;
}

GramMatrix GramMatrix::permuted(const std::vector<std::size_t>& perm) const {
  if (perm.size() != dimension_) throw DomainError("GramMatrix: permutation has wrong length");
  std::vector<bool> seen(dimension_, false);
  for (std::size_t p : perm) {
    if (p >= dimension_ || seen[p]) throw DomainError("GramMatrix: not a permutation");
    seen[p] = true;
  }
  GramMatrix out(dimension_);
  for (std::size_t i = 0; i < dimension_; ++i) {
    for (std::size_t j = 0; j < dimension_; ++j) out.entries_[i * dimension_ + j] = at(perm[i], perm[j]);
  }
  return out;
}

bool GramMatrix::is_integral() const {
  for (const auto& e : entries_) {
    if (!e.is_integer()) return false;
  }
  return true;
}

namespace {

GramMatrix lorentzian_diagonal(long n, long time_coefficient, const char* who) {
  if (n < 1) throw DomainError(std::string(who) + ": n must be >= 1");
  std::vector<ExactRational> diag(static_cast<std::size_t>(n + 1), ExactRational(1));
  diag[0] = ExactRational(-time_coefficient);
  return GramMatrix::diagonal(diag);
}

}  // namespace

GramMatrix gram_identity_lorentzian(long n) { return lorentzian_diagonal(n, 1, "gram_identity_lorentzian"); }

GramMatrix gram_form_f(long n) { return lorentzian_diagonal(n, 3, "gram_form_f"); }

GramMatrix gram_hyperbolic_plane() {
  GramMatrix u(2);
  u.set(0, 1, ExactRational(1));
  return u;
}

GramMatrix gram_E8() {
  // Chain 0-1-2-3-4-5-6 with node 7 attached to node 4: arms of length 4, 2, 1.
  GramMatrix g(8);
  for (std::size_t i = 0; i < 8; ++i) g.set(i, i, ExactRational(2));
  for (std::size_t i = 0; i + 1 < 7; ++i) g.set(i, i + 1, ExactRational(-1));
  g.set(4, 7, ExactRational(-1));
  return g;
}

GramMatrix gram_II(long n) {
  if (n < 9 || n % 8 != 1) {
    throw DomainError("gram_II: II_{n,1} exists only for n = 1 (mod 8); need n >= 9, got " +
                      std::to_string(n));
  }
  GramMatrix g = gram_hyperbolic_plane();
  const GramMatrix e8 = gram_E8();
  for (long k = 0; k < (n - 1) / 8; ++k) g = g.direct_sum(e8);
  return g;
}

ExactRational determinant(const GramMatrix& g) {
  const std::size_t n = g.dimension();
  BigInt common = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), g.at(i, j).denominator().get_mpz_t());
  }
  std::vector<BigInt> m(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const ExactRational& e = g.at(i, j);
      m[i * n + j] = e.numerator() * (common / e.denominator());
    }
  }

  // Bareiss: every intermediate division is exact.
  int sign = 1;
  BigInt previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k * n + k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap * n + k] == 0) ++swap;
      if (swap == n) return ExactRational(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[swap * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
        m[i * n + j] = std::move(v);
      }
    }
    previous = m[k * n + k];
  }
  BigInt scale;
  mpz_pow_ui(scale.get_mpz_t(), common.get_mpz_t(), n);
  return ExactRational(BigInt(sign * m[n * n - 1]), scale);
}

Signature signature(const GramMatrix& g) {
  const std::size_t n = g.dimension();
  std::vector<ExactRational> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = g.at(i, j);
  }
  auto at = [&](std::size_t i, std::size_t j) -> ExactRational& { return a[i * n + j]; };

  std::vector<std::size_t> active(n);
  for (std::size_t i = 0; i < n; ++i) active[i] = i;

  Signature sig;
  while (!active.empty()) {
    std::size_t pivot_pos = active.size();
    for (std::size_t p = 0; p < active.size(); ++p) {
      if (!at(active[p], active[p]).is_zero()) {
        pivot_pos = p;
        break;
      }
    }

    if (pivot_pos == active.size()) {
      // All diagonal entries vanish. A nonzero off-diagonal entry (i, j) gives
      // a nonzero diagonal after the congruence e_i -> e_i + e_j.
      bool found = false;
      for (std::size_t p = 0; p < active.size() && !found; ++p) {
        for (std::size_t q = p + 1; q < active.size() && !found; ++q) {
          const std::size_t i = active[p];
          const std::size_t j = active[q];
          if (at(i, j).is_zero()) continue;
          for (std::size_t k : active) at(i, k) += at(j, k);
          for (std::size_t k : active) at(k, i) = at(i, k);
          at(i, i) = at(i, i) + at(j, i);
          pivot_pos = p;
          found = true;
        }
      }
      if (!found) {
        sig.zeros += active.size();
        break;
      }
    }

    const std::size_t i = active[pivot_pos];
    const ExactRational d = at(i, i);
    (d.sign() > 0 ? sig.positives : sig.negatives) += 1;
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(pivot_pos));
    for (std::size_t r : active) {
      if (at(r, i).is_zero()) continue;
      const ExactRational factor = at(r, i) / d;
      for (std::size_t c : active) at(r, c) -= factor * at(i, c);
    }
  }
  return sig;
}

bool is_even(const GramMatrix& g) {
  if (!g.is_integral()) throw DomainError("is_even: Gram matrix has non-integral entries");
  for (std::size_t i = 0; i < g.dimension(); ++i) {
    if (!mpz_even_p(g.at(i, i).numerator().get_mpz_t())) return false;
  }
  return true;
}

}  // namespace lorentzvol
