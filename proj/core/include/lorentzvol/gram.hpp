#pragma once

#include <cstddef>
#include <vector>

#include "lorentzvol/rational.hpp"

namespace lorentzvol {

/// Counts of positive, negative and zero directions of a real symmetric form.
struct Signature {
  std::size_t positives = 0;
  std::size_t negatives = 0;
  std::size_t zeros = 0;

  std::size_t dimension() const { return positives + negatives + zeros; }
  std::size_t rank() const { return positives + negatives; }
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Exact symmetric matrix over the rationals.
class GramMatrix {
 public:
  /// Zero matrix of the given dimension (>= 1).
  explicit GramMatrix(std::size_t dimension);
  /// Row-major entries; throws DomainError unless square and symmetric.
  explicit GramMatrix(const std::vector<std::vector<ExactRational>>& rows);

  static GramMatrix diagonal(const std::vector<ExactRational>& entries);

  std::size_t dimension() const { return dimension_; }
  const ExactRational& at(std::size_t i, std::size_t j) const { return entries_[i * dimension_ + j]; }
  /// Sets both (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, const ExactRational& value);

  /// Block-diagonal sum.
  GramMatrix direct_sum(const GramMatrix& other) const;
  /// Entry (i, j) of the result is entry (perm[i], perm[j]) of this matrix.
  GramMatrix permuted(const std::vector<std::size_t>& perm) const;

  bool is_integral() const;

  friend bool operator==(const GramMatrix&, const GramMatrix&) = default;

 private:
  std::size_t dimension_;
  std::vector<ExactRational> entries_;
};

/// diag(-1, 1, ..., 1): the form -x_0^2 + x_1^2 + ... + x_n^2 of I_{n,1}, n >= 1.
GramMatrix gram_identity_lorentzian(long n);
/// diag(-3, 1, ..., 1): the form -3 x_0^2 + x_1^2 + ... + x_n^2, n >= 1.
GramMatrix gram_form_f(long n);
/// Hyperbolic plane U = [[0, 1], [1, 0]].
GramMatrix gram_hyperbolic_plane();
/// Cartan-type Gram matrix of the E8 root lattice (diagonal 2, -1 along the Dynkin diagram).
GramMatrix gram_E8();
/// U + E8^{(n-1)/8}, an even unimodular Gram matrix of signature (n, 1); n = 1 (mod 8), n >= 9.
GramMatrix gram_II(long n);

/// Exact determinant by fraction-free (Bareiss) elimination.
ExactRational determinant(const GramMatrix& g);
/// Exact signature by symmetric congruence elimination.
Signature signature(const GramMatrix& g);
/// True iff every diagonal entry is even. Throws DomainError for non-integral matrices.
bool is_even(const GramMatrix& g);

}  // namespace lorentzvol
