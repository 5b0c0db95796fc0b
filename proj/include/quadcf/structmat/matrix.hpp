#pragma once

#include <cstddef>
#include <vector>

#include "quadcf/exact/int_poly.hpp"

namespace quadcf {

using IntMatrix = std::vector<std::vector<BigInt>>;  // row-major

// Fraction-free Gaussian elimination.
BigInt determinant(IntMatrix m);
// Nonzero determinant modulo some word prime, else the exact determinant.
bool is_nonsingular(const IntMatrix& m);
// Unique solution of m x = rhs over Q; m must be nonsingular.
std::vector<Rational> solve(const IntMatrix& m, const std::vector<BigInt>& rhs);

class PolyMatrix {
 public:
  explicit PolyMatrix(std::size_t n) : n_(n), e_(n * n) {}
  std::size_t size() const { return n_; }
  IntPoly& at(std::size_t r, std::size_t c) { return e_[r * n_ + c]; }
  const IntPoly& at(std::size_t r, std::size_t c) const { return e_[r * n_ + c]; }
  // m * x for a column vector x.
  std::vector<IntPoly> apply(const std::vector<IntPoly>& x) const;

 private:
  std::size_t n_;
  std::vector<IntPoly> e_;
};

// Leibniz expansion; at most 8x8.
IntPoly brute_det(const PolyMatrix& m);
// Fraction-free elimination over Z[z].
IntPoly determinant(const PolyMatrix& m);

// Parity of a permutation from its cycle count: (n - cycles) mod 2.
int permutation_parity(const std::vector<std::size_t>& perm);

}  // namespace quadcf
