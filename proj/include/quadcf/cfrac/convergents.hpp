#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "quadcf/cfrac/continued_fraction.hpp"

namespace quadcf {

// Convergents of the fractional part [0; a1, a2, ...]:
// p0 = 0, p1 = 1, q0 = 1, q1 = a1, x_n = a_n x_(n-1) + x_(n-2).
struct ConvergentTable {
  std::vector<BigInt> a;  // a[i] = a_(i+1)
  std::vector<BigInt> p;  // p[0..N]
  std::vector<BigInt> q;

  std::size_t depth() const { return a.size(); }
  const BigInt& quotient(std::size_t n) const { return a.at(n - 1); }
};

ConvergentTable convergents(const ContinuedFraction& cf, std::size_t depth);
ConvergentTable convergents(std::span<const BigInt> a);

// K(x1..xm): bottom-right entry of prod [[0,1],[1,x_i]]; K() = 1.
BigInt continuant(std::span<const BigInt> x);

// Non-periodic A^(m)_j = K(a_(j+1)..a_(j+m)) for m >= -1, j >= 0, j + m <= N,
// with A^(-1) = 0 and A^(0) = 1.
class ContinuantTable {
 public:
  explicit ContinuantTable(std::span<const BigInt> a);
  const BigInt& A(long m, std::size_t j) const;
  std::size_t depth() const { return n_; }

 private:
  std::size_t n_;
  std::vector<std::vector<BigInt>> rows_;  // rows_[j][m + 1]
};

}  // namespace quadcf
