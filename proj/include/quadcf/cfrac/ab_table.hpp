#pragma once

#include <cstddef>
#include <vector>

#include "quadcf/cfrac/continued_fraction.hpp"
#include "quadcf/cfrac/mobius.hpp"

namespace quadcf {

// Periodic continuants A^(m)_(n), B^(m)_(n) for -1 <= m <= l + 1 and residues
// n mod l, taken at the least index n' >= k with n' = n (mod l).
class ABTable {
 public:
  ABTable(const ContinuedFraction& cf, std::size_t k);

  std::size_t ell() const { return ell_; }
  std::size_t k() const { return k_; }
  const BigInt& A(long m, long n) const;
  const BigInt& B(long m, long n) const;
  // a_(n'+1) for the representative n' of n.
  const BigInt& next_quotient(long n) const;
  // Column (A^(0..l-1)_(n)).
  std::vector<BigInt> column(long n) const;

 private:
  std::size_t slot(long n) const;
  std::size_t ell_, k_;
  std::vector<BigInt> next_;              // by representative offset
  std::vector<std::vector<BigInt>> A_, B_;  // [m + 1][offset]
};

ABTable ab_table(const ContinuedFraction& cf, std::size_t k);

struct TransferMatrices {
  Mobius2x2 M0;      // [[p(k-1), p(k)], [q(k-1), q(k)]]
  Mobius2x2 M1;      // period block from k
  Mobius2x2 Mtheta;  // M0 M1 M0^-1, fixes the value
};

TransferMatrices transfer_matrices(const ContinuedFraction& cf, std::size_t k);

}  // namespace quadcf
