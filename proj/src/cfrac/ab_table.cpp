#include "quadcf/cfrac/ab_table.hpp"

#include <stdexcept>

#include "quadcf/error.hpp"

namespace quadcf {

Mobius2x2 Mobius2x2::inverse() const {
  BigInt d0 = det();
  if (d0 == 1) return {d, -b, -c, a};
  if (d0 == -1) return {-d, b, c, -a};
  throw std::domain_error("matrix is not unimodular");
}

Mobius2x2 operator*(const Mobius2x2& x, const Mobius2x2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

std::string Mobius2x2::to_string() const {
  return "[[" + a.get_str() + ", " + b.get_str() + "], [" + c.get_str() + ", " + d.get_str() + "]]";
}

Mobius2x2 quotient_matrix(const BigInt& a) { return {0, 1, 1, a}; }

ABTable::ABTable(const ContinuedFraction& cf, std::size_t k) : ell_(cf.ell()), k_(k) {
  validate(cf);
  if (k < 1) throw ComputationError("pre-period index must be at least 1");
  if (k < minimize(cf).pre.size()) {
    throw ComputationError("index is below the pre-period");
  }
  for (std::size_t o = 0; o < ell_; ++o) next_.push_back(cf.quotient(k + o + 1));
  const std::size_t rows = ell_ + 3;
  A_.assign(rows, std::vector<BigInt>(ell_));
  B_.assign(rows, std::vector<BigInt>(ell_));
  for (std::size_t o = 0; o < ell_; ++o) {
    A_[0][o] = 0;  // m = -1
    A_[1][o] = 1;  // m = 0
    B_[1][o] = 0;
    B_[0][o] = 1;  // B^(-1) = A^(-2), i.e. K of a negative-length word
  }
  for (std::size_t r = 2; r < rows; ++r) {
    for (std::size_t o = 0; o < ell_; ++o) {
      std::size_t o1 = (o + 1) % ell_;
      // A^(m) = a(n+1) A^(m-1)_(n+1) + B^(m-1)_(n+1), B^(m) = A^(m-1)_(n+1).
      A_[r][o] = next_[o] * A_[r - 1][o1] + B_[r - 1][o1];
      B_[r][o] = A_[r - 1][o1];
    }
  }
}

std::size_t ABTable::slot(long n) const {
  long l = static_cast<long>(ell_);
  long o = (n - static_cast<long>(k_)) % l;
  return static_cast<std::size_t>(o < 0 ? o + l : o);
}

const BigInt& ABTable::A(long m, long n) const {
  if (m < -1 || m > static_cast<long>(ell_) + 1) throw std::out_of_range("continuant order out of range");
  return A_[static_cast<std::size_t>(m + 1)][slot(n)];
}

const BigInt& ABTable::B(long m, long n) const {
  if (m < 0 || m > static_cast<long>(ell_) + 1) throw std::out_of_range("continuant order out of range");
  return B_[static_cast<std::size_t>(m + 1)][slot(n)];
}

const BigInt& ABTable::next_quotient(long n) const { return next_[slot(n)]; }

std::vector<BigInt> ABTable::column(long n) const {
  std::vector<BigInt> c;
  for (long m = 0; m < static_cast<long>(ell_); ++m) c.push_back(A(m, n));
  return c;
}

ABTable ab_table(const ContinuedFraction& cf, std::size_t k) { return ABTable(cf, k); }

TransferMatrices transfer_matrices(const ContinuedFraction& cf, std::size_t k) {
  validate(cf);
  TransferMatrices t;
  for (std::size_t n = 1; n <= k; ++n) t.M0 = t.M0 * quotient_matrix(cf.quotient(n));
  for (std::size_t n = k + 1; n <= k + cf.ell(); ++n) t.M1 = t.M1 * quotient_matrix(cf.quotient(n));
  t.Mtheta = t.M0 * t.M1 * t.M0.inverse();
  return t;
}

}  // namespace quadcf
