#include "quadcf/structmat/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "quadcf/error.hpp"
#include "quadcf/exact/modular.hpp"

namespace quadcf {

BigInt determinant(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[r], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

bool is_nonsingular(const IntMatrix& m) {
  int tried = 0;
  for (std::uint64_t p : modular::primes()) {
    std::vector<std::vector<std::uint64_t>> mm(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (const auto& x : m[i]) mm[i].push_back(modular::reduce(x, p));
    }
    if (modular::determinant(std::move(mm), p) != 0) return true;
    if (++tried == 2) break;
  }
  return determinant(m) != 0;
}

std::vector<Rational> solve(const IntMatrix& m, const std::vector<BigInt>& rhs) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n] = rhs[i];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) throw ComputationError("base matrix singular");
    std::swap(a[piv], a[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t j = c; j <= n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

std::vector<IntPoly> PolyMatrix::apply(const std::vector<IntPoly>& x) const {
  std::vector<IntPoly> y(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) y[r].add_product(at(r, c), x[c]);
  }
  return y;
}

int permutation_parity(const std::vector<std::size_t>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = perm[j]) seen[j] = true;
  }
  return static_cast<int>((perm.size() - cycles) % 2);
}

IntPoly brute_det(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n > 8) throw ComputationError("brute-force budget exceeded");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  IntPoly total;
  do {
    IntPoly term{1};
    for (std::size_t r = 0; r < n && !term.is_zero(); ++r) term = term * m.at(r, perm[r]);
    if (term.is_zero()) continue;
    if (permutation_parity(perm)) total -= term;
    else total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

IntPoly determinant(const PolyMatrix& pm) {
  const std::size_t n = pm.size();
  if (n == 0) return IntPoly{1};
  std::vector<std::vector<IntPoly>> m(n, std::vector<IntPoly>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m[r][c] = pm.at(r, c);
  }
  IntPoly prev{1};
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return {};
      std::swap(m[r], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = exact_quotient(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      }
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

}  // namespace quadcf
