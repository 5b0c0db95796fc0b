#include "quadcf/exact/modular.hpp"

#include <utility>

namespace quadcf::modular {

const std::vector<std::uint64_t>& primes() {
  static const std::vector<std::uint64_t> ps = {2147483647, 2147483629, 2147483587,
                                                2147483579, 2147483563, 2147483549};
  return ps;
}

std::uint64_t reduce(const BigInt& x, std::uint64_t p) {
  return mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(p));
}

static std::uint64_t power(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t inverse(std::uint64_t a, std::uint64_t p) { return power(a, p - 2, p); }

static void trim(PolyMod& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PolyMod gcd(PolyMod a, PolyMod b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    std::uint64_t inv = inverse(b.back(), p);
    while (a.size() >= b.size()) {
      std::uint64_t f = a.back() * inv % p;
      std::size_t off = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) {
        a[off + i] = (a[off + i] + p - f * b[i] % p) % p;
      }
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a;
}

std::uint64_t determinant(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
  const std::size_t n = m.size();
  std::uint64_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = (p - det) % p;
    }
    det = det * m[c][c] % p;
    std::uint64_t inv = inverse(m[c][c], p);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      std::uint64_t f = m[r][c] * inv % p;
      for (std::size_t j = c; j < n; ++j) {
        m[r][j] = (m[r][j] + p - f * m[c][j] % p) % p;
      }
    }
  }
  return det;
}

}  // namespace quadcf::modular
