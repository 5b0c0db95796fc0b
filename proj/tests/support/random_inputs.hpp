#pragma once

#include <random>
#include <vector>

#include "quadcf/cfrac/continued_fraction.hpp"
#include "quadcf/exact/bigint.hpp"
#include "quadcf/exact/quadratic.hpp"
#include "quadcf/structmat/monomial_system.hpp"

namespace quadcf::testkit {

inline constexpr unsigned long kSurdSeed = 20261017;

// (P + sqrt(D)) / Q with D in [2, 500] non-square, P in [-10, 10], Q in +-[1, 10].
inline QuadraticSurd random_surd(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dd(2, 500), pd(-10, 10), qd(1, 10), sd(0, 1);
  long D = 0;
  do {
    D = dd(rng);
  } while (is_perfect_square(BigInt(D)));
  long P = pd(rng);
  long Q = qd(rng) * (sd(rng) ? 1 : -1);
  return normalize_surd(P, Q, D);
}

inline std::vector<QuadraticSurd> random_surds(std::size_t n, unsigned long seed = kSurdSeed) {
  std::mt19937_64 rng(seed);
  std::vector<QuadraticSurd> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_surd(rng));
  return out;
}

// Same family, keeping only minimal periods of length >= min_ell.
inline std::vector<QuadraticSurd> random_surds_with_period(std::size_t n, std::size_t min_ell,
                                                           unsigned long seed = kSurdSeed) {
  std::mt19937_64 rng(seed);
  std::vector<QuadraticSurd> out;
  while (out.size() < n) {
    QuadraticSurd s = random_surd(rng);
    if (expand_surd(s).ell() >= min_ell) out.push_back(s);
  }
  return out;
}

// l in [lmin, lmax], |gamma| <= gmax, |C| <= cmax; optionally nonzero gamma^0 and gamma^2.
inline MonomialSystem random_system(std::mt19937_64& rng, std::size_t lmin, std::size_t lmax, long gmax, long cmax,
                                    bool nonzero_pivots = false) {
  std::uniform_int_distribution<std::size_t> ld(lmin, lmax);
  std::uniform_int_distribution<long> gd(-gmax, gmax), cd(-cmax, cmax);
  auto pivot = [&] {
    long x = 0;
    do {
      x = gd(rng);
    } while (nonzero_pivots && x == 0);
    return BigInt(x);
  };
  MonomialSystem sys;
  sys.ell = ld(rng);
  sys.C.assign(sys.ell, std::vector<BigInt>(sys.ell));
  for (auto& row : sys.C) {
    for (auto& x : row) x = cd(rng);
  }
  for (std::size_t s = 0; s < sys.ell; ++s) {
    BigInt g0 = pivot();
    BigInt g1 = gd(rng);
    BigInt g2 = pivot();
    sys.gamma.push_back({g0, g1, g2});
  }
  return sys;
}

}  // namespace quadcf::testkit
