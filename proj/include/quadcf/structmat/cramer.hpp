#pragma once

#include <cstddef>
#include <vector>

#include "quadcf/exact/rational_function.hpp"
#include "quadcf/structmat/monomial_system.hpp"

namespace quadcf {

// kappa(s,t) = l-1-d and mu(s,t) = d+1 with d = (s-t) mod l, except both 0 at s = t-1.
std::size_t kappa_index(std::size_t s, std::size_t t, std::size_t ell);
std::size_t mu_index(std::size_t s, std::size_t t, std::size_t ell);

// low[s] = u_(s,t)^(kappa,0), high[s] = u_(s,t)^(0,mu); at s = t-1 both hold u^(0,0).
struct UTable {
  std::size_t ell = 0;
  std::size_t t = 0;
  std::vector<BigInt> low, high;

  friend bool operator==(const UTable&, const UTable&) = default;
};

// Seeded recurrences; low divides by gamma_s^0, high by gamma_s^2.
UTable u_table(const MonomialSystem& sys, std::size_t t);
// Signed sums over enumerated T+_(s,t), grouped by type.
UTable u_table_enumerated(const MonomialSystem& sys, std::size_t t);

// Degree-1 coefficient of v anchored at s.
BigInt v1_via_anchor(const MonomialSystem& sys, std::size_t s);
// v(x) = v0 + v1 x + v2 x^2 with det N(z) = det C * v(z^l).
IntPoly v_closed(const MonomialSystem& sys);
IntPoly v_enumerated(const MonomialSystem& sys);

// E_s = numerators[s] / denominator with N(z) E(z) = rhs.
struct CramerSolution {
  std::vector<IntPoly> numerators;
  IntPoly denominator;

  std::vector<RationalFunctionZ> entries() const;
};

// Right-hand side C_t; verified exactly before returning.
CramerSolution cramer_numerators(const MonomialSystem& sys, std::size_t t);
std::vector<RationalFunctionZ> cramer_solve(const MonomialSystem& sys, std::size_t t);

// Arbitrary integer right-hand side h, by linearity over the columns of C.
CramerSolution solve_rhs(const MonomialSystem& sys, const std::vector<BigInt>& h);

// N(z) * numerators == rhs * denominator.
bool satisfies(const MonomialSystem& sys, const CramerSolution& sol, const std::vector<BigInt>& rhs);

}  // namespace quadcf
