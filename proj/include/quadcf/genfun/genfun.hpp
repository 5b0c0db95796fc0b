#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "quadcf/cfrac/ab_table.hpp"
#include "quadcf/cfrac/convergents.hpp"
#include "quadcf/exact/rational_function.hpp"

namespace quadcf {

// c0 + c1 z + c2 z^2.
struct QuadPoly {
  BigInt c0, c1, c2;

  IntPoly as_poly() const { return IntPoly(std::vector<BigInt>{c0, c1, c2}); }
  QuadraticNumber eval(const QuadraticNumber& x) const;
  BigInt discriminant() const { return c1 * c1 - 4 * c0 * c2; }
  friend bool operator==(const QuadPoly&, const QuadPoly&) = default;
};

// Generating functions F = sum p_n z^n and G = sum q_n z^n.
struct GenFunPair {
  std::size_t k = 0;
  std::size_t ell = 0;
  BigInt delta;
  IntPoly v;                                   // 1 - (-1)^k delta x + (-1)^l x^2
  IntPoly prefix_F, prefix_G;                  // sum_{n<k} p_n z^n, likewise q
  std::vector<IntPoly> components_F, components_G;  // u_n for k <= n < k+l
  RationalFunctionZ F_raw, G_raw;              // denominator v(z^l)
  RationalFunctionZ F, G;                      // lowest terms

  IntPoly combined_F() const;
  IntPoly combined_G() const;
};

// q_k p_(k+l-1) - p_k q_(k+l-1) - q_(k-1) p_(k+l) + p_(k-1) q_(k+l); k >= 1.
BigInt delta(const ConvergentTable& t, std::size_t k, std::size_t l);

IntPoly denominator_v(const BigInt& delta, std::size_t k, std::size_t l);

struct ComponentNumerators {
  std::vector<IntPoly> P, Q;  // index n - k
};

// u_n(z) = z^n r_n + (-1)^(l+1) z^(n+l) r_(n-l) for r in {p, q}. Requires k >= l.
ComponentNumerators component_numerators(const ConvergentTable& t, std::size_t k, std::size_t l);

// At the canonical working index.
GenFunPair assemble(const ContinuedFraction& cf);
// At an explicit index k >= k_work.
GenFunPair assemble(const ContinuedFraction& cf, std::size_t k);

// Generating function of r_n = a_n r_(n-1) + r_(n-2) from r0, r1, reduced.
RationalFunctionZ general_genfun(const ContinuedFraction& cf, const BigInt& r0, const BigInt& r1);
RationalFunctionZ general_genfun(const GenFunPair& gf, const BigInt& a1, const BigInt& r0, const BigInt& r1);

struct CharacteristicPolys {
  QuadPoly chi;    // z^2 - tr(M1) z + (-1)^l
  QuadPoly omega;  // vanishes at the tail value of index k
};

CharacteristicPolys char_and_minimal_polys(const ContinuedFraction& cf, std::size_t k);

// omega(tail) == 0 in Q(sqrt D).
bool annihilates(const QuadPoly& omega, const QuadraticSurd& tail);

// Neither combined numerator vanishes on (0,1).
bool numerator_positive_on_unit_interval(const IntPoly& u);

}  // namespace quadcf
