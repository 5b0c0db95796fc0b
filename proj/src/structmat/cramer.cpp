#include "quadcf/structmat/cramer.hpp"

#include <stdexcept>

#include "quadcf/error.hpp"
#include "quadcf/structmat/configurations.hpp"

namespace quadcf {

static std::size_t offset(std::size_t s, std::size_t t, std::size_t l) { return (s + l - t) % l; }

std::size_t kappa_index(std::size_t s, std::size_t t, std::size_t ell) {
  std::size_t d = offset(s, t, ell);
  return d == ell - 1 ? 0 : ell - 1 - d;
}

std::size_t mu_index(std::size_t s, std::size_t t, std::size_t ell) {
  std::size_t d = offset(s, t, ell);
  return d == ell - 1 ? 0 : d + 1;
}

static BigInt divide_pivot(const BigInt& num, const BigInt& pivot) {
  if (pivot == 0) throw ComputationError("recurrence division by zero; use brute oracle");
  if (!mpz_divisible_p(num.get_mpz_t(), pivot.get_mpz_t())) {
    throw std::logic_error("u-recurrence produced a non-integral value");
  }
  BigInt q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), pivot.get_mpz_t());
  return q;
}

UTable u_table(const MonomialSystem& sys, std::size_t t) {
  sys.validate();
  const std::size_t l = sys.ell;
  const auto& g = sys.gamma;
  auto at = [&](long i) { return sys.wrap(static_cast<long>(t) + i); };
  UTable u{l, t, std::vector<BigInt>(l), std::vector<BigInt>(l)};

  // low family along s = t + d, d = 0 .. l-1.
  BigInt seed0 = 1, seed1 = -g[t][1];
  for (long d = 1; d < static_cast<long>(l); ++d) seed0 *= g[at(d)][0];
  for (long d = 2; d < static_cast<long>(l); ++d) seed1 *= g[at(d)][0];
  u.low[at(0)] = seed0;
  u.low[at(1)] = seed1;
  for (long d = 2; d < static_cast<long>(l); ++d) {
    std::size_t s = at(d), s1 = at(d - 1), s2 = at(d - 2);
    BigInt num = -(g[s1][1] * u.low[s1] + g[s2][2] * u.low[s2]);
    u.low[s] = divide_pivot(num, g[s][0]);
  }

  // high family along s = t - d, d = 2 .. l+1.
  BigInt h2 = 1, h3 = -g[at(-2)][1];
  for (long d = 1; d <= static_cast<long>(l); ++d) {
    if (d != 2) h2 *= g[at(-d)][2];
    if (d != 2 && d != 3) h3 *= g[at(-d)][2];
  }
  u.high[at(-2)] = h2;
  u.high[at(-3)] = h3;
  BigInt zero_zero;
  for (long d = 4; d <= static_cast<long>(l) + 1; ++d) {
    std::size_t s = at(-d), s1 = at(-d + 1), s2 = at(-d + 2);
    BigInt num = -(g[s1][1] * u.high[s1] + g[s2][0] * u.high[s2]);
    BigInt val = divide_pivot(num, g[s][2]);
    if (d == static_cast<long>(l) + 1) zero_zero = val;
    else u.high[s] = val;
  }
  std::size_t last = at(-1);
  if (zero_zero != u.low[last]) throw std::logic_error("u-recurrences disagree at s = t-1");
  u.high[last] = u.low[last];
  return u;
}

UTable u_table_enumerated(const MonomialSystem& sys, std::size_t t) {
  sys.validate();
  const std::size_t l = sys.ell;
  UTable u{l, t, std::vector<BigInt>(l), std::vector<BigInt>(l)};
  for (std::size_t s = 0; s < l; ++s) {
    std::size_t d = offset(s, t, l);
    for (const auto& c : enumerate_tplus(l, s, t)) {
      BigInt w = signed_weight(c, sys.gamma);
      if (c.exponent == d) u.low[s] += w;
      else if (c.exponent == d + l) u.high[s] += w;
      else throw std::logic_error("configuration exponent outside {d, d+l}");
    }
    if (d == l - 1) u.high[s] = u.low[s];
  }
  return u;
}

BigInt v1_via_anchor(const MonomialSystem& sys, std::size_t s) {
  const auto& g = sys.gamma[s];
  const std::size_t l = sys.ell;
  return g[0] * u_table(sys, s).high[s] + g[1] * u_table(sys, (s + 1) % l).low[s] +
         g[2] * u_table(sys, (s + 2) % l).low[s];
}

static IntPoly quadratic(const BigInt& v0, const BigInt& v1, const BigInt& v2) {
  return IntPoly(std::vector<BigInt>{v0, v1, v2});
}

IntPoly v_enumerated(const MonomialSystem& sys) {
  sys.validate();
  BigInt v[3];
  for (const auto& c : enumerate_tplus(sys.ell)) v[c.eta] += signed_weight(c, sys.gamma);
  return quadratic(v[0], v[1], v[2]);
}

IntPoly v_closed(const MonomialSystem& sys) {
  sys.validate();
  BigInt v0 = 1, v2 = 1;
  for (const auto& g : sys.gamma) {
    v0 *= g[0];
    v2 *= g[2];
  }
  for (std::size_t s = 0; s < sys.ell; ++s) {
    try {
      return quadratic(v0, v1_via_anchor(sys, s), v2);
    } catch (const ComputationError&) {
    }
  }
  return v_enumerated(sys);
}

std::vector<RationalFunctionZ> CramerSolution::entries() const {
  std::vector<RationalFunctionZ> out;
  for (const auto& n : numerators) out.emplace_back(n, denominator);
  return out;
}

bool satisfies(const MonomialSystem& sys, const CramerSolution& sol, const std::vector<BigInt>& rhs) {
  PolyMatrix N = assemble_N(sys);
  std::vector<IntPoly> lhs = N.apply(sol.numerators);
  for (std::size_t r = 0; r < sys.ell; ++r) {
    if (lhs[r] != sol.denominator.scaled(rhs[r])) return false;
  }
  return true;
}

static void require_nonsingular(const MonomialSystem& sys) {
  if (!is_nonsingular(sys.C)) throw ComputationError("base matrix singular");
}

static IntPoly v_of_zl(const MonomialSystem& sys) {
  IntPoly v = v_closed(sys);
  if (v.coeff(0) == 0) throw ComputationError("not a power series at zero");
  return v.compose_power(sys.ell);
}

static CramerSolution numerators_from(const UTable& u, const IntPoly& den) {
  const std::size_t l = u.ell;
  CramerSolution sol;
  sol.denominator = den;
  for (std::size_t s = 0; s < l; ++s) {
    std::size_t d = offset(s, u.t, l);
    if (d == l - 1) sol.numerators.push_back(IntPoly::monomial(u.low[s], l - 1));
    else sol.numerators.push_back(IntPoly::monomial(u.low[s], d) + IntPoly::monomial(u.high[s], l + d));
  }
  return sol;
}

// Recurrence when every pivot is nonzero, else the enumerated sums.
static UTable u_table_any(const MonomialSystem& sys, std::size_t t) {
  try {
    return u_table(sys, t);
  } catch (const ComputationError&) {
    return u_table_enumerated(sys, t);
  }
}

CramerSolution cramer_numerators(const MonomialSystem& sys, std::size_t t) {
  sys.validate();
  if (t >= sys.ell) throw std::invalid_argument("target index outside Z_l");
  require_nonsingular(sys);
  CramerSolution sol = numerators_from(u_table_any(sys, t), v_of_zl(sys));
  std::vector<BigInt> rhs;
  for (std::size_t r = 0; r < sys.ell; ++r) rhs.push_back(sys.C[r][t]);
  if (!satisfies(sys, sol, rhs)) throw std::logic_error("Cramer solution fails N E = C_t");
  return sol;
}

std::vector<RationalFunctionZ> cramer_solve(const MonomialSystem& sys, std::size_t t) {
  return cramer_numerators(sys, t).entries();
}

CramerSolution solve_rhs(const MonomialSystem& sys, const std::vector<BigInt>& h) {
  sys.validate();
  require_nonsingular(sys);
  const std::size_t l = sys.ell;
  // h = C x with x rational; E = sum_t x_t E^(t).
  std::vector<Rational> x = solve(sys.C, h);
  BigInt scale = 1;
  for (const auto& xi : x) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), xi.get_den_mpz_t());
  IntPoly den = v_of_zl(sys);
  CramerSolution sol;
  sol.numerators.assign(l, IntPoly{});
  for (std::size_t t = 0; t < l; ++t) {
    Rational w = x[t] * Rational(scale);
    if (w == 0) continue;
    CramerSolution part = numerators_from(u_table_any(sys, t), den);
    for (std::size_t s = 0; s < l; ++s) sol.numerators[s] += part.numerators[s].scaled(w.get_num());
  }
  sol.denominator = den.scaled(scale);
  if (!satisfies(sys, sol, h)) throw std::logic_error("linear combination fails N E = h");
  return sol;
}

}  // namespace quadcf
