#include "quadcf/genfun/genfun.hpp"

#include "quadcf/error.hpp"
#include "quadcf/exact/root_count.hpp"

namespace quadcf {

static int parity_sign(std::size_t e) { return e % 2 == 0 ? 1 : -1; }

QuadraticNumber QuadPoly::eval(const QuadraticNumber& x) const {
  return (x * Rational(c2) + Rational(c1)) * x + Rational(c0);
}

static IntPoly sum(const std::vector<IntPoly>& v) {
  IntPoly s;
  for (const auto& x : v) s += x;
  return s;
}

IntPoly GenFunPair::combined_F() const { return sum(components_F); }
IntPoly GenFunPair::combined_G() const { return sum(components_G); }

BigInt delta(const ConvergentTable& t, std::size_t k, std::size_t l) {
  if (k < 1 || l < 1) throw ComputationError("delta needs k >= 1 and l >= 1");
  if (t.depth() < k + l) throw ComputationError("table too short");
  const auto& p = t.p;
  const auto& q = t.q;
  BigInt d = q[k] * p[k + l - 1] - p[k] * q[k + l - 1] - q[k - 1] * p[k + l] + p[k - 1] * q[k + l];
  // Cross-check against the trace of the period block.
  Mobius2x2 m;
  for (std::size_t n = k + 1; n <= k + l; ++n) m = m * quotient_matrix(t.quotient(n));
  if (m.trace() != parity_sign(k) * d) throw std::logic_error("delta disagrees with trace of the period block");
  return d;
}

IntPoly denominator_v(const BigInt& delta, std::size_t k, std::size_t l) {
  return IntPoly(std::vector<BigInt>{1, -parity_sign(k) * delta, BigInt(parity_sign(l))});
}

ComponentNumerators component_numerators(const ConvergentTable& t, std::size_t k, std::size_t l) {
  if (k < l) throw ComputationError("pre-period below proof threshold");
  if (t.depth() + 1 < k + l) throw ComputationError("table too short");
  ComponentNumerators out;
  const int s = parity_sign(l + 1);
  for (std::size_t n = k; n < k + l; ++n) {
    out.P.push_back(IntPoly::monomial(t.p[n], n) + IntPoly::monomial(s * t.p[n - l], n + l));
    out.Q.push_back(IntPoly::monomial(t.q[n], n) + IntPoly::monomial(s * t.q[n - l], n + l));
  }
  return out;
}

GenFunPair assemble(const ContinuedFraction& cf) { return assemble(cf, canonical_indices(cf).k_work); }

GenFunPair assemble(const ContinuedFraction& cf, std::size_t k) {
  ContinuedFraction m = minimize(cf);
  CanonicalIndices idx = canonical_indices(m);
  if (k < idx.k_work) throw ComputationError("pre-period below proof threshold");
  const std::size_t l = idx.ell_min;
  ConvergentTable t = convergents(m, k + l);

  GenFunPair g;
  g.k = k;
  g.ell = l;
  g.delta = delta(t, k, l);
  g.v = denominator_v(g.delta, k, l);
  std::vector<BigInt> pf(t.p.begin(), t.p.begin() + static_cast<long>(k));
  std::vector<BigInt> qf(t.q.begin(), t.q.begin() + static_cast<long>(k));
  g.prefix_F = IntPoly(std::move(pf));
  g.prefix_G = IntPoly(std::move(qf));
  ComponentNumerators u = component_numerators(t, k, l);
  g.components_F = std::move(u.P);
  g.components_G = std::move(u.Q);
  IntPoly den = g.v.compose_power(l);
  g.F_raw = RationalFunctionZ(g.prefix_F * den + g.combined_F(), den);
  g.G_raw = RationalFunctionZ(g.prefix_G * den + g.combined_G(), den);
  g.F = reduce(g.F_raw);
  g.G = reduce(g.G_raw);
  return g;
}

RationalFunctionZ general_genfun(const GenFunPair& gf, const BigInt& a1, const BigInt& r0, const BigInt& r1) {
  // r_n = alpha p_n + beta q_n with beta = r0, alpha = r1 - r0 a1.
  BigInt alpha = r1 - r0 * a1;
  RationalFunctionZ raw(gf.F_raw.num().scaled(alpha) + gf.G_raw.num().scaled(r0), gf.F_raw.den());
  return reduce(raw);
}

RationalFunctionZ general_genfun(const ContinuedFraction& cf, const BigInt& r0, const BigInt& r1) {
  return general_genfun(assemble(cf), cf.quotient(1), r0, r1);
}

CharacteristicPolys char_and_minimal_polys(const ContinuedFraction& cf, std::size_t k) {
  ABTable ab(cf, k);
  const long l = static_cast<long>(ab.ell());
  const long kk = static_cast<long>(k);
  BigInt tr = ab.A(l - 2, kk + 1) + ab.A(l, kk);
  CharacteristicPolys out;
  out.chi = {BigInt(parity_sign(ab.ell())), -tr, 1};
  out.omega = {-ab.A(l - 1, kk + 1), ab.A(l, kk) - ab.A(l - 2, kk + 1), ab.A(l - 1, kk)};
  return out;
}

bool annihilates(const QuadPoly& omega, const QuadraticSurd& tail) {
  return omega.eval(QuadraticNumber::from_surd(tail)).is_zero();
}

bool numerator_positive_on_unit_interval(const IntPoly& u) {
  if (u.is_zero()) return false;
  if (has_root_in_open_unit_interval(u)) return false;
  return u.sign_at(Rational(1, 2)) > 0;
}

}  // namespace quadcf
