#include "quadcf/levy/levy.hpp"

#include "quadcf/cfrac/ab_table.hpp"
#include "quadcf/cfrac/convergents.hpp"
#include "quadcf/error.hpp"

namespace quadcf {

PrecisionReal levy_closed(const ContinuedFraction& cf, std::size_t prec_bits) {
  ContinuedFraction m = minimize(cf);
  const std::size_t l = m.ell();
  BigInt tau = transfer_matrices(m, m.pre.size()).M1.trace();
  BigInt disc = tau * tau - (l % 2 == 0 ? 4 : -4);
  return refine(prec_bits, [&](mpfr_prec_t w) {
    Interval rad = (Interval::exact(tau, w) + Interval::exact(disc, w).sqrt()).divided(2);
    return rad.log().divided(l);
  });
}

bool vmin_certified(const IntPoly& v) {
  if (v.degree() != 2) return false;
  return v.eval(BigInt(0)) > 0 && v.eval(BigInt(1)) < 0 && abs(v.coeff(0)) >= abs(v.coeff(2));
}

PrecisionReal levy_from_denominator(const IntPoly& v, std::size_t ell, std::size_t prec_bits) {
  if (!vmin_certified(v)) throw ComputationError("least root of v is not certified inside (0,1)");
  const BigInt c0 = v.coeff(0), c1 = v.coeff(1), c2 = v.coeff(2);
  BigInt disc = c1 * c1 - 4 * c0 * c2;
  if (disc <= 0) throw ComputationError("v has no distinct real roots");
  // Least-modulus root in the form 2 c0 / (-c1 + sign(-c1) sqrt(disc)).
  BigInt s = -c1;
  int sg = sgn(s) >= 0 ? 1 : -1;
  return refine(prec_bits, [&](mpfr_prec_t w) {
    Interval root = Interval::exact(disc, w).sqrt();
    Interval den = sg > 0 ? Interval::exact(s, w) + root : Interval::exact(s, w) - root;
    Interval vmin = Interval::exact(2 * c0, w) / den;
    return (-vmin.log()).divided(ell);
  });
}

PrecisionReal levy_from_denominator(const GenFunPair& gf, std::size_t prec_bits) {
  return levy_from_denominator(gf.v, gf.ell, prec_bits);
}

PrecisionReal levy_empirical(const ContinuedFraction& cf, std::size_t n, std::size_t prec_bits) {
  if (n < 1) throw ComputationError("empirical index must be at least 1");
  ConvergentTable t = convergents(cf, n);
  const BigInt& qn = t.q[n];
  return refine(prec_bits, [&](mpfr_prec_t w) { return Interval::exact(qn, w).log().divided(n); });
}

PrecisionReal levy_reference(std::size_t prec_bits) {
  return refine(prec_bits, [](mpfr_prec_t w) {
    Interval pi = Interval::pi(w);
    return (pi * pi) / (Interval::log2(w) * Interval::exact(12, w));
  });
}

}  // namespace quadcf
