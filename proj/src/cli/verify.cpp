#include "quadcf/cli/verify.hpp"

#include <random>

#include "quadcf/cfrac/ab_table.hpp"
#include "quadcf/error.hpp"
#include "quadcf/exact/root_count.hpp"
#include "quadcf/structmat/cf_embedding.hpp"
#include "quadcf/structmat/cramer.hpp"

namespace quadcf::cli {

CheckReport verify_input(const InputSpec& spec, const Options& opt) {
  ContinuedFraction cf = to_continued_fraction(spec, opt.max_steps);
  CanonicalIndices idx = canonical_indices(cf);
  GenFunPair gf = assemble(cf);
  const std::size_t depth = std::max(opt.terms, idx.k_work + 2 * idx.ell_min + 2);
  ConvergentTable t = convergents(cf, depth);
  CheckReport rep = identity_report(t, ABTable(cf, idx.k_work));

  {
    CheckBuilder c("series_oracle", "first " + std::to_string(depth) + " coefficients");
    auto fp = integer_series_coeffs(gf.F, depth + 1), gq = integer_series_coeffs(gf.G, depth + 1);
    for (std::size_t n = 0; n <= depth; ++n) {
      c.expect(fp[n] == t.p[n] && gq[n] == t.q[n], [&] { return "n=" + std::to_string(n); });
    }
    rep.records.push_back(c.done());
  }
  CharacteristicPolys cp = char_and_minimal_polys(cf, idx.k_work);
  {
    CheckBuilder c("denominator_vs_characteristic", "v(x) = x^2 chi(1/x), discriminants");
    IntPoly reversed(std::vector<BigInt>{cp.chi.c2, cp.chi.c1, cp.chi.c0});
    c.expect(reversed == gf.v, [&] { return gf.v.to_string('x'); });
    BigInt dv = gf.v.coeff(1) * gf.v.coeff(1) - 4 * gf.v.coeff(0) * gf.v.coeff(2);
    c.expect(dv == cp.chi.discriminant() && dv == cp.omega.discriminant(), [&] { return "discriminants differ"; });
    rep.records.push_back(c.done());
  }
  {
    CheckBuilder c("tail_root", "omega(theta^k) = 0");
    QuadraticSurd s = to_surd(spec);
    c.expect(annihilates(cp.omega, tail_surd(s, idx.k_work)), [&] { return s.to_string(); });
    rep.records.push_back(c.done());
  }
  {
    CheckBuilder c("positivity", "u has no zero in (0,1); v_min in (0,1)");
    c.expect(numerator_positive_on_unit_interval(gf.combined_G()), [&] { return "G numerator"; });
    c.expect(vmin_certified(gf.v), [&] { return gf.v.to_string('x'); });
    rep.records.push_back(c.done());
  }
  {
    CheckBuilder c("levy_routes", "|closed - from_v| <= 1e-12");
    PrecisionReal a = levy_closed(cf, opt.prec_bits), b = levy_from_denominator(gf, opt.prec_bits);
    Interval diff = abs_difference(a, b);
    c.expect(diff.hi().to_double() <= 1e-12, [&] { return diff.hi().to_string(20); });
    rep.records.push_back(c.done());
  }
  if (idx.ell_min >= 3) rep.append(verify_cf_embedding(cf, std::max<std::size_t>(opt.terms, 60)));
  return rep;
}

CheckReport verify_random_systems(unsigned long seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> ell_dist(3, 6), g(-5, 5), cdist(-9, 9);
  CheckBuilder det("determinant_factorisation", "random systems, l in 3..6");
  CheckBuilder cr("cramer", "random nonsingular systems, every t");
  for (std::size_t i = 0; i < count; ++i) {
    MonomialSystem sys;
    sys.ell = static_cast<std::size_t>(ell_dist(rng));
    sys.C.assign(sys.ell, std::vector<BigInt>(sys.ell));
    for (auto& row : sys.C) {
      for (auto& x : row) x = cdist(rng);
    }
    for (std::size_t s = 0; s < sys.ell; ++s) sys.gamma.push_back({BigInt(g(rng)), BigInt(g(rng)), BigInt(g(rng))});
    IntPoly lhs = brute_det(assemble_N(sys));
    IntPoly rhs = v_closed(sys).compose_power(sys.ell).scaled(determinant(sys.C));
    det.expect(lhs == rhs, [&] { return "system " + std::to_string(i); });
    if (determinant(sys.C) == 0 || v_closed(sys).coeff(0) == 0) continue;
    for (std::size_t t = 0; t < sys.ell; ++t) {
      try {
        CramerSolution s = cramer_numerators(sys, t);
        std::vector<BigInt> col;
        for (std::size_t r = 0; r < sys.ell; ++r) col.push_back(sys.C[r][t]);
        cr.expect(satisfies(sys, s, col), [&] { return "system " + std::to_string(i); });
      } catch (const ComputationError&) {
        // zero pivot: outside the recurrence's domain
      }
    }
  }
  CheckReport rep;
  rep.records.push_back(det.done());
  rep.records.push_back(cr.done());
  return rep;
}

}  // namespace quadcf::cli
