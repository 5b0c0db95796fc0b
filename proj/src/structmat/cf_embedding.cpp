#include "quadcf/structmat/cf_embedding.hpp"

#include <stdexcept>
#include <vector>

#include "quadcf/error.hpp"
#include "quadcf/genfun/genfun.hpp"
#include "quadcf/structmat/cramer.hpp"

namespace quadcf {

IntMatrix period_matrix(const ABTable& ab) {
  const std::size_t l = ab.ell();
  IntMatrix m(l, std::vector<BigInt>(l));
  for (std::size_t c = 0; c < l; ++c) {
    std::vector<BigInt> col = ab.column(static_cast<long>(ab.k() + c));
    for (std::size_t r = 0; r < l; ++r) m[r][c] = col[r];
  }
  return m;
}

IntMatrix period_matrix(std::span<const BigInt> word) {
  const std::size_t l = word.size();
  if (l == 0) throw ComputationError("empty period");
  IntMatrix m(l, std::vector<BigInt>(l));
  for (std::size_t c = 0; c < l; ++c) {
    // A^(r)_c = K(w_c, ..., w_(c+r-1)) cyclically.
    BigInt prev = 0, cur = 1;
    for (std::size_t r = 0; r < l; ++r) {
      m[r][c] = cur;
      BigInt next = word[(c + r) % l] * cur + prev;
      prev = cur;
      cur = next;
    }
  }
  return m;
}

bool has_proper_subperiod(std::span<const BigInt> word) {
  const std::size_t l = word.size();
  for (std::size_t d = 1; d < l; ++d) {
    if (l % d) continue;
    bool ok = true;
    for (std::size_t i = d; i < l && ok; ++i) ok = word[i] == word[i - d];
    if (ok) return true;
  }
  return false;
}

MonomialSystem cf_system(const ContinuedFraction& cf) {
  ContinuedFraction m = minimize(cf);
  const std::size_t l = m.ell();
  if (l < 3) throw ComputationError("appendix machinery requires l >= 3");
  const std::size_t k = canonical_indices(m).k_work;
  ABTable ab(m, k);
  MonomialSystem sys;
  sys.ell = l;
  sys.C = period_matrix(ab);
  for (std::size_t c = 0; c < l; ++c) sys.gamma.push_back({BigInt(1), -m.quotient(k + c + 1), BigInt(-1)});
  if (!is_nonsingular(sys.C)) throw std::logic_error("period matrix singular for a minimal period");
  return sys;
}

CheckReport verify_cf_embedding(const ContinuedFraction& cf, std::size_t depth) {
  ContinuedFraction m = minimize(cf);
  MonomialSystem sys = cf_system(m);
  GenFunPair gf = assemble(m);
  const std::size_t l = sys.ell, k = gf.k;
  ConvergentTable tab = convergents(m, std::max(depth, k + l) + 1);
  CheckReport rep;

  {
    CheckBuilder c("embedding_denominator", "v_closed vs genfun v");
    IntPoly v = v_closed(sys);
    c.expect(v == gf.v, [&] { return v.to_string('x') + " vs " + gf.v.to_string('x'); });
    rep.records.push_back(c.done());
  }

  CramerSolution e0 = cramer_numerators(sys, 0);
  CramerSolution e1 = cramer_numerators(sys, 1);
  const IntPoly den = gf.v.compose_power(l);
  auto check_components = [&](const char* name, const std::vector<BigInt>& r, const std::vector<IntPoly>& comps) {
    CheckBuilder c(name, "0<=s<l");
    IntPoly w0 = IntPoly::monomial(r[k], k), w1 = IntPoly::monomial(r[k - 1], k + 1);
    for (std::size_t s = 0; s < l; ++s) {
      IntPoly num = w0 * e0.numerators[s] + w1 * e1.numerators[s];
      RationalFunctionZ lhs = reduce(RationalFunctionZ(num, e0.denominator));
      RationalFunctionZ rhs = reduce(RationalFunctionZ(comps[s], den));
      c.expect(lhs == rhs, [&] { return "s=" + std::to_string(s) + " " + lhs.to_string() + " vs " + rhs.to_string(); });
    }
    rep.records.push_back(c.done());
  };
  check_components("embedding_components_p", tab.p, gf.components_F);
  check_components("embedding_components_q", tab.q, gf.components_G);

  PolyMatrix N = assemble_N(sys);
  auto check_series = [&](const char* name, const std::vector<BigInt>& r) {
    CheckBuilder c(name, "series to depth " + std::to_string(depth));
    std::vector<IntPoly> F(l);
    for (std::size_t s = 0; s < l; ++s) {
      std::vector<BigInt> coeffs(depth);
      for (std::size_t n = k + s; n < depth; n += l) coeffs[n] = r[n];
      F[s] = IntPoly(std::move(coeffs));
    }
    std::vector<IntPoly> lhs = N.apply(F);
    for (std::size_t row = 0; row < l; ++row) {
      IntPoly rhs = IntPoly::monomial(r[k] * sys.C[row][0], k) + IntPoly::monomial(r[k - 1] * sys.C[row][1], k + 1);
      c.expect(lhs[row].truncated(depth) == rhs.truncated(depth), [&] { return "row=" + std::to_string(row); });
    }
    rep.records.push_back(c.done());
  };
  check_series("matrix_relation_p", tab.p);
  check_series("matrix_relation_q", tab.q);
  return rep;
}

}  // namespace quadcf
