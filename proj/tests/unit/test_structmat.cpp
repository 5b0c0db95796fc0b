#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "quadcf/error.hpp"
#include "quadcf/structmat/cf_embedding.hpp"
#include "quadcf/structmat/configurations.hpp"
#include "quadcf/structmat/cramer.hpp"

using namespace quadcf;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> xs) {
  std::vector<BigInt> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

ContinuedFraction periodic(std::initializer_list<long> period) { return {BigInt(0), {}, ints(period)}; }

}  // namespace

TEST(AssembleNTest, IdentityCoefficientsGiveC) {
  MonomialSystem sys = uniform_system(4, 1, 0, 0);
  sys.C[0][3] = 5;
  PolyMatrix N = assemble_N(sys);
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) EXPECT_EQ(N.at(r, c), IntPoly::constant(sys.C[r][c]));
  }
  EXPECT_THROW(assemble_N(uniform_system(2, 1, 0, 0)), ComputationError);
}

TEST(AssembleNTest, UniformSystemShape) {
  PolyMatrix N = assemble_N(uniform_system(3, 1, -1, -1));
  // Column s holds 1 at row s, -z at row s+1, -z^2 at row s+2.
  for (std::size_t s = 0; s < 3; ++s) {
    EXPECT_EQ(N.at(s, s), (IntPoly{1}));
    EXPECT_EQ(N.at((s + 1) % 3, s), (IntPoly{0, -1}));
    EXPECT_EQ(N.at((s + 2) % 3, s), (IntPoly{0, 0, -1}));
  }
}

TEST(BruteDetTest, Examples) {
  PolyMatrix id(3);
  for (std::size_t i = 0; i < 3; ++i) id.at(i, i) = IntPoly{1};
  EXPECT_EQ(brute_det(id), (IntPoly{1}));
  PolyMatrix dz(3);
  for (std::size_t i = 0; i < 3; ++i) dz.at(i, i) = IntPoly{0, 1};
  EXPECT_EQ(brute_det(dz), IntPoly::monomial(1, 3));
  PolyMatrix N = assemble_N(uniform_system(3, 1, -1, -1));
  IntPoly want = IntPoly{1, -4, -1}.compose_power(3);
  EXPECT_EQ(brute_det(N), want);
  EXPECT_EQ(determinant(N), want);
  EXPECT_THROW(brute_det(PolyMatrix(9)), ComputationError);
}

TEST(VClosedTest, Examples) {
  EXPECT_EQ(v_closed(uniform_system(4, 3, 0, 0)), (IntPoly{81}));
  EXPECT_EQ(v_closed(uniform_system(3, 1, -1, -1)), (IntPoly{1, -4, -1}));
  MonomialSystem sys = cf_system(periodic({1, 2, 3}));
  EXPECT_EQ(v_closed(sys), (IntPoly{1, -12, -1}));
}

TEST(VClosedTest, CubicInA) {
  for (long a = -3; a <= 4; ++a) {
    IntPoly v = v_closed(uniform_system(3, 1, -a, -1));
    EXPECT_EQ(v.coeff(1), -a * a * a - 3 * a);
  }
}

TEST(UTableTest, SeedsAndUniform) {
  MonomialSystem sys = uniform_system(3, 1, -1, -1);
  for (std::size_t t = 0; t < 3; ++t) {
    UTable u = u_table(sys, t);
    EXPECT_EQ(u.low[t], 1);
    EXPECT_EQ(u.low[(t + 1) % 3], 1);
    EXPECT_EQ(u, u_table_enumerated(sys, t));
  }
  EXPECT_EQ(v1_via_anchor(sys, 1), -4);
}

TEST(UTableTest, ZeroPivot) {
  MonomialSystem sys = uniform_system(5, 1, 2, 1);
  sys.gamma[3][0] = 0;
  try {
    u_table(sys, 0);
    FAIL();
  } catch (const ComputationError& e) {
    EXPECT_STREQ(e.what(), "recurrence division by zero; use brute oracle");
  }
  // v_closed still succeeds through another anchor or the enumeration.
  EXPECT_EQ(v_closed(sys).compose_power(5), brute_det(assemble_N(sys)));
}

TEST(KappaMuTest, SumIsEll) {
  for (std::size_t l = 3; l <= 7; ++l) {
    for (std::size_t t = 0; t < l; ++t) {
      for (std::size_t s = 0; s < l; ++s) {
        std::size_t sum = kappa_index(s, t, l) + mu_index(s, t, l);
        EXPECT_EQ(sum, (s + 1) % l == t ? 0u : l);
      }
      EXPECT_EQ(kappa_index(t, t, l), l - 1);
      EXPECT_EQ(mu_index((t + l - 2) % l, t, l), l - 1);
    }
  }
}

TEST(EnumerateTest, FullDomainEllThree) {
  auto configs = enumerate_tplus(3);
  std::set<std::string> words;
  for (const auto& c : configs) words.insert(c.word());
  EXPECT_EQ(words, (std::set<std::string>{"000", "012", "111", "120", "201", "222"}));
  for (const auto& c : configs) {
    EXPECT_EQ(c.exponent, static_cast<std::size_t>(c.eta) * 3);
  }
  EXPECT_THROW(enumerate_tplus(13), ComputationError);
}

TEST(EnumerateTest, ConstantMapsAlwaysPresent) {
  for (std::size_t l = 3; l <= 8; ++l) {
    auto configs = enumerate_tplus(l);
    auto has = [&](char ch, int eta) {
      return std::any_of(configs.begin(), configs.end(),
                         [&](const Configuration& c) { return c.word() == std::string(l, ch) && c.eta == eta; });
    };
    EXPECT_TRUE(has('0', 0));
    EXPECT_TRUE(has('2', 2));
  }
}

TEST(EnumerateTest, OmittedIndexTypes) {
  for (std::size_t l = 3; l <= 6; ++l) {
    for (std::size_t s = 0; s < l; ++s) {
      for (std::size_t t = 0; t < l; ++t) {
        for (const auto& c : enumerate_tplus(l, s, t)) {
          bool low = c.kappa == kappa_index(s, t, l) && c.mu == 0;
          bool high = c.kappa == 0 && c.mu == mu_index(s, t, l);
          EXPECT_TRUE(low || high) << c.word() << " s=" << s << " t=" << t;
        }
      }
    }
  }
}

TEST(CramerTest, TrivialAndUniform) {
  auto e = cramer_solve(uniform_system(3, 1, 0, 0), 0);
  EXPECT_TRUE(e[0].equivalent(RationalFunctionZ(IntPoly{1}, IntPoly{1})));
  EXPECT_TRUE(e[1].num().is_zero());
  EXPECT_TRUE(e[2].num().is_zero());
  auto u = cramer_solve(uniform_system(3, 1, -1, -1), 0);
  for (const auto& x : u) EXPECT_EQ(x.den(), (IntPoly{1, 0, 0, -4, 0, 0, -1}));
}

TEST(CramerTest, MatchesPolynomialAdjugate) {
  MonomialSystem sys = uniform_system(4, 2, -3, 1);
  sys.C[0][1] = 4;
  sys.C[2][3] = -1;
  PolyMatrix N = assemble_N(sys);
  IntPoly detN = brute_det(N);
  for (std::size_t t = 0; t < 4; ++t) {
    auto sol = cramer_solve(sys, t);
    for (std::size_t s = 0; s < 4; ++s) {
      PolyMatrix M = N;
      for (std::size_t r = 0; r < 4; ++r) M.at(r, s) = IntPoly::constant(sys.C[r][t]);
      RationalFunctionZ brute(brute_det(M), detN);
      EXPECT_TRUE(reduce(brute) == reduce(sol[s])) << "s=" << s << " t=" << t;
    }
  }
}

TEST(CramerTest, SingularBase) {
  MonomialSystem sys = uniform_system(3, 1, -1, -1);
  sys.C[2] = sys.C[1];
  try {
    cramer_solve(sys, 0);
    FAIL();
  } catch (const ComputationError& e) {
    EXPECT_STREQ(e.what(), "base matrix singular");
  }
}

TEST(CramerTest, Linearity) {
  MonomialSystem sys = uniform_system(4, 1, 2, -1);
  sys.C[1][0] = 3;
  std::vector<BigInt> h(4);
  for (std::size_t r = 0; r < 4; ++r) h[r] = 2 * sys.C[r][0] - 5 * sys.C[r][2];
  CramerSolution sol = solve_rhs(sys, h);
  auto e0 = cramer_numerators(sys, 0), e2 = cramer_numerators(sys, 2);
  for (std::size_t s = 0; s < 4; ++s) {
    RationalFunctionZ lin(e0.numerators[s].scaled(2) - e2.numerators[s].scaled(5), e0.denominator);
    EXPECT_TRUE(lin.equivalent(RationalFunctionZ(sol.numerators[s], sol.denominator)));
  }
  EXPECT_TRUE(satisfies(sys, sol, h));
}

TEST(CfSystemTest, Examples) {
  MonomialSystem a = cf_system(periodic({1, 1, 2}));
  EXPECT_EQ(determinant(a.C), -1);
  EXPECT_EQ(v_closed(a), (IntPoly{1, -6, -1}));
  MonomialSystem b = cf_system(periodic({1, 2, 3}));
  EXPECT_EQ(determinant(b.C), -7);
  std::size_t k = canonical_indices(periodic({1, 2, 3})).k_work;
  EXPECT_EQ(b.gamma[1][1], -periodic({1, 2, 3}).quotient(k + 2));
  EXPECT_EQ(determinant(period_matrix(ints({1, 1, 1}))), 0);
  EXPECT_NE(determinant(period_matrix(ints({1, 1, 2}))), 0);
  EXPECT_THROW(cf_system(periodic({1, 2})), ComputationError);
}

TEST(CfEmbeddingTest, PassesOnSamples) {
  for (const auto& cf : {periodic({1, 1, 2}), periodic({1, 2, 3}), ContinuedFraction{BigInt(2), ints({5, 1}), ints({1, 1, 2})},
                         ContinuedFraction{BigInt(0), ints({2, 3, 7}), ints({1, 4, 1, 5})}}) {
    CheckReport rep = verify_cf_embedding(cf, 60);
    EXPECT_TRUE(rep.all_passed()) << rep.summary();
  }
}

TEST(SubperiodTest, Brute) {
  EXPECT_TRUE(has_proper_subperiod(ints({1, 2, 1, 2})));
  EXPECT_FALSE(has_proper_subperiod(ints({1, 2, 2, 1})));
  EXPECT_FALSE(has_proper_subperiod(ints({7})));
}
