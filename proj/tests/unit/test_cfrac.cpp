#include <gtest/gtest.h>

#include "quadcf/cfrac/ab_table.hpp"
#include "quadcf/cfrac/identities.hpp"
#include "quadcf/error.hpp"

using namespace quadcf;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> xs) {
  std::vector<BigInt> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

ContinuedFraction make_cf(long a0, std::initializer_list<long> pre, std::initializer_list<long> period) {
  return {BigInt(a0), ints(pre), ints(period)};
}

}  // namespace

TEST(ExpandSurdTest, KnownExpansions) {
  EXPECT_EQ(expand_surd(normalize_surd(-1, 2, 5)), make_cf(0, {}, {1}));
  EXPECT_EQ(expand_surd(normalize_surd(0, 1, 2)), make_cf(1, {}, {2}));
  EXPECT_EQ(expand_surd(normalize_surd(1, 3, 5)), make_cf(1, {}, {12, 1, 2, 2, 2, 1}));
  EXPECT_EQ(expand_surd(normalize_surd(-1, 1, 3)), make_cf(0, {}, {1, 2}));
  EXPECT_EQ(expand_surd(normalize_surd(0, 1, 7)), make_cf(2, {}, {1, 1, 1, 4}));
}

TEST(ExpandSurdTest, NegativeAndPrePeriodic) {
  ContinuedFraction cf = expand_surd(normalize_surd(0, -1, 2));
  EXPECT_EQ(cf.a0, -2);
  EXPECT_EQ(cf.pre, ints({1, 1}));
  EXPECT_EQ(cf.period, ints({2}));
  EXPECT_TRUE(is_minimal(cf));
}

TEST(ExpandSurdTest, Budget) {
  try {
    expand_surd(normalize_surd(0, 1, 94), 3);
    FAIL();
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.steps(), 3u);
  }
}

TEST(CanonicalIndicesTest, Examples) {
  EXPECT_EQ(canonical_indices(make_cf(0, {}, {1})), (CanonicalIndices{1, 0, 2}));
  EXPECT_EQ(canonical_indices(make_cf(0, {}, {1, 2})), (CanonicalIndices{2, 0, 2}));
  EXPECT_EQ(canonical_indices(make_cf(0, {3}, {1, 2, 1})), (CanonicalIndices{3, 1, 3}));
  EXPECT_EQ(canonical_indices(make_cf(0, {5, 1}, {1, 1, 2})), (CanonicalIndices{3, 2, 4}));
}

TEST(CanonicalIndicesTest, MinimizeShortensBoth) {
  ContinuedFraction cf = make_cf(0, {4, 1, 2}, {1, 2, 1, 2});
  EXPECT_EQ(minimize(cf), make_cf(0, {4}, {1, 2}));
  EXPECT_EQ(canonical_indices(cf).ell_min, 2u);
  EXPECT_EQ(canonical_indices(cf).k_min, 1u);
}

TEST(ConvergentsTest, SeedsAndRecurrence) {
  ConvergentTable g = convergents(make_cf(0, {}, {1}), 5);
  EXPECT_EQ(g.p, ints({0, 1, 1, 2, 3, 5}));
  EXPECT_EQ(g.q, ints({1, 1, 2, 3, 5, 8}));
  ConvergentTable s = convergents(make_cf(0, {}, {2}), 4);
  EXPECT_EQ(s.p, ints({0, 1, 2, 5, 12}));
  EXPECT_EQ(s.q, ints({1, 2, 5, 12, 29}));
  ConvergentTable one = convergents(make_cf(0, {7}, {3}), 1);
  EXPECT_EQ(one.p, ints({0, 1}));
  EXPECT_EQ(one.q, ints({1, 7}));
}

TEST(ABTableTest, SmallCases) {
  ABTable golden(make_cf(0, {}, {1}), 2);
  EXPECT_EQ(golden.A(0, 5), 1);
  EXPECT_EQ(golden.A(1, 5), 1);
  EXPECT_EQ(golden.B(1, 5), 1);
  ContinuedFraction cf = make_cf(0, {}, {1, 2});
  ABTable ab(cf, 2);
  // Corner values of M1 = [[1,2],[1,3]].
  EXPECT_EQ(ab.A(0, 3), 1);
  EXPECT_EQ(ab.A(1, 3), 2);
  EXPECT_EQ(ab.A(1, 2), 1);
  EXPECT_EQ(ab.A(2, 2), 3);
  for (long n = 0; n < 6; ++n) {
    EXPECT_EQ(ab.B(1, n), 1);
    EXPECT_EQ(ab.A(1, n), cf.quotient(static_cast<std::size_t>(n + 3)));
  }
}

TEST(ABTableTest, ShiftedStartGivesSameValues) {
  ContinuedFraction cf = make_cf(0, {3}, {1, 2, 5, 1});
  ABTable a(cf, 1), b(cf, 6);
  for (long m = -1; m <= 5; ++m) {
    for (long n = 0; n < 8; ++n) EXPECT_EQ(a.A(m, n), b.A(m, n));
  }
  EXPECT_THROW(ABTable(cf, 0), ComputationError);
  EXPECT_THROW(ABTable(make_cf(0, {3, 4}, {1, 2}), 1), ComputationError);
}

TEST(TransferMatricesTest, Examples) {
  auto g = transfer_matrices(make_cf(0, {}, {1}), 2);
  EXPECT_EQ(g.M1, (Mobius2x2{0, 1, 1, 1}));
  auto t = transfer_matrices(make_cf(0, {}, {1, 2}), 2);
  EXPECT_EQ(t.M1, (Mobius2x2{1, 2, 1, 3}));
  EXPECT_EQ(t.M1.trace(), 4);
  EXPECT_EQ(t.M1.det(), 1);
  auto s = transfer_matrices(make_cf(0, {}, {2}), 2);
  EXPECT_EQ(s.M1, (Mobius2x2{0, 1, 1, 2}));
  auto p = transfer_matrices(make_cf(0, {3, 7}, {1, 4, 2}), 2);
  EXPECT_EQ(p.M1.det(), -1);
  EXPECT_EQ(p.Mtheta.trace(), p.M1.trace());
  EXPECT_EQ(p.M0, (Mobius2x2{1, 7, 3, 22}));
}

TEST(IdentityReportTest, PassesOnSamples) {
  for (const auto& cf : {make_cf(0, {}, {1}), make_cf(0, {}, {1, 2}), make_cf(0, {3}, {1, 2, 1}),
                         make_cf(2, {5, 1}, {1, 1, 2}), make_cf(0, {2, 3, 7}, {1, 4, 1, 5})}) {
    auto idx = canonical_indices(cf);
    ConvergentTable t = convergents(cf, 40);
    CheckReport rep = identity_report(t, ABTable(cf, idx.k_work));
    EXPECT_TRUE(rep.all_passed()) << rep.summary();
    EXPECT_GE(rep.records.size(), 10u);
  }
}

TEST(IdentityReportTest, SpotValues) {
  ContinuedFraction cf = make_cf(0, {}, {1, 2});
  ConvergentTable t = convergents(cf, 8);
  EXPECT_EQ(t.p[0] * t.q[1] - t.p[1] * t.q[0], -1);
  ContinuantTable A(t.a);
  EXPECT_EQ(t.p[6], t.p[4] * A.A(2, 4) + t.p[3] * A.A(1, 5));
}

TEST(IdentityReportTest, DetectsCorruptedTable) {
  ConvergentTable t = convergents(make_cf(0, {}, {1, 2}), 10);
  t.p[5] += 1;
  CheckReport rep = identity_report(t);
  EXPECT_FALSE(rep.all_passed());
  EXPECT_FALSE(rep.records[0].pass);
  EXPECT_EQ(rep.records[0].first_failure, "n=5");
}

TEST(TailSurdTest, ValueRoundTrip) {
  QuadraticSurd s = normalize_surd(1, 3, 5);
  ContinuedFraction cf = expand_surd(s);
  QuadraticSurd back = cf_value(cf);
  EXPECT_EQ(expand_surd(back), cf);
  QuadraticSurd g = normalize_surd(-1, 2, 5);
  // Golden mean is its own tail.
  EXPECT_EQ(expand_surd(tail_surd(g, 3)), expand_surd(g));
}
