#include <gtest/gtest.h>

#include <cmath>

#include "quadcf/levy/levy.hpp"

using namespace quadcf;

namespace {

ContinuedFraction make_cf(std::initializer_list<long> period) {
  ContinuedFraction cf;
  cf.a0 = 0;
  for (long x : period) cf.period.emplace_back(x);
  return cf;
}

double distance(const PrecisionReal& r, const char* decimal) {
  BigFloat ref(256);
  mpfr_set_str(ref.get(), decimal, 10, MPFR_RNDN);
  BigFloat mid = r.midpoint();
  mpfr_sub(ref.get(), ref.get(), mid.get(), MPFR_RNDN);
  return std::fabs(ref.to_double());
}

}  // namespace

TEST(LevyClosedTest, NamedConstants) {
  EXPECT_LT(distance(levy_closed(make_cf({1})), "0.48121182505960344749775891342436842313518433438566"), 1e-30);
  EXPECT_LT(distance(levy_closed(make_cf({2})), "0.88137358701954302523260932497979230902816032826163"), 1e-30);
  EXPECT_LT(distance(levy_closed(make_cf({1, 2})), "0.65847894846240835431252317365398"), 1e-30);
}

TEST(LevyClosedTest, ErrorBoundRespectsPrecision) {
  PrecisionReal r = levy_closed(make_cf({1, 2}), 200);
  EXPECT_LE(r.error_bound(), std::ldexp(1.0, -199));
  EXPECT_EQ(r.prec_bits(), 200u);
}

TEST(LevyFromDenominatorTest, MatchesClosedForm) {
  for (auto cf : {make_cf({1}), make_cf({2}), make_cf({1, 2}), make_cf({1, 1, 2}), make_cf({3, 1, 4, 1, 5})}) {
    GenFunPair g = assemble(cf);
    Interval d = abs_difference(levy_closed(cf), levy_from_denominator(g));
    EXPECT_LT(d.hi().to_double(), 1e-30);
  }
}

TEST(LevyFromDenominatorTest, RequiresCertifiedRoot) {
  EXPECT_TRUE(vmin_certified(IntPoly{1, -1, -1}));
  EXPECT_TRUE(vmin_certified(IntPoly{1, -4, 1}));
  EXPECT_FALSE(vmin_certified(IntPoly{1, 1, 1}));
  EXPECT_FALSE(vmin_certified(IntPoly{1, -3, 5}));
}

TEST(LevyEmpiricalTest, SmallAndLargeIndex) {
  PrecisionReal zero = levy_empirical(make_cf({1}), 1);
  EXPECT_EQ(zero.to_double(), 0.0);
  for (auto cf : {make_cf({1}), make_cf({2})}) {
    Interval gap = abs_difference(levy_empirical(cf, 1000), levy_closed(cf));
    EXPECT_LE(gap.hi().to_double(), 5e-3);
  }
}

TEST(LevyReferenceTest, ValueAndNesting) {
  PrecisionReal r64 = levy_reference(64);
  EXPECT_LT(distance(r64, "1.18656911041562545282"), 1e-18);
  EXPECT_GT(r64.to_double(), 1.18);
  EXPECT_LT(r64.to_double(), 1.19);
  PrecisionReal r128 = levy_reference(128);
  EXPECT_GE(mpfr_cmp(r128.enclosure().lo().get(), r64.enclosure().lo().get()), 0);
  EXPECT_LE(mpfr_cmp(r128.enclosure().hi().get(), r64.enclosure().hi().get()), 0);
}

TEST(IntervalTest, OutwardRounding) {
  Interval two = Interval::exact(2, 64);
  Interval s = two.sqrt();
  EXPECT_LT(mpfr_cmp(s.lo().get(), s.hi().get()), 0);
  Interval sq = s * s;
  EXPECT_LE(mpfr_cmp_ui(sq.lo().get(), 2), 0);
  EXPECT_GE(mpfr_cmp_ui(sq.hi().get(), 2), 0);
}
