#include <gtest/gtest.h>

#include "quadcf/error.hpp"
#include "quadcf/exact/quadratic.hpp"
#include "quadcf/exact/rational_function.hpp"
#include "quadcf/exact/root_count.hpp"

using namespace quadcf;

namespace {

std::vector<Rational> rationals(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST(BigIntTest, SquareRootAndFloorDivision) {
  EXPECT_EQ(isqrt(BigInt(99)), 9);
  EXPECT_EQ(isqrt(BigInt(100)), 10);
  EXPECT_TRUE(is_perfect_square(BigInt(144)));
  EXPECT_FALSE(is_perfect_square(BigInt(2)));
  EXPECT_EQ(floor_div(BigInt(-7), BigInt(2)), -4);
  EXPECT_EQ(floor_div(BigInt(7), BigInt(-2)), -4);
  EXPECT_EQ(parse_bigint("-123456789012345678901234567890").get_str(), "-123456789012345678901234567890");
  EXPECT_THROW(parse_bigint("12a"), std::invalid_argument);
}

TEST(BigIntTest, RationalIsCanonical) {
  Rational r = make_rational(6, -4);
  EXPECT_EQ(r.get_num(), -3);
  EXPECT_EQ(r.get_den(), 2);
  EXPECT_THROW(make_rational(1, 0), std::domain_error);
}

TEST(IntPolyTest, TrimsAndMultiplies) {
  IntPoly a{1, -1, -1, 0, 0};
  EXPECT_EQ(a.degree(), 2);
  EXPECT_TRUE((IntPoly{0, 0}.is_zero()));
  EXPECT_EQ((IntPoly{1, 1} * IntPoly{1, -1}), (IntPoly{1, 0, -1}));
  EXPECT_EQ((IntPoly{1, 2} - IntPoly{1, 2}).degree(), -1);
  EXPECT_EQ(IntPoly({1, -4, 1}).compose_power(2), (IntPoly{1, 0, -4, 0, 1}));
  EXPECT_EQ(IntPoly({1, 2}).shifted(2), (IntPoly{0, 0, 1, 2}));
  EXPECT_EQ(IntPoly({1, -1, -1}).to_string(), "1 - z - z^2");
  EXPECT_EQ(IntPoly({0, 1, 2, -1}).to_string(), "z + 2*z^2 - z^3");
}

TEST(IntPolyTest, GcdAndExactQuotient) {
  IntPoly f = IntPoly{1, 1} * IntPoly{2, 0, 3};
  IntPoly g = IntPoly{1, 1} * IntPoly{-5, 7};
  EXPECT_EQ(gcd(f, g), (IntPoly{1, 1}));
  EXPECT_EQ(exact_quotient(f, IntPoly{1, 1}), (IntPoly{2, 0, 3}));
  EXPECT_THROW(exact_quotient(IntPoly{1, 0, 1}, IntPoly{1, 1}), std::domain_error);
  EXPECT_EQ(gcd(IntPoly{1, -1, -1}, IntPoly{0, 1}), (IntPoly{1}));
  EXPECT_EQ(gcd(IntPoly{2, 4}, IntPoly{}), (IntPoly{1, 2}));
}

TEST(IntPolyTest, PseudoRemainderIdentity) {
  IntPoly a{3, 0, 5, 7, 2}, b{1, 0, 3};
  IntPoly r = pseudo_remainder(a, b);
  EXPECT_LT(r.degree(), b.degree());
  // lc(b)^(deg a - deg b + 1) a - r is divisible by b.
  IntPoly lhs = a.scaled(pow(b.leading(), 3)) - r;
  EXPECT_NO_THROW(exact_quotient(lhs, b));
}

TEST(RationalFunctionTest, SeriesCoefficients) {
  RationalFunctionZ fib(IntPoly{1}, IntPoly{1, -1, -1});
  EXPECT_EQ(series_coeffs(fib, 5), rationals({1, 1, 2, 3, 5}));
  RationalFunctionZ pell(IntPoly{1}, IntPoly{1, -2, -1});
  EXPECT_EQ(series_coeffs(pell, 5), rationals({1, 2, 5, 12, 29}));
  RationalFunctionZ poly(IntPoly{4, 0, 3}, IntPoly{1});
  EXPECT_EQ(series_coeffs(poly, 5), rationals({4, 0, 3, 0, 0}));
  RationalFunctionZ half(IntPoly{1}, IntPoly{2});
  EXPECT_EQ(series_coeffs(half, 2)[0], Rational(1, 2));
}

TEST(RationalFunctionTest, NotAPowerSeries) {
  try {
    RationalFunctionZ bad(IntPoly{1}, IntPoly{0, 1});
    FAIL();
  } catch (const ComputationError& e) {
    EXPECT_STREQ(e.what(), "not a power series at zero");
  }
}

TEST(RationalFunctionTest, Reduce) {
  RationalFunctionZ a(IntPoly{0, 1, 0, -1}, IntPoly{1, -1});
  EXPECT_EQ(reduce(a), RationalFunctionZ(IntPoly{0, 1, 1}, IntPoly{1}));
  RationalFunctionZ b(IntPoly{2, 2}, IntPoly{2});
  EXPECT_EQ(reduce(b), RationalFunctionZ(IntPoly{1, 1}, IntPoly{1}));
  // Golden-mean raw numerator p0 + (p1 - p0) z + (p2 - p1 - p0) z^2 with p = 0, 1, 1.
  RationalFunctionZ g(IntPoly{0, 1, 0}, IntPoly{1, -1, -1});
  EXPECT_EQ(reduce(g), RationalFunctionZ(IntPoly{0, 1}, IntPoly{1, -1, -1}));
  RationalFunctionZ neg(IntPoly{3}, IntPoly{-1, 1});
  EXPECT_EQ(reduce(neg), RationalFunctionZ(IntPoly{-3}, IntPoly{1, -1}));
  EXPECT_TRUE(reduce(a).is_reduced());
  EXPECT_TRUE(a.equivalent(reduce(a)));
}

TEST(QuadraticTest, NormalizeSurd) {
  EXPECT_EQ(normalize_surd(0, 1, 2), (QuadraticSurd{0, 1, 2}));
  EXPECT_EQ(normalize_surd(1, 3, 5), (QuadraticSurd{3, 9, 45}));
  EXPECT_EQ(normalize_surd(-1, 2, 5), (QuadraticSurd{-2, 4, 20}));
  EXPECT_TRUE(is_normalized(normalize_surd(7, -6, 13)));
  EXPECT_THROW(normalize_surd(1, 0, 5), ComputationError);
  EXPECT_THROW(normalize_surd(1, 2, 9), ComputationError);
}

TEST(QuadraticTest, ExactFloor) {
  EXPECT_EQ(floor(normalize_surd(0, 1, 2)), 1);
  EXPECT_EQ(floor(normalize_surd(-1, 2, 5)), 0);
  EXPECT_EQ(floor(normalize_surd(1, 3, 5)), 1);
  EXPECT_EQ(floor(normalize_surd(0, -1, 2)), -2);
  EXPECT_EQ(floor(normalize_surd(-5, 1, 7)), -3);
}

TEST(QuadraticTest, FieldArithmetic) {
  QuadraticNumber phi(Rational(1, 2), Rational(1, 2), 5);
  QuadraticNumber one(Rational(1), Rational(0), 5);
  // phi^2 = phi + 1.
  EXPECT_EQ(phi * phi, phi + one);
  EXPECT_EQ((one / phi), phi - one);
  EXPECT_EQ(phi.sign(), 1);
  EXPECT_EQ((one - phi * phi).sign(), -1);
  QuadraticNumber tiny(Rational(-1414213), Rational(1000000), 2);
  EXPECT_EQ(tiny.sign(), 1);
}

TEST(RootCountTest, UnitInterval) {
  // (2z - 1)(z + 3) has one root in (0,1).
  IntPoly p = IntPoly{-1, 2} * IntPoly{3, 1};
  EXPECT_TRUE(has_root_in_open_unit_interval(p));
  EXPECT_EQ(sturm_count(p, Rational(0), Rational(1)), 1u);
  EXPECT_FALSE(has_root_in_open_unit_interval(IntPoly{1, 1, 1}));
  // Root only at z = 1.
  EXPECT_FALSE(has_root_in_open_unit_interval(IntPoly{-1, 1}));
  // Double root at 1/3 and a zero at the origin.
  IntPoly q = IntPoly{0, 1} * IntPoly{-1, 3} * IntPoly{-1, 3};
  EXPECT_TRUE(has_root_in_open_unit_interval(q));
  EXPECT_EQ(descartes_bound_unit_interval(IntPoly{1, -1, -1}), 1u);
}
