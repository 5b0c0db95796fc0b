#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace quadcf {

using BigInt = mpz_class;
using Rational = mpq_class;

int sign(const BigInt& x);
int sign(const Rational& x);

BigInt isqrt(const BigInt& n);
bool is_perfect_square(const BigInt& n);

BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt pow(const BigInt& base, unsigned long exp);
BigInt gcd(const BigInt& a, const BigInt& b);

// Canonical n/d, d != 0.
Rational make_rational(const BigInt& n, const BigInt& d);

// Accepts an optional sign followed by decimal digits.
BigInt parse_bigint(std::string_view text);

std::string to_string(const BigInt& x);
std::string to_string(const Rational& x);

}  // namespace quadcf
