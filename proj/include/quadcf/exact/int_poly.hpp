#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "quadcf/exact/bigint.hpp"

namespace quadcf {

// Dense polynomial over Z in one variable; coefficient i multiplies z^i.
// The coefficient vector never carries trailing zeros, so zero is empty.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const BigInt& c);
  static IntPoly monomial(const BigInt& c, std::size_t degree);

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }
  const std::vector<BigInt>& coeffs() const { return c_; }
  // Zero beyond the degree.
  BigInt coeff(std::size_t i) const;
  const BigInt& leading() const;

  BigInt eval(const BigInt& x) const;
  Rational eval(const Rational& x) const;
  int sign_at(const Rational& x) const;

  IntPoly shifted(std::size_t n) const;         // z^n * p
  IntPoly compose_power(std::size_t l) const;   // p(z^l)
  IntPoly reflected_sign() const;               // p(-z)
  IntPoly truncated(std::size_t n) const;       // terms of degree < n
  IntPoly derivative() const;
  IntPoly scaled(const BigInt& c) const;

  BigInt content() const;
  IntPoly primitive_part() const;
  // Index of the lowest nonzero coefficient; 0 for the zero polynomial.
  std::size_t valuation() const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly operator-() const;
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  // Adds a*b into this polynomial.
  void add_product(const IntPoly& a, const IntPoly& b);

  std::string to_string(char var = 'z') const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);
// Throws std::domain_error unless b divides a over Z.
IntPoly exact_quotient(const IntPoly& a, const IntPoly& b);
// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

}  // namespace quadcf
