#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "quadcf/exact/int_poly.hpp"

namespace quadcf {

// num/den over Z with den(0) != 0, i.e. a power series at the origin.
class RationalFunctionZ {
 public:
  RationalFunctionZ() : den_{1} {}
  RationalFunctionZ(IntPoly num, IntPoly den);

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }

  // Lowest terms with den(0) > 0.
  RationalFunctionZ reduced() const;
  bool is_reduced() const;

  // Same function, compared by cross multiplication.
  bool equivalent(const RationalFunctionZ& o) const;

  RationalFunctionZ scaled(const BigInt& c) const { return {num_.scaled(c), den_}; }

  friend RationalFunctionZ operator+(const RationalFunctionZ& a, const RationalFunctionZ& b);
  friend RationalFunctionZ operator-(const RationalFunctionZ& a, const RationalFunctionZ& b);
  friend RationalFunctionZ operator*(const RationalFunctionZ& a, const RationalFunctionZ& b);
  friend bool operator==(const RationalFunctionZ& a, const RationalFunctionZ& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string(char var = 'z') const;

 private:
  IntPoly num_, den_;
};

RationalFunctionZ reduce(const RationalFunctionZ& f);

// First n Maclaurin coefficients; integral whenever den(0) = +-1.
std::vector<Rational> series_coeffs(const RationalFunctionZ& f, std::size_t n);
std::vector<BigInt> integer_series_coeffs(const RationalFunctionZ& f, std::size_t n);

}  // namespace quadcf
