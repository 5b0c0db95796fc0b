#pragma once

#include <string>

#include "quadcf/exact/bigint.hpp"

namespace quadcf {

// (P + sqrt(D)) / Q, normalised so that Q | D - P^2, D > 0 non-square, Q != 0.
struct QuadraticSurd {
  BigInt P, Q, D;

  friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;
  std::string to_string() const;
};

// Scales by |Q| so that the divisibility invariant holds:
// (P, Q, D) -> (P|Q|, Q|Q|, D Q^2). Throws on Q = 0 or square D.
QuadraticSurd normalize_surd(const BigInt& P, const BigInt& Q, const BigInt& D);

bool is_normalized(const QuadraticSurd& s);

BigInt floor(const QuadraticSurd& s);

// r + s sqrt(D) with rational r, s; D is fixed per value.
class QuadraticNumber {
 public:
  QuadraticNumber(Rational r, Rational s, BigInt D);
  static QuadraticNumber from_surd(const QuadraticSurd& x);

  const Rational& rational_part() const { return r_; }
  const Rational& surd_part() const { return s_; }
  const BigInt& radicand() const { return D_; }

  int sign() const;
  bool is_zero() const { return r_ == 0 && s_ == 0; }
  QuadraticNumber conjugate() const { return {r_, -s_, D_}; }

  friend QuadraticNumber operator+(const QuadraticNumber& a, const QuadraticNumber& b);
  friend QuadraticNumber operator-(const QuadraticNumber& a, const QuadraticNumber& b);
  friend QuadraticNumber operator*(const QuadraticNumber& a, const QuadraticNumber& b);
  friend QuadraticNumber operator/(const QuadraticNumber& a, const QuadraticNumber& b);
  friend bool operator==(const QuadraticNumber& a, const QuadraticNumber& b) {
    return a.r_ == b.r_ && a.s_ == b.s_ && a.D_ == b.D_;
  }

  QuadraticNumber operator+(const Rational& q) const { return {r_ + q, s_, D_}; }
  QuadraticNumber operator*(const Rational& q) const { return {r_ * q, s_ * q, D_}; }

  std::string to_string() const;

 private:
  void require_same_field(const QuadraticNumber& o) const;
  Rational r_, s_;
  BigInt D_;
};

}  // namespace quadcf
