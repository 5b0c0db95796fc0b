#include "quadcf/exact/quadratic.hpp"

#include <stdexcept>
#include <utility>

#include "quadcf/error.hpp"

namespace quadcf {

std::string QuadraticSurd::to_string() const {
  return "(" + P.get_str() + "+sqrt(" + D.get_str() + "))/" + Q.get_str();
}

QuadraticSurd normalize_surd(const BigInt& P, const BigInt& Q, const BigInt& D) {
  if (Q == 0) throw ComputationError("invalid denominator");
  if (D <= 0 || is_perfect_square(D)) throw ComputationError(D <= 0 ? "not irrational: radicand must be positive" : "rational input");
  BigInt a = abs(Q);
  return {P * a, Q * a, D * a * a};
}

bool is_normalized(const QuadraticSurd& s) {
  if (s.Q == 0 || s.D <= 0 || is_perfect_square(s.D)) return false;
  BigInt r = s.D - s.P * s.P;
  return mpz_divisible_p(r.get_mpz_t(), s.Q.get_mpz_t()) != 0;
}

BigInt floor(const QuadraticSurd& s) {
  // floor((P + sqrt D)/Q) from r = isqrt(D), where r < sqrt D < r + 1.
  BigInt r = isqrt(s.D);
  if (s.Q > 0) return floor_div(s.P + r, s.Q);
  return floor_div(s.P + r + 1, s.Q);
}

QuadraticNumber::QuadraticNumber(Rational r, Rational s, BigInt D)
    : r_(std::move(r)), s_(std::move(s)), D_(std::move(D)) {
  if (D_ <= 0 || is_perfect_square(D_)) throw std::domain_error("radicand must be a positive non-square");
}

QuadraticNumber QuadraticNumber::from_surd(const QuadraticSurd& x) {
  return {make_rational(x.P, x.Q), make_rational(1, x.Q), x.D};
}

int QuadraticNumber::sign() const {
  int a = sgn(r_), b = sgn(s_);
  if (b == 0) return a;
  if (a == 0 || a == b) return b;
  // Opposite signs: compare r^2 with s^2 D.
  Rational lhs = r_ * r_;
  Rational rhs = s_ * s_ * Rational(D_);
  return lhs > rhs ? a : b;
}

void QuadraticNumber::require_same_field(const QuadraticNumber& o) const {
  if (D_ != o.D_) throw std::domain_error("mixed quadratic fields");
}

QuadraticNumber operator+(const QuadraticNumber& a, const QuadraticNumber& b) {
  a.require_same_field(b);
  return {a.r_ + b.r_, a.s_ + b.s_, a.D_};
}

QuadraticNumber operator-(const QuadraticNumber& a, const QuadraticNumber& b) {
  a.require_same_field(b);
  return {a.r_ - b.r_, a.s_ - b.s_, a.D_};
}

QuadraticNumber operator*(const QuadraticNumber& a, const QuadraticNumber& b) {
  a.require_same_field(b);
  Rational d(a.D_);
  return {a.r_ * b.r_ + a.s_ * b.s_ * d, a.r_ * b.s_ + a.s_ * b.r_, a.D_};
}

QuadraticNumber operator/(const QuadraticNumber& a, const QuadraticNumber& b) {
  a.require_same_field(b);
  Rational norm = b.r_ * b.r_ - b.s_ * b.s_ * Rational(b.D_);
  if (norm == 0) throw std::domain_error("division by zero in quadratic field");
  QuadraticNumber n = a * b.conjugate();
  return {n.r_ / norm, n.s_ / norm, a.D_};
}

std::string QuadraticNumber::to_string() const {
  return r_.get_str() + " + (" + s_.get_str() + ")*sqrt(" + D_.get_str() + ")";
}

}  // namespace quadcf
