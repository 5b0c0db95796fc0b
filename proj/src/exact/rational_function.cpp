#include "quadcf/exact/rational_function.hpp"

#include <stdexcept>
#include <utility>

#include "quadcf/error.hpp"

namespace quadcf {

RationalFunctionZ::RationalFunctionZ(IntPoly num, IntPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero() || den_.coeff(0) == 0) {
    throw ComputationError("not a power series at zero");
  }
}

RationalFunctionZ reduce(const RationalFunctionZ& f) {
  if (f.num().is_zero()) return {IntPoly{}, IntPoly{1}};
  IntPoly g = gcd(f.num(), f.den());
  IntPoly n = g.degree() > 0 ? exact_quotient(f.num(), g) : f.num();
  IntPoly d = g.degree() > 0 ? exact_quotient(f.den(), g) : f.den();
  BigInt c = gcd(n.content(), d.content());
  if (d.coeff(0) < 0) c = -c;
  if (c != 1) {
    std::vector<BigInt> nv = n.coeffs(), dv = d.coeffs();
    for (auto& x : nv) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    for (auto& x : dv) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    n = IntPoly(std::move(nv));
    d = IntPoly(std::move(dv));
  }
  return {std::move(n), std::move(d)};
}

RationalFunctionZ RationalFunctionZ::reduced() const { return reduce(*this); }

bool RationalFunctionZ::is_reduced() const { return reduce(*this) == *this; }

bool RationalFunctionZ::equivalent(const RationalFunctionZ& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

RationalFunctionZ operator+(const RationalFunctionZ& a, const RationalFunctionZ& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunctionZ operator-(const RationalFunctionZ& a, const RationalFunctionZ& b) {
  if (a.den_ == b.den_) return {a.num_ - b.num_, a.den_};
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunctionZ operator*(const RationalFunctionZ& a, const RationalFunctionZ& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

std::string RationalFunctionZ::to_string(char var) const {
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

std::vector<Rational> series_coeffs(const RationalFunctionZ& f, std::size_t n) {
  const auto& d = f.den().coeffs();
  Rational d0(d[0]);
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational acc(f.num().coeff(i));
    for (std::size_t j = 1; j < d.size() && j <= i; ++j) {
      if (d[j] != 0) acc -= Rational(d[j]) * out[i - j];
    }
    out[i] = acc / d0;
  }
  return out;
}

std::vector<BigInt> integer_series_coeffs(const RationalFunctionZ& f, std::size_t n) {
  const auto& d = f.den().coeffs();
  if (abs(d[0]) != 1) {
    std::vector<BigInt> out;
    for (const auto& q : series_coeffs(f, n)) {
      if (q.get_den() != 1) throw ComputationError("series coefficient is not integral");
      out.push_back(q.get_num());
    }
    return out;
  }
  std::vector<BigInt> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    BigInt acc = f.num().coeff(i);
    for (std::size_t j = 1; j < d.size() && j <= i; ++j) {
      if (d[j] != 0) mpz_submul(acc.get_mpz_t(), d[j].get_mpz_t(), out[i - j].get_mpz_t());
    }
    out[i] = d[0] == 1 ? acc : BigInt(-acc);
  }
  return out;
}

}  // namespace quadcf
