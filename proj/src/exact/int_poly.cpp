#include "quadcf/exact/int_poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "quadcf/exact/modular.hpp"

namespace quadcf {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(const BigInt& c, std::size_t degree) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt IntPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }

const BigInt& IntPoly::leading() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return c_.back();
}

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

Rational IntPoly::eval(const Rational& x) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + Rational(*it);
  return r;
}

int IntPoly::sign_at(const Rational& x) const {
  // Homogenised Horner over integers: den^deg * p(num/den).
  const BigInt& num = x.get_num();
  const BigInt& den = x.get_den();
  BigInt r = 0, dpow = 1;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    r = r * num + *it * dpow;
    dpow *= den;
  }
  return sgn(r);
}

IntPoly IntPoly::shifted(std::size_t n) const {
  if (is_zero()) return {};
  std::vector<BigInt> v(n);
  v.insert(v.end(), c_.begin(), c_.end());
  return IntPoly(std::move(v));
}

IntPoly IntPoly::compose_power(std::size_t l) const {
  if (l == 0) throw std::invalid_argument("compose_power with l = 0");
  if (is_zero()) return {};
  std::vector<BigInt> v((c_.size() - 1) * l + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i * l] = c_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::reflected_sign() const {
  std::vector<BigInt> v = c_;
  for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::truncated(std::size_t n) const {
  std::vector<BigInt> v(c_.begin(), c_.begin() + std::min(n, c_.size()));
  return IntPoly(std::move(v));
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<BigInt> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(v));
}

IntPoly IntPoly::scaled(const BigInt& c) const {
  std::vector<BigInt> v = c_;
  for (auto& x : v) x *= c;
  return IntPoly(std::move(v));
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const auto& x : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (leading() < 0) g = -g;
  std::vector<BigInt> v = c_;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(v));
}

std::size_t IntPoly::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != 0) return i;
  }
  return 0;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly IntPoly::operator-() const {
  std::vector<BigInt> v = c_;
  for (auto& x : v) x = -x;
  return IntPoly(std::move(v));
}

void IntPoly::add_product(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return;
  std::size_t n = a.c_.size() + b.c_.size() - 1;
  if (c_.size() < n) c_.resize(n);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      mpz_addmul(c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
  }
  trim();
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  r.add_product(a, b);
  return r;
}

std::string IntPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    BigInt mag = abs(c_[i]);
    if (out.empty()) {
      if (c_[i] < 0) out += "-";
    } else {
      out += c_[i] < 0 ? " - " : " + ";
    }
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero polynomial");
  std::vector<BigInt> r = a.coeffs();
  const auto& bc = b.coeffs();
  const BigInt& lb = b.leading();
  const std::size_t nb = bc.size();
  long extra = a.degree() - b.degree() + 1;
  while (!r.empty() && r.size() >= nb) {
    BigInt f = r.back();
    std::size_t off = r.size() - nb;
    for (auto& x : r) x *= lb;
    for (std::size_t i = 0; i < nb; ++i) r[off + i] -= f * bc[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
    --extra;
  }
  // Keep the sign convention lc(b)^(deg a - deg b + 1) * a = q*b + r.
  if (extra > 0) {
    BigInt m = pow(lb, static_cast<unsigned long>(extra));
    for (auto& x : r) x *= m;
  }
  return IntPoly(std::move(r));
}

IntPoly exact_quotient(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw std::domain_error("inexact polynomial division");
  std::vector<BigInt> r = a.coeffs();
  const auto& bc = b.coeffs();
  const BigInt& lb = b.leading();
  std::vector<BigInt> q(r.size() - bc.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    BigInt& top = r[k + bc.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) {
      throw std::domain_error("inexact polynomial division");
    }
    BigInt f;
    mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (std::size_t i = 0; i < bc.size(); ++i) r[k + i] -= f * bc[i];
    q[k] = f;
  }
  for (const auto& x : r) {
    if (x != 0) throw std::domain_error("inexact polynomial division");
  }
  return IntPoly(std::move(q));
}

static bool coprime_mod_some_prime(const IntPoly& a, const IntPoly& b) {
  int tried = 0;
  for (std::uint64_t p : modular::primes()) {
    if (modular::reduce(a.leading(), p) == 0 || modular::reduce(b.leading(), p) == 0) continue;
    modular::PolyMod am, bm;
    for (const auto& x : a.coeffs()) am.push_back(modular::reduce(x, p));
    for (const auto& x : b.coeffs()) bm.push_back(modular::reduce(x, p));
    if (modular::gcd(am, bm, p).size() == 1) return true;
    if (++tried == 2) break;
  }
  return false;
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  if (a.degree() == 0 || b.degree() == 0) return IntPoly{1};
  // Degree of the gcd mod p bounds the true degree when p misses both leading coefficients.
  if (coprime_mod_some_prime(a, b)) return IntPoly{1};
  IntPoly x = a.primitive_part(), y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive_part();
  }
  return x.primitive_part();
}

}  // namespace quadcf
