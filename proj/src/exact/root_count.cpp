#include "quadcf/exact/root_count.hpp"

#include <stdexcept>
#include <vector>

namespace quadcf {

static std::size_t sign_variations(const std::vector<BigInt>& c) {
  std::size_t n = 0;
  int last = 0;
  for (const auto& x : c) {
    int s = sgn(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++n;
    last = s;
  }
  return n;
}

std::size_t descartes_bound_unit_interval(const IntPoly& p) {
  if (p.is_zero()) throw std::domain_error("root bound of zero polynomial");
  // Reverse, then Taylor shift by one.
  std::vector<BigInt> c(p.coeffs().rbegin(), p.coeffs().rend());
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) c[j - 1] += c[j];
  }
  // After the shift c[i] is the coefficient of y^i of p_rev(y + 1).
  return sign_variations(c);
}

static std::vector<IntPoly> sturm_sequence(const IntPoly& p) {
  std::vector<IntPoly> seq{p, p.derivative()};
  while (!seq.back().is_zero() && seq.back().degree() > 0) {
    const IntPoly& a = seq[seq.size() - 2];
    const IntPoly& b = seq.back();
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    // prem = lc(b)^(da-db+1) * rem; restore the sign of -rem.
    long e = a.degree() - b.degree() + 1;
    bool flip = !(b.leading() < 0 && e % 2 == 1);
    BigInt c = r.content();
    std::vector<BigInt> v = r.coeffs();
    for (auto& x : v) {
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
      if (flip) x = -x;
    }
    seq.emplace_back(std::move(v));
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

static std::size_t variations_at(const std::vector<IntPoly>& seq, const Rational& x) {
  std::size_t n = 0;
  int last = 0;
  for (const auto& q : seq) {
    int s = q.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++n;
    last = s;
  }
  return n;
}

std::size_t sturm_count(const IntPoly& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw std::domain_error("root count of zero polynomial");
  if (p.degree() == 0) return 0;
  // Square-free part keeps the sequence free of a common factor at the endpoints.
  IntPoly g = gcd(p, p.derivative());
  IntPoly sf = g.degree() > 0 ? exact_quotient(p, g) : p;
  auto seq = sturm_sequence(sf);
  std::size_t va = variations_at(seq, a), vb = variations_at(seq, b);
  return va - vb;
}

bool has_root_in_open_unit_interval(const IntPoly& p) {
  if (p.is_zero()) return true;
  IntPoly q(std::vector<BigInt>(p.coeffs().begin() + p.valuation(), p.coeffs().end()));
  if (q.degree() <= 0) return false;
  if (descartes_bound_unit_interval(q) == 0) return false;
  std::size_t n = sturm_count(q, Rational(0), Rational(1));
  if (q.eval(BigInt(1)) == 0) --n;
  return n > 0;
}

}  // namespace quadcf
