#include "quadcf/cfrac/continued_fraction.hpp"

#include <algorithm>
#include <map>

#include "quadcf/cfrac/convergents.hpp"
#include "quadcf/error.hpp"

namespace quadcf {

const BigInt& ContinuedFraction::quotient(std::size_t n) const {
  if (n == 0) return a0;
  if (n <= pre.size()) return pre[n - 1];
  return period[(n - pre.size() - 1) % period.size()];
}

static std::string join(const std::vector<BigInt>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].get_str();
  }
  return out;
}

std::string ContinuedFraction::to_string() const {
  return "[" + a0.get_str() + "; " + join(pre) + (pre.empty() ? "" : ", ") + "(" + join(period) + ")]";
}

void validate(const ContinuedFraction& cf) {
  if (cf.period.empty()) throw ComputationError("empty period");
  for (const auto& a : cf.pre) {
    if (a < 1) throw ComputationError("partial quotient below 1");
  }
  for (const auto& a : cf.period) {
    if (a < 1) throw ComputationError("partial quotient below 1");
  }
}

static SurdState step(const SurdState& s, const BigInt& a, const BigInt& D) {
  BigInt P = a * s.Q - s.P;
  BigInt Q = (D - P * P) / s.Q;
  return {P, Q};
}

ContinuedFraction expand_surd(const QuadraticSurd& s, std::size_t max_steps) {
  if (!is_normalized(s)) throw ComputationError("surd is not normalised");
  ContinuedFraction cf;
  cf.a0 = floor(s);
  SurdState st = step({s.P, s.Q}, cf.a0, s.D);
  std::map<SurdState, std::size_t> seen;
  std::vector<BigInt> quotients;
  for (std::size_t i = 1;; ++i) {
    auto [it, fresh] = seen.emplace(st, i);
    if (!fresh) {
      std::size_t j = it->second;
      cf.pre.assign(quotients.begin(), quotients.begin() + static_cast<long>(j - 1));
      cf.period.assign(quotients.begin() + static_cast<long>(j - 1), quotients.end());
      return cf;
    }
    if (i > max_steps) throw BudgetExceeded("period not found within budget", max_steps);
    BigInt a = floor(QuadraticSurd{st.P, st.Q, s.D});
    quotients.push_back(a);
    st = step(st, a, s.D);
  }
}

ContinuedFraction minimize(const ContinuedFraction& cf) {
  validate(cf);
  ContinuedFraction out = cf;
  const std::size_t l = out.period.size();
  for (std::size_t d = 1; d <= l; ++d) {
    if (l % d) continue;
    bool ok = true;
    for (std::size_t i = d; i < l && ok; ++i) ok = out.period[i] == out.period[i - d];
    if (ok) {
      out.period.resize(d);
      break;
    }
  }
  while (!out.pre.empty() && out.pre.back() == out.period.back()) {
    std::rotate(out.period.rbegin(), out.period.rbegin() + 1, out.period.rend());
    out.pre.pop_back();
  }
  return out;
}

bool is_minimal(const ContinuedFraction& cf) { return minimize(cf) == cf; }

CanonicalIndices canonical_indices(const ContinuedFraction& cf) {
  ContinuedFraction m = minimize(cf);
  std::size_t l = m.ell(), k = m.pre.size();
  std::size_t work = std::max({std::size_t{2}, k + 1, l, k + l - 1});
  return {l, k, work};
}

SurdState state_at(const QuadraticSurd& s, std::size_t n) {
  if (!is_normalized(s)) throw ComputationError("surd is not normalised");
  SurdState st{s.P, s.Q};
  for (std::size_t i = 0; i < n; ++i) st = step(st, floor(QuadraticSurd{st.P, st.Q, s.D}), s.D);
  return st;
}

QuadraticSurd tail_surd(const QuadraticSurd& s, std::size_t k) {
  SurdState st = state_at(s, k + 1);
  return {-st.P, (s.D - st.P * st.P) / st.Q, s.D};
}

QuadraticSurd cf_value(const ContinuedFraction& cf) {
  validate(cf);
  // y = [a(k+1); a(k+2), ...] is the positive fixed point of the period product.
  BigInt m00 = 1, m01 = 0, m10 = 0, m11 = 1;
  for (const auto& a : cf.period) {
    BigInt n00 = m00 * a + m01, n10 = m10 * a + m11;
    m01 = m00;
    m11 = m10;
    m00 = n00;
    m10 = n10;
  }
  BigInt disc = (m00 - m11) * (m00 - m11) + 4 * m10 * m01;
  QuadraticNumber y(make_rational(m00 - m11, 2 * m10), make_rational(1, 2 * m10), disc);
  ConvergentTable t = convergents(cf, std::max<std::size_t>(cf.pre.size(), 1));
  std::size_t k = cf.pre.size();
  QuadraticNumber theta_k = QuadraticNumber(Rational(1), Rational(0), disc) / y;
  QuadraticNumber num = theta_k * Rational(k ? t.p[k - 1] : BigInt(1)) + Rational(t.p[k]);
  QuadraticNumber den = theta_k * Rational(k ? t.q[k - 1] : BigInt(0)) + Rational(t.q[k]);
  QuadraticNumber x = num / den + Rational(cf.a0);
  // x = r + s sqrt(disc) = (P + sqrt D)/Q with Q carrying the sign of s.
  BigInt Q;
  mpz_lcm(Q.get_mpz_t(), x.rational_part().get_den_mpz_t(), x.surd_part().get_den_mpz_t());
  if (x.surd_part() < 0) Q = -Q;
  Rational P = x.rational_part() * Rational(Q);
  Rational S = x.surd_part() * Rational(Q);
  return normalize_surd(P.get_num(), Q, S.get_num() * S.get_num() * disc);
}

}  // namespace quadcf
