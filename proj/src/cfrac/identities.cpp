#include "quadcf/cfrac/identities.hpp"

#include <sstream>

namespace quadcf {

bool CheckReport::all_passed() const {
  for (const auto& r : records) {
    if (!r.pass) return false;
  }
  return true;
}

void CheckReport::append(const CheckReport& other) {
  records.insert(records.end(), other.records.begin(), other.records.end());
}

std::string CheckReport::summary() const {
  std::ostringstream out;
  for (const auto& r : records) {
    out << (r.pass ? "ok   " : "FAIL ") << r.name << " [" << r.range << "] cases=" << r.cases;
    if (!r.pass) out << " first failure: " << r.first_failure;
    out << "\n";
  }
  return out.str();
}

static BigInt sign_pow(long e) { return (e % 2 == 0) ? BigInt(1) : BigInt(-1); }

static std::string at(const char* label, long n) { return std::string(label) + "=" + std::to_string(n); }

static std::string at(long n, long m) { return "n=" + std::to_string(n) + " m=" + std::to_string(m); }

// [0; x1, ..., xr] with the last entry optionally shifted by z.
static Rational finite_cf(const std::vector<BigInt>& x, const Rational& z = Rational(0)) {
  if (x.empty()) return Rational(0);
  Rational v = Rational(x.back()) + z;
  for (std::size_t i = x.size() - 1; i-- > 0;) v = Rational(x[i]) + 1 / v;
  return 1 / v;
}

CheckReport identity_report(const ConvergentTable& t) {
  const long N = static_cast<long>(t.depth());
  const auto& p = t.p;
  const auto& q = t.q;
  auto a = [&](long n) -> const BigInt& { return t.quotient(static_cast<std::size_t>(n)); };
  ContinuantTable A(t.a);
  CheckReport rep;

  {
    CheckBuilder c("lagrange", "1<=n<=N");
    for (long n = 1; n <= N; ++n) {
      c.expect(p[n - 1] * q[n] - p[n] * q[n - 1] == sign_pow(n), [&] { return at("n", n); });
    }
    rep.records.push_back(c.done());
  }
  {
    CheckBuilder cp("reversed_word_p", "1<=n<=N");
    CheckBuilder cq("reversed_word_q", "1<=n<=N");
    for (long n = 1; n <= N; ++n) {
      std::vector<BigInt> wp, wq;
      for (long i = n; i >= 2; --i) wp.push_back(a(i));
      wq = wp;
      wq.push_back(a(1));
      cp.expect(make_rational(p[n - 1], p[n]) == finite_cf(wp), [&] { return at("n", n); });
      cq.expect(make_rational(q[n - 1], q[n]) == finite_cf(wq), [&] { return at("n", n); });
    }
    rep.records.push_back(cp.done());
    rep.records.push_back(cq.done());
  }
  {
    CheckBuilder c("mobius_tail", "1<=n<=N, z in {1/2,1,2}");
    const Rational zs[] = {Rational(1, 2), Rational(1), Rational(2)};
    for (long n = 1; n <= N; ++n) {
      std::vector<BigInt> w(t.a.begin(), t.a.begin() + n);
      for (const auto& z : zs) {
        Rational lhs = (Rational(p[n - 1]) * z + Rational(p[n])) / (Rational(q[n - 1]) * z + Rational(q[n]));
        c.expect(lhs == finite_cf(w, z), [&] { return at("n", n) + " z=" + z.get_str(); });
      }
    }
    rep.records.push_back(c.done());
  }
  {
    CheckBuilder first("continuant_split_first", "m>=2, j>=0, j+m<=N");
    CheckBuilder last("continuant_split_last", "m>=2, j>=0, j+m<=N");
    for (long j = 0; j <= N; ++j) {
      for (long m = 2; j + m <= N; ++m) {
        first.expect(A.A(m, j) == a(j + 1) * A.A(m - 1, j + 1) + A.A(m - 2, j + 2), [&] { return at(j, m); });
        last.expect(A.A(m, j) == a(j + m) * A.A(m - 1, j) + A.A(m - 2, j), [&] { return at(j, m); });
      }
    }
    rep.records.push_back(first.done());
    rep.records.push_back(last.done());
  }
  {
    CheckBuilder c("convergent_forward", "n>=1, m>=0, n+m+1<=N");
    for (long n = 1; n <= N; ++n) {
      for (long m = 0; n + m + 1 <= N; ++m) {
        bool ok = p[n + m + 1] == p[n] * A.A(m + 1, n) + p[n - 1] * A.A(m, n + 1) &&
                  q[n + m + 1] == q[n] * A.A(m + 1, n) + q[n - 1] * A.A(m, n + 1);
        c.expect(ok, [&] { return at(n, m); });
      }
    }
    rep.records.push_back(c.done());
  }
  {
    CheckBuilder c("convergent_backward", "m>=1, n-m-1>=0, n<=N");
    for (long n = 2; n <= N; ++n) {
      for (long m = 1; n - m - 1 >= 0; ++m) {
        BigInt s = sign_pow(m + 1);
        bool ok = s * p[n - m - 1] == p[n] * A.A(m - 1, n - m) - p[n - 1] * A.A(m, n - m) &&
                  s * q[n - m - 1] == q[n] * A.A(m - 1, n - m) - q[n - 1] * A.A(m, n - m);
        c.expect(ok, [&] { return at(n, m); });
      }
    }
    rep.records.push_back(c.done());
  }
  {
    CheckBuilder c("trace_identity", "m>=1, n-m-2>=0, n<=N");
    for (long n = 3; n <= N; ++n) {
      for (long m = 1; n - m - 2 >= 0; ++m) {
        BigInt lhs = A.A(m - 1, n - m) + A.A(m + 1, n - m - 1);
        BigInt rhs = sign_pow(n - m - 1) * (q[n - m - 1] * p[n - 1] - p[n - m - 1] * q[n - 1] -
                                           q[n - m - 2] * p[n] + p[n - m - 2] * q[n]);
        Mobius2x2 prod;
        for (long i = n - m; i <= n; ++i) prod = prod * quotient_matrix(a(i));
        c.expect(lhs == rhs && lhs == prod.trace(), [&] { return at(n, m); });
      }
    }
    rep.records.push_back(c.done());
  }
  return rep;
}

CheckReport identity_report(const ConvergentTable& t, const ABTable& ab) {
  CheckReport rep = identity_report(t);
  const long N = static_cast<long>(t.depth());
  const long l = static_cast<long>(ab.ell());
  const long k = static_cast<long>(ab.k());
  ContinuantTable A(t.a);
  {
    CheckBuilder c("periodic_table", "k<=n, -1<=m<=l+1, n+m<=N");
    for (long n = k; n <= N; ++n) {
      for (long m = -1; m <= l + 1 && n + m <= N; ++m) {
        c.expect(ab.A(m, n) == A.A(m, static_cast<std::size_t>(n)), [&] { return at(n, m); });
      }
    }
    rep.records.push_back(c.done());
  }
  {
    CheckBuilder c("ab_recurrence", "residues mod l, 1<=m<=l+1");
    for (long n = k; n < k + l; ++n) {
      for (long m = 1; m <= l + 1; ++m) {
        bool ok = ab.A(m, n) == ab.B(m - 1, n + 1) + ab.next_quotient(n) * ab.A(m - 1, n + 1) &&
                  ab.B(m, n) == ab.A(m - 1, n + 1);
        c.expect(ok, [&] { return at(n, m); });
      }
    }
    rep.records.push_back(c.done());
  }
  if (N >= k + l) {
    CheckBuilder c("period_trace", "n=k+l, m=l-1");
    const auto& p = t.p;
    const auto& q = t.q;
    BigInt delta = q[k] * p[k + l - 1] - p[k] * q[k + l - 1] - q[k - 1] * p[k + l] + p[k - 1] * q[k + l];
    BigInt tr = ab.A(l - 2, k + 1) + ab.A(l, k);
    c.expect(sign_pow(k) * delta == tr, [&] { return "delta=" + delta.get_str() + " trace=" + tr.get_str(); });
    rep.records.push_back(c.done());
  }
  return rep;
}

}  // namespace quadcf
