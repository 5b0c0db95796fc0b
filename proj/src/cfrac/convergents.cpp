#include "quadcf/cfrac/convergents.hpp"

#include <stdexcept>

namespace quadcf {

ConvergentTable convergents(std::span<const BigInt> a) {
  ConvergentTable t;
  t.a.assign(a.begin(), a.end());
  t.p = {0};
  t.q = {1};
  if (a.empty()) return t;
  t.p.push_back(1);
  t.q.push_back(a[0]);
  for (std::size_t n = 2; n <= a.size(); ++n) {
    t.p.push_back(a[n - 1] * t.p[n - 1] + t.p[n - 2]);
    t.q.push_back(a[n - 1] * t.q[n - 1] + t.q[n - 2]);
  }
  return t;
}

ConvergentTable convergents(const ContinuedFraction& cf, std::size_t depth) {
  if (depth < 1) throw std::invalid_argument("convergent depth must be at least 1");
  std::vector<BigInt> a;
  a.reserve(depth);
  for (std::size_t n = 1; n <= depth; ++n) a.push_back(cf.quotient(n));
  return convergents(a);
}

BigInt continuant(std::span<const BigInt> x) {
  BigInt prev = 0, cur = 1;
  for (const auto& v : x) {
    BigInt next = v * cur + prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

ContinuantTable::ContinuantTable(std::span<const BigInt> a) : n_(a.size()), rows_(a.size() + 1) {
  for (std::size_t j = 0; j <= n_; ++j) {
    auto& row = rows_[j];
    row.reserve(n_ - j + 2);
    row.emplace_back(0);
    row.emplace_back(1);
    for (std::size_t m = 1; j + m <= n_; ++m) row.push_back(a[j + m - 1] * row[m] + row[m - 1]);
  }
}

const BigInt& ContinuantTable::A(long m, std::size_t j) const {
  if (m < -1 || j > n_ || static_cast<long>(j) + m > static_cast<long>(n_)) {
    throw std::out_of_range("continuant index out of range");
  }
  return rows_[j][static_cast<std::size_t>(m + 1)];
}

}  // namespace quadcf
