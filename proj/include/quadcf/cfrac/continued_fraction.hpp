#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "quadcf/exact/quadratic.hpp"

namespace quadcf {

// [a0; a1, ..., ak, overline{a(k+1), ..., a(k+l)}] with a_n >= 1 for n >= 1.
// pre holds a1..ak and period holds one full period.
struct ContinuedFraction {
  BigInt a0;
  std::vector<BigInt> pre;
  std::vector<BigInt> period;

  std::size_t ell() const { return period.size(); }
  // a_n for n >= 0.
  const BigInt& quotient(std::size_t n) const;
  std::string to_string() const;

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;
};

struct CanonicalIndices {
  std::size_t ell_min;
  std::size_t k_min;
  std::size_t k_work;

  friend bool operator==(const CanonicalIndices&, const CanonicalIndices&) = default;
};

struct SurdState {
  BigInt P, Q;
  friend bool operator==(const SurdState& x, const SurdState& y) { return x.P == y.P && x.Q == y.Q; }
  friend bool operator<(const SurdState& x, const SurdState& y) {
    int c = cmp(x.P, y.P);
    return c != 0 ? c < 0 : x.Q < y.Q;
  }
};

// Exact expansion with cycle detection on (P, Q) states.
ContinuedFraction expand_surd(const QuadraticSurd& s, std::size_t max_steps = 100000);

// Shortest period, shortest pre-period.
ContinuedFraction minimize(const ContinuedFraction& cf);
bool is_minimal(const ContinuedFraction& cf);

CanonicalIndices canonical_indices(const ContinuedFraction& cf);

// State (P_n, Q_n) of the complete quotient x_n = (P_n + sqrt D)/Q_n.
SurdState state_at(const QuadraticSurd& s, std::size_t n);

// 1/x_(k+1) as a surd; the tail value of index k.
QuadraticSurd tail_surd(const QuadraticSurd& s, std::size_t k);

// The surd represented by an explicit periodic expansion.
QuadraticSurd cf_value(const ContinuedFraction& cf);

// Validates a0 integral, a_n >= 1, non-empty period.
void validate(const ContinuedFraction& cf);

}  // namespace quadcf
