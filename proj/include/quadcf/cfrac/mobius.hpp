#pragma once

#include <string>

#include "quadcf/exact/bigint.hpp"

namespace quadcf {

// [[a, b], [c, d]] acting by z -> (a z + b)/(c z + d).
struct Mobius2x2 {
  BigInt a = 1, b = 0, c = 0, d = 1;

  BigInt det() const { return a * d - b * c; }
  BigInt trace() const { return a + d; }
  // Requires det = +-1.
  Mobius2x2 inverse() const;

  friend Mobius2x2 operator*(const Mobius2x2& x, const Mobius2x2& y);
  friend bool operator==(const Mobius2x2&, const Mobius2x2&) = default;
  std::string to_string() const;
};

// [[0, 1], [1, a]]: z -> 1/(a + z).
Mobius2x2 quotient_matrix(const BigInt& a);

}  // namespace quadcf
