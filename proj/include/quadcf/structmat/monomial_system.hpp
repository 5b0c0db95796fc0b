#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "quadcf/structmat/matrix.hpp"

namespace quadcf {

// Base matrix C with coefficients gamma[s][p]; column s of N(z) is
// gamma[s][0] C_s + gamma[s][1] z C_(s+1) + gamma[s][2] z^2 C_(s+2), indices mod l.
// Indices are 0-based throughout.
struct MonomialSystem {
  std::size_t ell = 0;
  IntMatrix C;
  std::vector<std::array<BigInt, 3>> gamma;

  void validate() const;
  std::size_t wrap(long i) const;
};

PolyMatrix assemble_N(const MonomialSystem& sys);

// N(z) with C = I and uniform coefficients (g0, g1, g2).
MonomialSystem uniform_system(std::size_t ell, long g0, long g1, long g2);

}  // namespace quadcf
