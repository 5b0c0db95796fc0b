#pragma once

#include <cstdint>
#include <vector>

#include "quadcf/exact/bigint.hpp"

namespace quadcf::modular {

// Word-sized primes below 2^31 so products fit in 64 bits.
const std::vector<std::uint64_t>& primes();

std::uint64_t reduce(const BigInt& x, std::uint64_t p);
std::uint64_t inverse(std::uint64_t a, std::uint64_t p);

// Dense polynomials mod p, trailing zeros trimmed.
using PolyMod = std::vector<std::uint64_t>;
PolyMod gcd(PolyMod a, PolyMod b, std::uint64_t p);

// Gaussian elimination mod p.
std::uint64_t determinant(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p);

}  // namespace quadcf::modular
