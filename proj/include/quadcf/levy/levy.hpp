#pragma once

#include <cstddef>

#include "quadcf/cfrac/continued_fraction.hpp"
#include "quadcf/exact/int_poly.hpp"
#include "quadcf/genfun/genfun.hpp"
#include "quadcf/levy/precision_real.hpp"

namespace quadcf {

inline constexpr std::size_t kDefaultPrecBits = 128;

// log((tau + sqrt(tau^2 - 4(-1)^l)) / 2) / l, tau the trace of the period block.
PrecisionReal levy_closed(const ContinuedFraction& cf, std::size_t prec_bits = kDefaultPrecBits);

// -log(v_min) / l where v_min is the root of v of least modulus.
PrecisionReal levy_from_denominator(const IntPoly& v, std::size_t ell, std::size_t prec_bits = kDefaultPrecBits);
PrecisionReal levy_from_denominator(const GenFunPair& gf, std::size_t prec_bits = kDefaultPrecBits);

// log(q_n) / n.
PrecisionReal levy_empirical(const ContinuedFraction& cf, std::size_t n, std::size_t prec_bits = kDefaultPrecBits);

// pi^2 / (12 log 2).
PrecisionReal levy_reference(std::size_t prec_bits = kDefaultPrecBits);

// Exact sign test: v(0) > 0 > v(1) and |v(0)| >= |lead(v)| place the
// least-modulus root of the quadratic v inside (0, 1).
bool vmin_certified(const IntPoly& v);

}  // namespace quadcf
