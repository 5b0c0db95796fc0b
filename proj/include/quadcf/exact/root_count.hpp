#pragma once

#include <cstddef>

#include "quadcf/exact/int_poly.hpp"

namespace quadcf {

// Sign variations of (1+y)^d p(1/(1+y)); an upper bound on the roots in (0,1)
// with the same parity.
std::size_t descartes_bound_unit_interval(const IntPoly& p);

// Number of distinct real roots in (a, b], by a Sturm sequence. p != 0.
std::size_t sturm_count(const IntPoly& p, const Rational& a, const Rational& b);

bool has_root_in_open_unit_interval(const IntPoly& p);

}  // namespace quadcf
