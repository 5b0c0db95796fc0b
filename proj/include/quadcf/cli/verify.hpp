#pragma once

#include "quadcf/cfrac/identities.hpp"
#include "quadcf/cli/report.hpp"

namespace quadcf::cli {

// Identities, series oracle, denominator/characteristic agreement, tail root,
// positivity, Levy route agreement and (for l >= 3) the matrix embedding.
CheckReport verify_input(const InputSpec& spec, const Options& opt);

// Random monomial systems: determinant factorisation and Cramer identities.
CheckReport verify_random_systems(unsigned long seed, std::size_t count);

}  // namespace quadcf::cli
