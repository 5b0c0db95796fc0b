#pragma once

#include <cstddef>
#include <span>

#include "quadcf/cfrac/ab_table.hpp"
#include "quadcf/cfrac/identities.hpp"
#include "quadcf/structmat/monomial_system.hpp"

namespace quadcf {

// Columns A_n = (A^(0)_(n), ..., A^(l-1)_(n)) for n = k, ..., k+l-1.
IntMatrix period_matrix(const ABTable& ab);
// Same for the purely periodic word w (k = 0).
IntMatrix period_matrix(std::span<const BigInt> word);

// True when w is a power of a strictly shorter word.
bool has_proper_subperiod(std::span<const BigInt> word);

// C = period matrix at k_work, gamma_c = (1, -a_(k+c+1), -1). Requires l >= 3.
MonomialSystem cf_system(const ContinuedFraction& cf);

// Cramer route against the generating-function components, and the matrix
// relation N F = p_k z^k A_0 + p_(k-1) z^(k+1) A_1 as series to `depth` terms.
CheckReport verify_cf_embedding(const ContinuedFraction& cf, std::size_t depth);

}  // namespace quadcf
