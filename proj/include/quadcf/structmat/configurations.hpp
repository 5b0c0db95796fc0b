#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "quadcf/exact/bigint.hpp"

namespace quadcf {

// A map tau from Z_l (or Z_l minus one omitted index s) to {0, 1, 2}.
// upsilon(k) = k + tau(k), with upsilon(s) = t when s is omitted.
struct Configuration {
  std::size_t ell = 0;
  std::optional<std::size_t> omitted;
  std::optional<std::size_t> target;
  std::vector<int> values;  // -1 at the omitted index
  std::vector<std::size_t> upsilon;
  std::size_t exponent = 0;  // sum of tau
  std::size_t kappa = 0;     // leading run of 0 in tau(s+1), ..., tau(s-1)
  std::size_t mu = 0;        // trailing run of 2
  int eta = -1;              // exponent / l in the full-domain case
  int signature_parity = 0;

  std::string word() const;
};

// No k with tau(k+1) = tau(k) - 1 or tau(k+2) = tau(k) - 2, where defined.
bool is_non_decreasing(const std::vector<int>& values);

// Exhaustive T+ (full domain) or T+_(s,t) (omitted = s, t given). l <= 12.
std::vector<Configuration> enumerate_tplus(std::size_t ell, std::optional<std::size_t> omitted = std::nullopt,
                                           std::optional<std::size_t> t = std::nullopt);

// (-1)^parity * prod over the domain of gamma[k][tau(k)].
BigInt signed_weight(const Configuration& c, const std::vector<std::array<BigInt, 3>>& gamma);

}  // namespace quadcf
