#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>

#include "quadcf/cfrac/continued_fraction.hpp"

namespace quadcf::cli {

// (P + sqrt(D)) / Q exactly as written; sqrt(D) is P = 0, Q = 1.
struct SurdInput {
  BigInt P, Q, D;
  friend bool operator==(const SurdInput&, const SurdInput&) = default;
};

using InputSpec = std::variant<SurdInput, ContinuedFraction>;

// sqrt(D) | (P+sqrt(D))/Q | cf:a0;[a1,...,ak];(b1,...,bl), whitespace ignored.
InputSpec parse_input(std::string_view text);
std::string render(const InputSpec& spec);

ContinuedFraction to_continued_fraction(const InputSpec& spec, std::size_t max_steps = 100000);
// The surd value; explicit expansions are evaluated.
QuadraticSurd to_surd(const InputSpec& spec);

}  // namespace quadcf::cli
