#pragma once

#include <cstddef>
#include <string>

#include <json.hpp>

#include "quadcf/cli/input.hpp"
#include "quadcf/genfun/genfun.hpp"
#include "quadcf/levy/levy.hpp"

namespace quadcf::cli {

struct Options {
  std::size_t terms = 12;
  std::size_t prec_bits = kDefaultPrecBits;
  std::size_t max_steps = 100000;
  std::size_t empirical_n = 1000;
  unsigned long seed = 1;
};

struct Analysis {
  std::string input;
  ContinuedFraction cf;
  CanonicalIndices indices;
  GenFunPair gf;
  PrecisionReal closed, from_v, empirical;
  std::size_t empirical_n;
};

Analysis analyse(const InputSpec& spec, const Options& opt);

// One object: input, cf, indices, delta, v, F, G, levy.
nlohmann::json to_json(const Analysis& a, const Options& opt);

nlohmann::json poly_json(const IntPoly& p);
nlohmann::json rational_function_json(const RationalFunctionZ& f);

std::string describe_expansion(const ContinuedFraction& cf, const CanonicalIndices& idx);
std::string describe_genfun(const GenFunPair& gf, std::size_t terms);
std::string describe_levy(const Analysis& a, int digits);

}  // namespace quadcf::cli
