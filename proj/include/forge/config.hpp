#ifndef FORGE_CONFIG_HPP
#define FORGE_CONFIG_HPP

#include <cstdint>

namespace forge {

// Tunable bounds. Every limit can be overridden per call, via CLI flags, or
// via DESCENT_FORGE_* environment variables (see cli_runner.cpp).
struct RunConfig {
  int group_cap = 5040;              // max order of any constructed group
  std::int64_t search_budget = 10'000'000; // node limit for backtracking searches
  std::int64_t d_bound = 10'000;     // |d| limit for the quadratic field search
  std::int64_t witness_bound = 1'000'000; // numerator/denominator cap for norm witnesses
  int ladder_length = 200;           // constant-term ladder for the cubic constructor
};

inline RunConfig& default_config() {
  static RunConfig cfg;
  return cfg;
}

} // namespace forge

#endif
