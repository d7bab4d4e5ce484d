#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jordan/io/document.hpp"

namespace jordan::io {

struct SuiteOptions {
  int max_twice_j = 4;
  int samples = 100;
  std::uint64_t seed = 42;
  /// eq14 runs every (K, L) with K + L <= max_kl.
  int max_kl = 8;
};

/// relations, nonlinear-map, prop2, prop3, eq14, prop6, prop7, decomposition.
const std::vector<std::string>& suite_names();

/// Runs one named suite (or "all") over the label grid; throws std::invalid_argument
/// for an unknown name. Cells are emitted in a fixed order.
SuiteReport run_suite(const std::string& suite, const SuiteOptions& options);

/// Seed for the (K, L) cell of the two-variable identity, derived from the suite seed.
std::uint64_t xy_cell_seed(std::uint64_t seed, int big_k, int big_l);

}  // namespace jordan::io
