#pragma once

#include <cstdint>

#include "akform/system_io.hpp"

namespace akform {

struct SelftestOptions {
  int max_k = 4;
  long max_degree = 10;
  std::uint64_t seed = 0;
};

struct SelftestOutcome {
  bool ok = false;
  Json report;
};

/// Deterministic property sweep over k = 2..max_k: adjoint identity on
/// randomized coordinate pairs, kernel agreement of box and d*, orthogonal
/// decompositions, kernel triviality with the structured elimination
/// proofs, and one seeded normalization run per k. Stops at the first
/// violation and embeds a minimized reproduction record in the report.
/// Identical options produce byte-identical reports.
SelftestOutcome run_selftest(const SelftestOptions& opts);

}  // namespace akform
