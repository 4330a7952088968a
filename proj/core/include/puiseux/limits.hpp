#pragma once

#include <cstdint>

namespace puiseux {

/// Budgets for the exhaustive searches. Exceeding any of them raises
/// ResourceError instead of exhausting memory.
struct EnumerationLimits {
  /// Maximum |Z(x)| materialized or visited for a single element.
  std::uint64_t factorization_cap = 1'000'000;
  /// Maximum number of cells in a grid dynamic-programming table.
  std::uint64_t grid_limit = std::uint64_t{1} << 26;
  /// Maximum number of generator combinations visited when listing elements
  /// without a grid table.
  std::uint64_t combination_budget = 50'000'000;
};

}  // namespace puiseux
