#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "trigirth/rational.hpp"

namespace trigirth::detail {

/// Sparse integer column: (row, value) pairs.
using SparseColumn = std::vector<std::pair<std::size_t, int>>;

struct PhaseOneResult {
  bool feasible = false;
  /// Basic solution of M x = b, x >= 0 (when feasible).
  std::vector<Rational> x;
  /// z with z^T M >= 0 and z^T b < 0 (when infeasible).
  std::vector<Rational> z;
  std::size_t pivots = 0;
};

/// Decides {x : M x = b, x >= 0} exactly. Phase-one tableau with one
/// artificial per row, Bland's smallest-index rule for both entering and
/// leaving variables.
PhaseOneResult solve_phase_one(std::size_t rows, const std::vector<SparseColumn>& columns,
                               const std::vector<Rational>& b);

}  // namespace trigirth::detail
