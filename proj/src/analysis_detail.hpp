#pragma once

#include <span>
#include <vector>

#include "trigirth/analysis.hpp"

namespace trigirth::detail {

FeasibilityResult verified_feasible(const IncidenceMatrix& m, const FeasibilityQuery& q);
CycleSearch to_search(const IncidenceMatrix& m, FeasibilityResult r);
std::vector<std::size_t> all_but(std::size_t cols, std::span<const std::size_t> skip);
std::vector<std::size_t> columns_of(const OrientedThreeGraph& g, std::span<const OrientedTriple> triples);

}  // namespace trigirth::detail
