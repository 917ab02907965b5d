#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "trigirth/core.hpp"
#include "trigirth/solver.hpp"

namespace trigirth {

/// Result of a cycle-existence question, carrying whichever witness decided it.
struct CycleSearch {
  std::optional<CycleCertificate> cycle;
  std::optional<InfeasibleWitness> refutation;

  explicit operator bool() const { return cycle.has_value(); }
};

/// Some cycle of `g`, or a Farkas refutation showing there is none.
CycleSearch find_cycle(const OrientedThreeGraph& g);

/// Whether `support` (non-empty, within g) is itself a cycle. Throws UnknownTriple.
CycleSearch is_cycle(const OrientedThreeGraph& g, std::span<const OrientedTriple> support);

struct SingleCycleReport {
  bool single = false;
  /// Certificate of the full triple set, when it is a cycle.
  std::optional<CycleCertificate> full;
  /// A cycle avoiding some triple, when one exists.
  std::optional<CycleCertificate> proper;
  /// Farkas witnesses produced and re-verified for the avoid-one queries.
  std::size_t refutations = 0;
};

/// `jobs` bounds concurrent feasibility queries; results do not depend on it.
SingleCycleReport check_single_cycle(const OrientedThreeGraph& g, unsigned jobs = 1);
inline bool is_single_cycle(const OrientedThreeGraph& g, unsigned jobs = 1) {
  return check_single_cycle(g, jobs).single;
}

struct OnlyCycleReport {
  bool holds = false;
  std::optional<CycleCertificate> cycle;
  /// A cycle other than `support`, when one was found.
  std::optional<CycleCertificate> other;
  std::string reason;
  std::size_t refutations = 0;
};

/// Whether `support` is a cycle and every cycle of `g` has exactly that
/// support. Throws UnknownTriple.
OnlyCycleReport check_only_cycle(const OrientedThreeGraph& g, std::span<const OrientedTriple> support,
                                 unsigned jobs = 1);
inline bool only_cycle(const OrientedThreeGraph& g, std::span<const OrientedTriple> support,
                       unsigned jobs = 1) {
  return check_only_cycle(g, support, jobs).holds;
}

/// Whether g + rho has a cycle using rho. Throws ThreeSetAlreadyOriented.
CycleSearch creates_new_cycle(const OrientedThreeGraph& g, const OrientedTriple& rho);

enum class GirthStatus { Exact, NoCycle, UnknownAtBudget };

std::string_view to_string(GirthStatus s);

struct GirthBudget {
  std::uint64_t max_nodes = 5'000'000;
};

struct GirthReport {
  GirthStatus status = GirthStatus::NoCycle;
  /// Exact girth, or the best upper bound found when the budget ran out.
  std::size_t girth = 0;
  std::optional<CycleCertificate> certificate;
  std::uint64_t explored = 0;
  GirthBudget budget;
  /// C(n-1, 2) + 1.
  std::int64_t upper_bound = 0;
  /// Which fast path (if any) settled the answer.
  std::string method;
};

/// Shortest cycle length. Fast paths for acyclic and single-cycle inputs,
/// otherwise iterative deepening over support size with sign-coverage and
/// LP-relaxation pruning.
GirthReport girth(const OrientedThreeGraph& g, GirthBudget budget = {}, unsigned jobs = 1);

}  // namespace trigirth
