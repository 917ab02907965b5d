#include "trigirth/analysis.hpp"

#include <algorithm>
#include <stdexcept>

#include "analysis_detail.hpp"
#include "parallel.hpp"

namespace trigirth {

namespace detail {

// Solves and re-verifies; a witness that fails its own check is a solver bug.
FeasibilityResult verified_feasible(const IncidenceMatrix& m, const FeasibilityQuery& q) {
  auto result = feasible(m, q);
  if (!check_witness(m, q, result)) throw std::logic_error("solver produced an invalid witness");
  return result;
}

CycleSearch to_search(const IncidenceMatrix& m, FeasibilityResult r) {
  CycleSearch out;
  if (auto* x = std::get_if<FeasibleWitness>(&r)) {
    out.cycle = certificate_from_witness(m, *x);
  } else {
    out.refutation = std::get<InfeasibleWitness>(std::move(r));
  }
  return out;
}

std::vector<std::size_t> all_but(std::size_t cols, std::span<const std::size_t> skip) {
  std::vector<char> drop(cols, 0);
  for (auto j : skip) drop[j] = 1;
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < cols; ++j) {
    if (!drop[j]) out.push_back(j);
  }
  return out;
}

std::vector<std::size_t> columns_of(const OrientedThreeGraph& g, std::span<const OrientedTriple> triples) {
  std::vector<std::size_t> cols;
  cols.reserve(triples.size());
  for (const auto& t : triples) {
    auto idx = g.index_of(t);
    if (!idx) {
      throw Error(ErrorKind::UnknownTriple,
                  std::to_string(t[0]) + " " + std::to_string(t[1]) + " " + std::to_string(t[2]));
    }
    cols.push_back(*idx);
  }
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  return cols;
}

}  // namespace detail

using detail::all_but;
using detail::columns_of;
using detail::to_search;
using detail::verified_feasible;

CycleSearch find_cycle(const OrientedThreeGraph& g) {
  if (g.empty()) return {};
  const IncidenceMatrix m(g);
  FeasibilityQuery q;
  q.lower = all_but(m.cols(), {});
  q.anchor = Anchor::SumAtLeastOne;
  return to_search(m, verified_feasible(m, q));
}

CycleSearch is_cycle(const OrientedThreeGraph& g, std::span<const OrientedTriple> support) {
  const auto cols = columns_of(g, support);
  if (cols.empty()) return {};
  const IncidenceMatrix m(g);
  FeasibilityQuery q;
  q.lower = cols;
  q.zero = all_but(m.cols(), cols);
  return to_search(m, verified_feasible(m, q));
}

SingleCycleReport check_single_cycle(const OrientedThreeGraph& g, unsigned jobs) {
  SingleCycleReport report;
  if (g.empty()) return report;
  const IncidenceMatrix m(g);
  {
    FeasibilityQuery q;
    q.lower = all_but(m.cols(), {});
    auto full = to_search(m, verified_feasible(m, q));
    if (!full) return report;
    report.full = std::move(full.cycle);
  }
  std::vector<std::optional<CycleCertificate>> found(m.cols());
  const std::size_t stop = detail::run_indexed(m.cols(), jobs, [&](std::size_t j) {
    FeasibilityQuery q;
    q.zero = {j};
    q.lower = all_but(m.cols(), q.zero);
    q.anchor = Anchor::SumAtLeastOne;
    auto r = to_search(m, verified_feasible(m, q));
    if (r) {
      found[j] = std::move(r.cycle);
      return true;
    }
    return false;
  });
  if (stop < m.cols()) {
    report.proper = std::move(found[stop]);
    report.refutations = stop;
    return report;
  }
  report.refutations = m.cols();
  report.single = true;
  return report;
}

OnlyCycleReport check_only_cycle(const OrientedThreeGraph& g, std::span<const OrientedTriple> support,
                                 unsigned jobs) {
  OnlyCycleReport report;
  const auto inside = columns_of(g, support);
  if (inside.empty()) {
    report.reason = "empty support";
    return report;
  }
  const IncidenceMatrix m(g);
  const auto outside = all_but(m.cols(), inside);
  {
    FeasibilityQuery q;
    q.lower = inside;
    q.zero = outside;
    auto r = to_search(m, verified_feasible(m, q));
    if (!r) {
      report.reason = "support is not a cycle";
      return report;
    }
    report.cycle = std::move(r.cycle);
  }

  // Queries 0..|inside|-1: no cycle avoids an inside triple.
  // The rest: no cycle uses an outside triple.
  const std::size_t total = inside.size() + outside.size();
  std::vector<std::optional<CycleCertificate>> found(total);
  const std::size_t stop = detail::run_indexed(total, jobs, [&](std::size_t k) {
    FeasibilityQuery q;
    if (k < inside.size()) {
      q.zero = {inside[k]};
      q.lower = all_but(m.cols(), q.zero);
      q.anchor = Anchor::SumAtLeastOne;
    } else {
      q.lower = {outside[k - inside.size()]};
    }
    auto r = to_search(m, verified_feasible(m, q));
    if (r) {
      found[k] = std::move(r.cycle);
      return true;
    }
    return false;
  });
  report.refutations = std::min(stop, total);
  if (stop < total) {
    report.other = std::move(found[stop]);
    const auto& t = m.column_triple(stop < inside.size() ? inside[stop] : outside[stop - inside.size()]);
    const std::string name = std::to_string(t[0]) + " " + std::to_string(t[1]) + " " + std::to_string(t[2]);
    report.reason = stop < inside.size() ? "a cycle avoids support triple " + name
                                         : "a cycle uses outside triple " + name;
    return report;
  }
  report.holds = true;
  return report;
}

CycleSearch creates_new_cycle(const OrientedThreeGraph& g, const OrientedTriple& rho) {
  const auto extended = g.with(rho);
  const IncidenceMatrix m(extended);
  FeasibilityQuery q;
  q.lower = {*extended.index_of(rho)};
  return to_search(m, verified_feasible(m, q));
}

std::string_view to_string(GirthStatus s) {
  switch (s) {
    case GirthStatus::Exact: return "exact";
    case GirthStatus::NoCycle: return "no_cycle";
    case GirthStatus::UnknownAtBudget: return "unknown_at_budget";
  }
  return "unknown";
}

}  // namespace trigirth
