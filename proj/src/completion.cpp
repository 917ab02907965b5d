#include <stdexcept>

#include "parallel.hpp"
#include "trigirth/analysis.hpp"
#include "trigirth/constructions.hpp"

namespace trigirth {

namespace {

std::string show(const OrientedTriple& t) {
  return std::to_string(t[0]) + " " + std::to_string(t[1]) + " " + std::to_string(t[2]);
}

}  // namespace

OrientedThreeGraph complete_to_tournament(const OrientedThreeGraph& g, unsigned jobs) {
  auto single = check_single_cycle(g, jobs);
  if (!single.single) {
    throw HypothesisViolated("input is not a single cycle", single.proper);
  }

  const int n = g.vertex_count();
  std::vector<OrientedTriple> missing;
  for (VertexId a = 1; a <= n; ++a) {
    for (VertexId b = a + 1; b <= n; ++b) {
      for (VertexId c = b + 1; c <= n; ++c) {
        if (!g.orientation_of({a, b, c})) missing.push_back(OrientedTriple::canonicalize(a, b, c));
      }
    }
  }

  // Index 2k tests ->abc of missing[k], 2k+1 its reverse.
  std::vector<std::optional<CycleCertificate>> created(2 * missing.size());
  const std::size_t bad = detail::run_indexed(created.size(), jobs, [&](std::size_t i) {
    const auto rho = i % 2 == 0 ? missing[i / 2] : missing[i / 2].reversed();
    auto r = creates_new_cycle(g, rho);
    created[i] = std::move(r.cycle);
    return created[i].has_value();
  });
  if (bad < created.size()) {
    const auto rho = bad % 2 == 0 ? missing[bad / 2] : missing[bad / 2].reversed();
    throw HypothesisViolated("adding " + show(rho) + " creates a new cycle", created[bad]);
  }

  OrientedThreeGraph t = g;
  for (const auto& up : missing) {
    if (!creates_new_cycle(t, up)) {
      t = t.with(up);
    } else if (!creates_new_cycle(t, up.reversed())) {
      t = t.with(up.reversed());
    } else {
      throw Error(ErrorKind::CompletionStuck, "both orientations of {" + show(up) + "} create cycles");
    }
  }

  if (!only_cycle(t, g.triples(), jobs)) {
    throw std::logic_error("completed tournament has a cycle other than the input");
  }
  return t;
}

}  // namespace trigirth
