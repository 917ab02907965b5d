#include "trigirth/core.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace trigirth {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateVertex: return "DuplicateVertex";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DuplicateThreeSet: return "DuplicateThreeSet";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::TripleCollapse: return "TripleCollapse";
    case ErrorKind::OrientationClash: return "OrientationClash";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidCertificate: return "InvalidCertificate";
    case ErrorKind::UnknownTriple: return "UnknownTriple";
    case ErrorKind::ThreeSetAlreadyOriented: return "ThreeSetAlreadyOriented";
    case ErrorKind::NotSingleCycle: return "NotSingleCycle";
    case ErrorKind::InvalidStar: return "InvalidStar";
    case ErrorKind::AsymmetricRotation: return "AsymmetricRotation";
    case ErrorKind::NotATriangulation: return "NotATriangulation";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::CompletionStuck: return "CompletionStuck";
  }
  return "Error";
}

namespace {

std::string show(const OrientedTriple& t) {
  return std::to_string(t[0]) + " " + std::to_string(t[1]) + " " + std::to_string(t[2]);
}

}  // namespace

OrientedTriple OrientedTriple::canonicalize(VertexId a, VertexId b, VertexId c) {
  if (a == b || b == c || a == c) {
    throw Error(ErrorKind::DuplicateVertex, "triple (" + std::to_string(a) + ", " +
                                                std::to_string(b) + ", " + std::to_string(c) + ")");
  }
  if (a < b && a < c) return OrientedTriple(a, b, c);
  if (b < a && b < c) return OrientedTriple(b, c, a);
  return OrientedTriple(c, a, b);
}

ThreeSet OrientedTriple::three_set() const {
  ThreeSet s = v_;
  std::sort(s.begin(), s.end());
  return s;
}

std::array<DirectedPair, 3> induced_edges(const OrientedTriple& t) {
  return {DirectedPair{t[0], t[1]}, DirectedPair{t[1], t[2]}, DirectedPair{t[2], t[0]}};
}

std::int64_t tournament_size(int n) {
  if (n < 3) return 0;
  return static_cast<std::int64_t>(n) * (n - 1) * (n - 2) / 6;
}

OrientedThreeGraph::OrientedThreeGraph(int n, std::vector<OrientedTriple> triples)
    : n_(n), triples_(std::move(triples)) {
  if (n_ < 0) throw Error(ErrorKind::VertexOutOfRange, "negative vertex count");
  for (const auto& t : triples_) {
    for (VertexId v : t.vertices()) {
      if (v < 1 || v > n_) {
        throw Error(ErrorKind::VertexOutOfRange,
                    "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
      }
    }
  }
  std::sort(triples_.begin(), triples_.end());
  std::vector<ThreeSet> sets;
  sets.reserve(triples_.size());
  for (const auto& t : triples_) sets.push_back(t.three_set());
  std::vector<std::size_t> order(sets.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sets[a] < sets[b]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (sets[order[i]] == sets[order[i - 1]]) {
      throw Error(ErrorKind::DuplicateThreeSet,
                  "3-set {" + show(triples_[order[i]]) + "} appears twice");
    }
  }
}

std::optional<std::size_t> OrientedThreeGraph::index_of(const OrientedTriple& t) const {
  auto it = std::lower_bound(triples_.begin(), triples_.end(), t);
  if (it == triples_.end() || *it != t) return std::nullopt;
  return static_cast<std::size_t>(it - triples_.begin());
}

std::optional<OrientedTriple> OrientedThreeGraph::orientation_of(const ThreeSet& s) const {
  const auto up = OrientedTriple::canonicalize(s[0], s[1], s[2]);
  if (contains(up)) return up;
  if (contains(up.reversed())) return up.reversed();
  return std::nullopt;
}

bool OrientedThreeGraph::is_tournament() const {
  return static_cast<std::int64_t>(triples_.size()) == tournament_size(n_);
}

OrientedThreeGraph OrientedThreeGraph::with(const OrientedTriple& t) const {
  if (orientation_of(t.three_set())) {
    throw Error(ErrorKind::ThreeSetAlreadyOriented, "3-set of " + show(t) + " already oriented");
  }
  auto next = triples_;
  next.push_back(t);
  return OrientedThreeGraph(n_, std::move(next));
}

OrientedThreeGraph OrientedThreeGraph::without(const OrientedTriple& t) const {
  auto idx = index_of(t);
  if (!idx) throw Error(ErrorKind::UnknownTriple, show(t));
  OrientedThreeGraph out = *this;
  out.triples_.erase(out.triples_.begin() + static_cast<std::ptrdiff_t>(*idx));
  return out;
}

OrientedThreeGraph OrientedThreeGraph::restricted_to(std::span<const OrientedTriple> subset) const {
  std::vector<OrientedTriple> kept;
  kept.reserve(subset.size());
  for (const auto& t : subset) {
    if (!contains(t)) throw Error(ErrorKind::UnknownTriple, show(t));
    kept.push_back(t);
  }
  return OrientedThreeGraph(n_, std::move(kept));
}

std::vector<OrientedTriple> StarSystem::triples() const {
  std::vector<OrientedTriple> out;
  out.reserve(leaves.size());
  for (auto [b, c] : leaves) out.push_back(OrientedTriple::canonicalize(center, b, c));
  return out;
}

void StarSystem::validate(const OrientedThreeGraph& host) const {
  if (leaves.empty()) throw Error(ErrorKind::InvalidStar, "no leaves");
  std::set<VertexId> seen{center};
  for (auto [b, c] : leaves) {
    for (VertexId v : {b, c}) {
      if (v < 1 || v > host.vertex_count()) {
        throw Error(ErrorKind::InvalidStar, "leaf vertex " + std::to_string(v) + " out of range");
      }
      if (!seen.insert(v).second) {
        throw Error(ErrorKind::InvalidStar,
                    "vertex " + std::to_string(v) + " shared by two leaves or with the center");
      }
    }
  }
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    for (std::size_t j = 0; j < leaves.size(); ++j) {
      if (leaves[i].first == leaves[j].second) {
        throw Error(ErrorKind::InvalidStar, "b_i equals c_j");
      }
    }
  }
  for (const auto& t : triples()) {
    if (!host.contains(t)) {
      throw Error(ErrorKind::InvalidStar, "triple " + show(t) + " not in host with this orientation");
    }
  }
}

OrientedThreeGraph identify_vertices(const OrientedThreeGraph& g,
                                     const std::map<VertexId, VertexId>& mapping) {
  const int n = g.vertex_count();
  auto image = [&](VertexId v) {
    auto it = mapping.find(v);
    return it == mapping.end() ? v : it->second;
  };
  for (auto [from, to] : mapping) {
    if (from < 1 || from > n || to < 1 || to > n) {
      throw Error(ErrorKind::VertexOutOfRange,
                  "mapping " + std::to_string(from) + "->" + std::to_string(to));
    }
  }

  std::set<VertexId> survivors;
  for (VertexId v = 1; v <= n; ++v) survivors.insert(image(v));
  std::map<VertexId, VertexId> compact;
  VertexId next = 1;
  for (VertexId v : survivors) compact[v] = next++;

  std::map<ThreeSet, OrientedTriple> by_set;
  for (const auto& t : g.triples()) {
    VertexId a = compact[image(t[0])], b = compact[image(t[1])], c = compact[image(t[2])];
    if (a == b || b == c || a == c) {
      throw Error(ErrorKind::TripleCollapse, "triple " + show(t) + " collapses");
    }
    const auto mapped = OrientedTriple::canonicalize(a, b, c);
    auto [it, fresh] = by_set.emplace(mapped.three_set(), mapped);
    if (!fresh && it->second != mapped) {
      throw Error(ErrorKind::OrientationClash,
                  "triples map to " + show(mapped) + " and " + show(it->second));
    }
  }
  std::vector<OrientedTriple> triples;
  triples.reserve(by_set.size());
  for (auto& [s, t] : by_set) triples.push_back(t);
  return OrientedThreeGraph(static_cast<int>(survivors.size()), std::move(triples));
}

OrientedThreeGraph with_triples(const OrientedThreeGraph& g, int n,
                                std::span<const OrientedTriple> extra) {
  std::vector<OrientedTriple> all(g.triples().begin(), g.triples().end());
  all.insert(all.end(), extra.begin(), extra.end());
  return OrientedThreeGraph(std::max(n, g.vertex_count()), std::move(all));
}

}  // namespace trigirth
