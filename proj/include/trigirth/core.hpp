#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "trigirth/error.hpp"

namespace trigirth {

/// Vertices are labelled 1..n.
using VertexId = int;

/// Underlying unordered 3-set, stored ascending.
using ThreeSet = std::array<VertexId, 3>;

struct DirectedPair {
  VertexId from = 0;
  VertexId to = 0;

  DirectedPair reversed() const { return {to, from}; }
  auto operator<=>(const DirectedPair&) const = default;
};

/// A 3-set with one of its two cyclic orientations.
///
/// Stored as the rotation that puts the smallest vertex first, so the three
/// rotations of (a, b, c) compare equal and the reverse orientation does not.
class OrientedTriple {
 public:
  static OrientedTriple canonicalize(VertexId a, VertexId b, VertexId c);

  VertexId operator[](std::size_t i) const { return v_[i]; }
  const std::array<VertexId, 3>& vertices() const { return v_; }

  OrientedTriple reversed() const { return OrientedTriple(v_[0], v_[2], v_[1]); }
  ThreeSet three_set() const;
  bool contains(VertexId v) const { return v_[0] == v || v_[1] == v || v_[2] == v; }

  /// True for ->abc with a < b < c.
  bool ascending() const { return v_[1] < v_[2]; }

  auto operator<=>(const OrientedTriple&) const = default;

 private:
  OrientedTriple(VertexId a, VertexId b, VertexId c) : v_{a, b, c} {}
  std::array<VertexId, 3> v_;
};

inline OrientedTriple canonicalize(VertexId a, VertexId b, VertexId c) {
  return OrientedTriple::canonicalize(a, b, c);
}

/// ->abc induces a->b, b->c, c->a.
std::array<DirectedPair, 3> induced_edges(const OrientedTriple& t);

/// C(n, 3), the triple count of a 3-tournament on n vertices.
std::int64_t tournament_size(int n);

/// Vertex count plus a set of oriented triples with pairwise distinct 3-sets.
/// Triples are kept in canonical sorted order.
class OrientedThreeGraph {
 public:
  OrientedThreeGraph() = default;
  explicit OrientedThreeGraph(int n) : n_(n) {}
  /// Throws VertexOutOfRange or DuplicateThreeSet.
  OrientedThreeGraph(int n, std::vector<OrientedTriple> triples);

  int vertex_count() const { return n_; }
  std::span<const OrientedTriple> triples() const { return triples_; }
  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }

  bool contains(const OrientedTriple& t) const { return index_of(t).has_value(); }
  std::optional<std::size_t> index_of(const OrientedTriple& t) const;
  /// The orientation this graph gives to a 3-set, if any.
  std::optional<OrientedTriple> orientation_of(const ThreeSet& s) const;
  bool is_tournament() const;

  /// Throws ThreeSetAlreadyOriented if the 3-set is present in either orientation.
  OrientedThreeGraph with(const OrientedTriple& t) const;
  /// Throws UnknownTriple.
  OrientedThreeGraph without(const OrientedTriple& t) const;
  /// Same vertex range, triple set replaced by a subset. Throws UnknownTriple.
  OrientedThreeGraph restricted_to(std::span<const OrientedTriple> subset) const;

  bool operator==(const OrientedThreeGraph&) const = default;

 private:
  int n_ = 0;
  std::vector<OrientedTriple> triples_;
};

/// Triples ->a b_i c_i pairwise meeting exactly in the center a.
struct StarSystem {
  VertexId center = 0;
  std::vector<std::pair<VertexId, VertexId>> leaves;

  std::size_t size() const { return leaves.size(); }
  std::vector<OrientedTriple> triples() const;
  /// Throws InvalidStar naming the first violated condition.
  void validate(const OrientedThreeGraph& host) const;

  bool operator==(const StarSystem&) const = default;
};

/// Relabels vertices through `mapping` (unmapped vertices keep their label),
/// merges repeated triples and compacts the surviving labels to 1..n' in
/// increasing old-label order. Throws TripleCollapse or OrientationClash.
OrientedThreeGraph identify_vertices(const OrientedThreeGraph& g,
                                     const std::map<VertexId, VertexId>& mapping);

/// Disjoint union helper used by constructions: adds `extra` triples, allowing
/// vertex count growth. Throws DuplicateThreeSet on a 3-set clash.
OrientedThreeGraph with_triples(const OrientedThreeGraph& g, int n,
                                std::span<const OrientedTriple> extra);

}  // namespace trigirth
