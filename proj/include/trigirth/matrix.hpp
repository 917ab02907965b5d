#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "trigirth/core.hpp"
#include "trigirth/rational.hpp"

namespace trigirth {

struct ColumnEntry {
  std::size_t row = 0;
  int sign = 0;
};

/// The C(n,2) x |E| incidence matrix with entries in {-1, 0, +1}.
///
/// Rows are the 2-sets {i<j} in lexicographic order. Columns follow the
/// graph's canonical triple order. Entry (ij, F) is +1 when F induces i->j and
/// -1 when it induces j->i. Each column has exactly three non-zeros.
class IncidenceMatrix {
 public:
  explicit IncidenceMatrix(const OrientedThreeGraph& g);

  std::size_t rows() const { return row_count_; }
  std::size_t cols() const { return triples_.size(); }
  int vertex_count() const { return n_; }

  std::span<const ColumnEntry, 3> column(std::size_t j) const { return cols_[j]; }
  const OrientedTriple& column_triple(std::size_t j) const { return triples_[j]; }
  std::span<const OrientedTriple> column_triples() const { return triples_; }

  /// Row index of the 2-set {i, j}; argument order is irrelevant.
  std::size_t row_index(VertexId i, VertexId j) const;
  /// The 2-set {i<j} of a row.
  std::pair<VertexId, VertexId> row_pair(std::size_t r) const;

  int entry(std::size_t r, std::size_t c) const;

 private:
  int n_ = 0;
  std::size_t row_count_ = 0;
  std::vector<OrientedTriple> triples_;
  std::vector<std::array<ColumnEntry, 3>> cols_;
};

inline IncidenceMatrix build_incidence(const OrientedThreeGraph& g) { return IncidenceMatrix(g); }

struct KernelReport {
  std::size_t rank = 0;
  /// Each vector has one entry per (selected) column and satisfies A v = 0.
  std::vector<std::vector<Rational>> kernel_basis;
};

/// Exact rank and right kernel by fraction-free elimination. Pivots are taken
/// by position (first non-zero), so the result is deterministic.
KernelReport rank_and_kernel(const IncidenceMatrix& m);
/// Same, restricted to the listed columns; kernel vectors are indexed by
/// position in `columns`.
KernelReport rank_and_kernel(const IncidenceMatrix& m, std::span<const std::size_t> columns);
/// Dense integer entry point (row-major, `cols` columns per row).
KernelReport rank_and_kernel(std::vector<std::vector<Integer>> rows, std::size_t cols);

/// The n-1 vectors x_1..x_{n-1} over the 2-sets of [n] that are orthogonal to
/// every incidence column: x_i is +1 on {i,k} (i<k), -1 on {j,i} (j<i).
std::vector<std::vector<int>> lemma_rank_null_vectors(int n);

/// C(n,2) - n + 1, the rank ceiling for any oriented 3-graph on n vertices.
std::int64_t rank_upper_bound(int n);

/// MatrixMarket-style coordinate dump with row/column legends as comments.
std::string emit_mtx(const IncidenceMatrix& m);

}  // namespace trigirth
