#pragma once

#include <cstddef>
#include <map>
#include <variant>
#include <vector>

#include "trigirth/core.hpp"
#include "trigirth/matrix.hpp"
#include "trigirth/rational.hpp"

namespace trigirth {

/// How the scale of the homogeneous system A x = 0 is pinned.
enum class Anchor {
  /// x_i >= 1 for every i in `lower`.
  EachAtLeastOne,
  /// sum of x_i over `lower` >= 1 (any non-trivial solution touching `lower`).
  SumAtLeastOne,
};

/// A x = 0, x >= 0, x_i = 0 on `zero`, anchored on `lower` (non-empty,
/// disjoint from `zero`). Indices are incidence-matrix columns.
struct FeasibilityQuery {
  std::vector<std::size_t> zero;
  std::vector<std::size_t> lower;
  Anchor anchor = Anchor::EachAtLeastOne;
};

/// One weight per column. Scaled so that the smallest positive entry is 1.
struct FeasibleWitness {
  std::vector<Rational> x;
};

/// Farkas certificate: one weight per row. With c = y^T A, c_i >= 0 off
/// `zero`, and either sum_{L} c_i > 0 (EachAtLeastOne) or c_i > 0 on every
/// i in L (SumAtLeastOne). Scaled to coprime integers.
struct InfeasibleWitness {
  std::vector<Rational> y;
};

using FeasibilityResult = std::variant<FeasibleWitness, InfeasibleWitness>;

/// Exact phase-one simplex with Bland's rule. Deterministic for a fixed query.
/// Throws std::invalid_argument on a malformed query.
FeasibilityResult feasible(const IncidenceMatrix& m, const FeasibilityQuery& q);

/// Recomputes the witness invariants from scratch. Throws DimensionMismatch.
bool check_witness(const IncidenceMatrix& m, const FeasibilityQuery& q, const FeasibleWitness& w);
bool check_witness(const IncidenceMatrix& m, const FeasibilityQuery& q, const InfeasibleWitness& w);
bool check_witness(const IncidenceMatrix& m, const FeasibilityQuery& q, const FeasibilityResult& w);

/// Positive weights on a set of triples whose weighted columns sum to zero.
struct CycleCertificate {
  std::map<OrientedTriple, Rational> weights;

  std::size_t length() const { return weights.size(); }
  std::vector<OrientedTriple> support() const;
  bool operator==(const CycleCertificate&) const = default;
};

/// Exact validity: non-empty, all weights positive, every triple a column of
/// `m`, weighted column sum zero.
bool check_certificate(const IncidenceMatrix& m, const CycleCertificate& cert);
bool check_certificate(const OrientedThreeGraph& g, const CycleCertificate& cert);

/// Restricts a feasible witness to its positive support.
CycleCertificate certificate_from_witness(const IncidenceMatrix& m, const FeasibleWitness& w);

/// Rescales so the minimum weight is exactly 1.
CycleCertificate normalized(CycleCertificate cert);

/// Column indices of the certificate's support. Throws UnknownTriple.
std::vector<std::size_t> support_columns(const IncidenceMatrix& m, const CycleCertificate& cert);

/// Shrinks a cycle certificate along kernel directions of its support columns
/// until the support kernel is one-dimensional, so that
/// |support| <= rank(original support columns) + 1. The output support is a
/// subset of the input's. Throws InvalidCertificate.
CycleCertificate caratheodory_reduce(const IncidenceMatrix& m, const CycleCertificate& cert);

}  // namespace trigirth
