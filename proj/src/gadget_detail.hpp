#pragma once

#include <vector>

#include "trigirth/constructions.hpp"

namespace trigirth::detail {

struct GadgetRoles {
  VertexId a, b, c, x, y, z, t;
};

/// The gadget's triples with each label replaced by its assigned vertex.
std::vector<OrientedTriple> gadget_triples(GadgetKind kind, const GadgetRoles& roles);

/// 3 for P (x, y, z), 4 for S (x, y, z, t).
int fresh_vertex_count(GadgetKind kind);

}  // namespace trigirth::detail
