#include <map>

#include "gadget_detail.hpp"
#include "trigirth/analysis.hpp"

namespace trigirth {

AttachmentResult attach(const OrientedThreeGraph& g, GadgetKind kind, const StarSystem& star,
                        const AttachOptions& options) {
  star.validate(g);
  if (options.check_single_cycle && !is_single_cycle(g, options.jobs)) {
    throw Error(ErrorKind::NotSingleCycle, "attachment host is not a single cycle");
  }

  const int k = g.vertex_count();
  const int fresh = detail::fresh_vertex_count(kind);
  // Labels of the first copy's new vertices; every later copy is glued onto them.
  const detail::GadgetRoles base{star.center, 0, 0, k + 1, k + 2, k + 3, k + 4};

  OrientedThreeGraph cur = g;
  for (std::size_t i = 0; i < star.leaves.size(); ++i) {
    const auto [b, c] = star.leaves[i];
    cur = cur.without(OrientedTriple::canonicalize(star.center, b, c));
    const int n = cur.vertex_count();
    detail::GadgetRoles roles = base;
    roles.b = b;
    roles.c = c;
    if (i > 0) {
      roles.x = n + 1;
      roles.y = n + 2;
      roles.z = n + 3;
      roles.t = n + 4;
    }
    const auto copy = detail::gadget_triples(kind, roles);
    cur = with_triples(cur, n + fresh, copy);
    if (i > 0) {
      std::map<VertexId, VertexId> glue{{roles.x, base.x}, {roles.y, base.y}, {roles.z, base.z}};
      if (kind == GadgetKind::S) glue.emplace(roles.t, base.t);
      cur = identify_vertices(cur, glue);
    }
  }

  AttachmentResult result{std::move(cur), {}};
  result.star.center = base.y;
  for (const auto& leaf : star.leaves) result.star.leaves.push_back(leaf);
  if (kind == GadgetKind::S) result.star.leaves.emplace_back(base.a, base.t);
  result.star.leaves.emplace_back(base.x, base.z);
  result.star.validate(result.graph);
  return result;
}

AttachmentResult iterate(GadgetKind kind, int k) {
  namespace gv = gadget_vertex;
  AttachmentResult cur;
  if (kind == GadgetKind::P) {
    cur.graph = directed_four_set();
    cur.star = StarSystem{1, {{2, 3}}};
  } else {
    cur.graph = gadget(GadgetKind::S).with(OrientedTriple::canonicalize(gv::a, gv::c, gv::b));
    cur.star = StarSystem{gv::y, {{gv::b, gv::c}, {gv::a, gv::t}, {gv::x, gv::z}}};
  }
  AttachOptions unchecked;
  unchecked.check_single_cycle = false;
  for (int i = 0; i < k; ++i) cur = attach(cur.graph, kind, cur.star, unchecked);
  return cur;
}

}  // namespace trigirth
