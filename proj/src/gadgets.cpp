#include "gadget_detail.hpp"

namespace trigirth {

namespace detail {

namespace {

// Role sequences of the gadget triples, read as ->(r0 r1 r2).
constexpr char kP[][4] = {"xya", "ayz", "azc", "czx", "cxy", "cyb", "byz", "bzx", "bxa", "xzy"};
constexpr char kS[][4] = {"xyt", "aty", "ayz", "azt", "atc", "ctz", "czx",
                          "cxy", "cyb", "byz", "bzx", "bxt", "bta", "xzy"};

}  // namespace

std::vector<OrientedTriple> gadget_triples(GadgetKind kind, const GadgetRoles& r) {
  auto pick = [&](char role) {
    switch (role) {
      case 'a': return r.a;
      case 'b': return r.b;
      case 'c': return r.c;
      case 'x': return r.x;
      case 'y': return r.y;
      case 'z': return r.z;
      default: return r.t;
    }
  };
  std::vector<OrientedTriple> out;
  auto emit = [&](const auto& table) {
    for (const auto& seq : table) out.push_back(OrientedTriple::canonicalize(pick(seq[0]), pick(seq[1]), pick(seq[2])));
  };
  if (kind == GadgetKind::P) {
    emit(kP);
  } else {
    emit(kS);
  }
  return out;
}

int fresh_vertex_count(GadgetKind kind) { return kind == GadgetKind::P ? 3 : 4; }

}  // namespace detail

OrientedThreeGraph directed_four_set() {
  return OrientedThreeGraph(4, {canonicalize(1, 2, 3), canonicalize(1, 4, 2), canonicalize(1, 3, 4),
                                canonicalize(2, 4, 3)});
}

OrientedThreeGraph gadget(GadgetKind kind) {
  namespace gv = gadget_vertex;
  const detail::GadgetRoles roles{gv::a, gv::b, gv::c, gv::x, gv::y, gv::z, gv::t};
  return OrientedThreeGraph(kind == GadgetKind::P ? 6 : 7, detail::gadget_triples(kind, roles));
}

std::string gadget_legend(GadgetKind kind) {
  return kind == GadgetKind::P ? "a=1 b=2 c=3 x=4 y=5 z=6" : "a=1 b=2 c=3 x=4 y=5 z=6 t=7";
}

}  // namespace trigirth
