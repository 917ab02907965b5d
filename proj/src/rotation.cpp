#include <algorithm>
#include <set>
#include <sstream>

#include "text_util.hpp"
#include "trigirth/constructions.hpp"

namespace trigirth {

namespace {

RotationSystem shifted_rotation(int n, std::initializer_list<int> offsets) {
  RotationSystem rot{n, {}};
  for (int v = 0; v < n; ++v) {
    std::vector<VertexId> nbrs;
    for (int d : offsets) nbrs.push_back((v + d) % n + 1);
    rot.order.push_back(std::move(nbrs));
  }
  return rot;
}

void validate_rotation(const RotationSystem& rot) {
  if (rot.n < 0 || rot.order.size() != static_cast<std::size_t>(rot.n)) {
    throw Error(ErrorKind::AsymmetricRotation, "rotation lists do not match the vertex count");
  }
  std::set<std::pair<VertexId, VertexId>> darts;
  for (VertexId v = 1; v <= rot.n; ++v) {
    for (VertexId w : rot.order[v - 1]) {
      if (w < 1 || w > rot.n) {
        throw Error(ErrorKind::VertexOutOfRange, "neighbour " + std::to_string(w) + " of " + std::to_string(v));
      }
      if (w == v || !darts.emplace(v, w).second) {
        throw Error(ErrorKind::AsymmetricRotation,
                    "vertex " + std::to_string(v) + " lists " + std::to_string(w) + " twice or as itself");
      }
    }
  }
  for (auto [v, w] : darts) {
    if (!darts.contains({w, v})) {
      throw Error(ErrorKind::AsymmetricRotation,
                  std::to_string(w) + " appears at " + std::to_string(v) + " but not conversely");
    }
  }
}

}  // namespace

RotationSystem builtin_k4_rotation() {
  return RotationSystem{4, {{2, 3, 4}, {1, 4, 3}, {1, 2, 4}, {1, 3, 2}}};
}

RotationSystem builtin_k7_rotation() { return shifted_rotation(7, {1, 3, 2, 6, 4, 5}); }

RotationSystem parse_rotation(std::string_view text) {
  using detail::parse_fail;
  using detail::parse_int;
  const auto lines = detail::tokenize(text);
  detail::expect_header(lines, "rot");
  if (lines.size() < 2 || lines[1].tokens[0] != "n") {
    throw Error(ErrorKind::ParseError, "missing 'n <count>' line");
  }
  detail::expect_arity(lines[1], 2);
  const auto n = parse_int(lines[1], lines[1].tokens[1]);
  if (n < 0 || n > 100000) parse_fail(lines[1], "vertex count out of range");
  RotationSystem rot{static_cast<int>(n), std::vector<std::vector<VertexId>>(static_cast<std::size_t>(n))};
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens[0] != "r") parse_fail(line, "unknown record '" + line.tokens[0] + "'");
    if (line.tokens.size() < 2) parse_fail(line, "'r' needs a vertex");
    const auto v = parse_int(line, line.tokens[1]);
    if (v < 1 || v > n) throw Error(ErrorKind::VertexOutOfRange, "line " + std::to_string(line.number));
    if (seen[v - 1]) parse_fail(line, "vertex listed twice");
    seen[v - 1] = 1;
    for (std::size_t k = 2; k < line.tokens.size(); ++k) {
      rot.order[v - 1].push_back(static_cast<VertexId>(parse_int(line, line.tokens[k])));
    }
  }
  return rot;
}

std::string emit_rotation(const RotationSystem& rot) {
  std::ostringstream out;
  out << "rot 1\nn " << rot.n << '\n';
  for (int v = 1; v <= rot.n; ++v) {
    out << "r " << v;
    for (VertexId w : rot.order[v - 1]) out << ' ' << w;
    out << '\n';
  }
  return out.str();
}

bool FaceList::all_triangles() const {
  return std::all_of(faces.begin(), faces.end(), [](const auto& f) { return f.size() == 3; });
}

FaceList faces_from_rotation(const RotationSystem& rot) {
  validate_rotation(rot);
  const int n = rot.n;
  // position[v][w] = index of w in the rotation at v.
  std::vector<std::vector<int>> position(n + 1, std::vector<int>(n + 1, -1));
  std::size_t darts = 0;
  for (VertexId v = 1; v <= n; ++v) {
    const auto& ord = rot.order[v - 1];
    for (std::size_t k = 0; k < ord.size(); ++k) position[v][ord[k]] = static_cast<int>(k);
    darts += ord.size();
  }
  auto successor = [&](VertexId at, VertexId of) {
    const auto& ord = rot.order[at - 1];
    return ord[(static_cast<std::size_t>(position[at][of]) + 1) % ord.size()];
  };

  FaceList out;
  out.vertices = n;
  out.edges = darts / 2;
  std::vector<std::vector<char>> used(n + 1, std::vector<char>(n + 1, 0));
  for (VertexId i = 1; i <= n; ++i) {
    for (VertexId j : rot.order[i - 1]) {
      if (used[i][j]) continue;
      std::vector<VertexId> face;
      VertexId u = i, v = j;
      while (!used[u][v]) {
        used[u][v] = 1;
        face.push_back(u);
        const VertexId w = successor(v, u);
        u = v;
        v = w;
      }
      out.faces.push_back(std::move(face));
    }
  }
  return out;
}

OrientedThreeGraph cycle_from_triangulation(const FaceList& faces) {
  if (!faces.all_triangles()) throw Error(ErrorKind::NotATriangulation, "some face is not a triangle");
  std::vector<OrientedTriple> triples;
  triples.reserve(faces.faces.size());
  for (const auto& f : faces.faces) triples.push_back(OrientedTriple::canonicalize(f[0], f[1], f[2]));
  try {
    return OrientedThreeGraph(faces.vertices, std::move(triples));
  } catch (const Error& e) {
    throw Error(ErrorKind::NotATriangulation, std::string("faces do not form a simplicial triangulation: ") + e.what());
  }
}

}  // namespace trigirth
