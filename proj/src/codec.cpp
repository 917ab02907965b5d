#include "trigirth/codec.hpp"

#include <optional>
#include <sstream>

#include "text_util.hpp"

namespace trigirth {

using detail::expect_arity;
using detail::parse_fail;
using detail::parse_int;

OrientedThreeGraph parse_o3g(std::string_view text) {
  const auto lines = detail::tokenize(text);
  detail::expect_header(lines, "o3g");
  if (lines.size() < 2 || lines[1].tokens[0] != "n") {
    throw Error(ErrorKind::ParseError, "missing 'n <count>' line");
  }
  expect_arity(lines[1], 2);
  const long long n = parse_int(lines[1], lines[1].tokens[1]);
  if (n < 0 || n > 100000) parse_fail(lines[1], "vertex count out of range");

  std::vector<OrientedTriple> triples;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens[0] != "t") parse_fail(line, "unknown record '" + line.tokens[0] + "'");
    expect_arity(line, 4);
    VertexId v[3];
    for (int k = 0; k < 3; ++k) {
      const long long x = parse_int(line, line.tokens[k + 1]);
      if (x < 1 || x > n) {
        throw Error(ErrorKind::VertexOutOfRange,
                    "line " + std::to_string(line.number) + ": vertex " + std::to_string(x));
      }
      v[k] = static_cast<VertexId>(x);
    }
    try {
      triples.push_back(OrientedTriple::canonicalize(v[0], v[1], v[2]));
    } catch (const Error&) {
      parse_fail(line, "repeated vertex in triple");
    }
  }
  return OrientedThreeGraph(static_cast<int>(n), std::move(triples));
}

std::string emit_o3g(const OrientedThreeGraph& g, std::span<const std::string> comments) {
  std::ostringstream out;
  out << "o3g 1\n";
  for (const auto& c : comments) out << "# " << c << '\n';
  out << "n " << g.vertex_count() << '\n';
  for (const auto& t : g.triples()) out << "t " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  return out.str();
}

StarSystem parse_star(std::string_view text) {
  const auto lines = detail::tokenize(text);
  detail::expect_header(lines, "star");
  StarSystem star;
  std::optional<VertexId> center;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens[0] == "center") {
      expect_arity(line, 2);
      if (center) parse_fail(line, "second center line");
      center = static_cast<VertexId>(parse_int(line, line.tokens[1]));
    } else if (line.tokens[0] == "l") {
      expect_arity(line, 3);
      star.leaves.emplace_back(static_cast<VertexId>(parse_int(line, line.tokens[1])),
                               static_cast<VertexId>(parse_int(line, line.tokens[2])));
    } else {
      parse_fail(line, "unknown record '" + line.tokens[0] + "'");
    }
  }
  if (!center) throw Error(ErrorKind::ParseError, "star file has no center line");
  star.center = *center;
  return star;
}

std::string emit_star(const StarSystem& star) {
  std::ostringstream out;
  out << "star 1\ncenter " << star.center << '\n';
  for (auto [b, c] : star.leaves) out << "l " << b << ' ' << c << '\n';
  return out.str();
}

}  // namespace trigirth
