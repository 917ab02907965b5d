#include "trigirth/certificate_io.hpp"

#include <sstream>

#include "text_util.hpp"

namespace trigirth {

using detail::expect_arity;
using detail::parse_fail;
using detail::parse_int;

std::string emit_cycle_certificate(const CycleCertificate& cert) {
  std::ostringstream out;
  out << "cyc 1\n";
  for (const auto& [t, w] : cert.weights) {
    out << "w " << t[0] << ' ' << t[1] << ' ' << t[2] << ' ' << format_rational(w) << '\n';
  }
  return out.str();
}

CycleCertificate parse_cycle_certificate(std::string_view text) {
  const auto lines = detail::tokenize(text);
  detail::expect_header(lines, "cyc");
  CycleCertificate cert;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens[0] != "w") parse_fail(line, "unknown record '" + line.tokens[0] + "'");
    expect_arity(line, 5);
    VertexId v[3];
    for (int k = 0; k < 3; ++k) v[k] = static_cast<VertexId>(parse_int(line, line.tokens[k + 1]));
    OrientedTriple t = [&] {
      try {
        return OrientedTriple::canonicalize(v[0], v[1], v[2]);
      } catch (const Error&) {
        parse_fail(line, "repeated vertex in triple");
      }
    }();
    Rational w;
    try {
      w = parse_rational(line.tokens[4]);
    } catch (const Error&) {
      parse_fail(line, "bad weight '" + line.tokens[4] + "'");
    }
    if (sgn(w) <= 0) parse_fail(line, "weight must be positive");
    if (!cert.weights.emplace(t, w).second) parse_fail(line, "triple listed twice");
  }
  return cert;
}

std::string emit_farkas(const IncidenceMatrix& m, const InfeasibleWitness& w) {
  std::ostringstream out;
  out << "far 1\n";
  for (std::size_t r = 0; r < w.y.size() && r < m.rows(); ++r) {
    if (w.y[r] == 0) continue;
    auto [i, j] = m.row_pair(r);
    out << "y " << i << ' ' << j << ' ' << format_rational(w.y[r]) << '\n';
  }
  return out.str();
}

InfeasibleWitness parse_farkas(std::string_view text, const IncidenceMatrix& m) {
  const auto lines = detail::tokenize(text);
  detail::expect_header(lines, "far");
  InfeasibleWitness w;
  w.y.assign(m.rows(), 0);
  std::vector<char> seen(m.rows(), 0);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& line = lines[k];
    if (line.tokens[0] != "y") parse_fail(line, "unknown record '" + line.tokens[0] + "'");
    expect_arity(line, 4);
    const auto i = parse_int(line, line.tokens[1]);
    const auto j = parse_int(line, line.tokens[2]);
    if (i < 1 || j < 1 || i > m.vertex_count() || j > m.vertex_count() || i == j) {
      throw Error(ErrorKind::VertexOutOfRange, "line " + std::to_string(line.number) + ": bad 2-set");
    }
    const auto r = m.row_index(static_cast<VertexId>(i), static_cast<VertexId>(j));
    if (seen[r]) parse_fail(line, "2-set listed twice");
    seen[r] = 1;
    try {
      w.y[r] = parse_rational(line.tokens[3]);
    } catch (const Error&) {
      parse_fail(line, "bad weight '" + line.tokens[3] + "'");
    }
  }
  return w;
}

}  // namespace trigirth
