#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "support.hpp"
#include "trigirth/certificate_io.hpp"
#include "trigirth/codec.hpp"
#include "trigirth/constructions.hpp"
#include "trigirth/rational.hpp"

using namespace trigirth;

TEST(O3g, ParsesDirectedFourSet) {
  const auto g = parse_o3g("o3g 1\nn 4\nt 1 2 3\nt 1 4 2\nt 1 3 4\nt 2 4 3\n");
  EXPECT_EQ(g, directed_four_set());
}

TEST(O3g, CommentsAndBlankLines) {
  const auto g = parse_o3g("# header next\no3g 1\n\nn 4 # four\n t 2 3 1\n");
  EXPECT_EQ(g, OrientedThreeGraph(4, {canonicalize(1, 2, 3)}));
}

TEST(O3g, EmptyTripleList) {
  const auto g = parse_o3g("o3g 1\nn 5\n");
  EXPECT_EQ(g.vertex_count(), 5);
  EXPECT_TRUE(g.empty());
}

TEST(O3g, Errors) {
  EXPECT_ERROR_KIND(parse_o3g("o3g 1\nn 4\nt 1 2 3\nt 1 3 2\n"), ErrorKind::DuplicateThreeSet);
  EXPECT_ERROR_KIND(parse_o3g("o3g 1\nn 3\nt 1 2 4\n"), ErrorKind::VertexOutOfRange);
  EXPECT_ERROR_KIND(parse_o3g("o3g 2\nn 3\n"), ErrorKind::ParseError);
  EXPECT_ERROR_KIND(parse_o3g(""), ErrorKind::ParseError);
  EXPECT_ERROR_KIND(parse_o3g("o3g 1\nt 1 2 3\n"), ErrorKind::ParseError);
  EXPECT_ERROR_KIND(parse_o3g("o3g 1\nn 3\nt 1 2\n"), ErrorKind::ParseError);
  EXPECT_ERROR_KIND(parse_o3g("o3g 1\nn 3\nt 1 1 2\n"), ErrorKind::ParseError);
  EXPECT_ERROR_KIND(parse_o3g("o3g 1\nn 3\nt 1 2 x\n"), ErrorKind::ParseError);
  EXPECT_ERROR_KIND(parse_o3g("o3g 1\nn 3\nq 1 2 3\n"), ErrorKind::ParseError);
}

TEST(O3g, RoundTripRandom) {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 100; ++it) {
    const auto g = oracle::random_graph(rng, 3 + it % 6, 0.4, 100);
    const auto text = emit_o3g(g);
    EXPECT_EQ(parse_o3g(text), g);
    EXPECT_EQ(emit_o3g(parse_o3g(text)), text);
  }
}

TEST(O3g, CommentsDoNotChangeTheGraph) {
  const auto g = gadget(GadgetKind::S);
  const std::vector<std::string> comments{"labels " + gadget_legend(GadgetKind::S)};
  EXPECT_EQ(parse_o3g(emit_o3g(g, comments)), g);
}

TEST(Star, RoundTripAndErrors) {
  const StarSystem s{5, {{2, 3}, {1, 7}, {4, 6}}};
  EXPECT_EQ(parse_star(emit_star(s)), s);
  EXPECT_ERROR_KIND(parse_star("star 1\nl 2 3\n"), ErrorKind::ParseError);
  EXPECT_ERROR_KIND(parse_star("star 1\ncenter 1\ncenter 2\n"), ErrorKind::ParseError);
  EXPECT_ERROR_KIND(parse_star("star 1\ncenter 1\nl 2\n"), ErrorKind::ParseError);
}

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(format_rational(Rational(2)), "2/1");
  EXPECT_EQ(format_rational(Rational(-3, 2)), "-3/2");
  EXPECT_ERROR_KIND(parse_rational("1/0"), ErrorKind::ParseError);
  EXPECT_ERROR_KIND(parse_rational("1/-2"), ErrorKind::ParseError);
  EXPECT_ERROR_KIND(parse_rational("a"), ErrorKind::ParseError);
  const std::vector<Rational> v{Rational(1, 2), Rational(-3, 4), 0};
  EXPECT_EQ(primitive_integer_scaling(v), (std::vector<Rational>{2, -3, 0}));
}

TEST(CycleCertificateText, RoundTripAndErrors) {
  CycleCertificate c;
  c.weights[canonicalize(1, 2, 3)] = Rational(1, 3);
  c.weights[canonicalize(2, 4, 3)] = 2;
  EXPECT_EQ(parse_cycle_certificate(emit_cycle_certificate(c)), c);
  EXPECT_ERROR_KIND(parse_cycle_certificate("cyc 1\nw 1 2 3 0\n"), ErrorKind::ParseError);
  EXPECT_ERROR_KIND(parse_cycle_certificate("cyc 1\nw 1 2 3 -1/2\n"), ErrorKind::ParseError);
  EXPECT_ERROR_KIND(parse_cycle_certificate("cyc 1\nw 1 2 3 1\nw 2 3 1 1\n"), ErrorKind::ParseError);
  EXPECT_ERROR_KIND(parse_cycle_certificate("far 1\n"), ErrorKind::ParseError);
}

TEST(FarkasText, RoundTrip) {
  const IncidenceMatrix m(gadget(GadgetKind::P));
  InfeasibleWitness w;
  w.y.assign(m.rows(), 0);
  w.y[0] = 3;
  w.y[7] = Rational(-1, 2);
  const auto back = parse_farkas(emit_farkas(m, w), m);
  EXPECT_EQ(back.y, w.y);
  EXPECT_ERROR_KIND(parse_farkas("far 1\ny 1 9 1\n", m), ErrorKind::VertexOutOfRange);
  EXPECT_ERROR_KIND(parse_farkas("far 1\ny 1 2 1\ny 2 1 1\n", m), ErrorKind::ParseError);
}

TEST(RotationText, RoundTripAndErrors) {
  const auto k7 = builtin_k7_rotation();
  const auto back = parse_rotation(emit_rotation(k7));
  EXPECT_EQ(back.n, k7.n);
  EXPECT_EQ(back.order, k7.order);
  EXPECT_ERROR_KIND(parse_rotation("rot 1\nn 3\nr 4 1 2\n"), ErrorKind::VertexOutOfRange);
  EXPECT_ERROR_KIND(parse_rotation("rot 1\nr 1 2\n"), ErrorKind::ParseError);
}
