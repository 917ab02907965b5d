#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "trigirth/analysis.hpp"
#include "trigirth/certificate_io.hpp"
#include "trigirth/codec.hpp"
#include "trigirth/constructions.hpp"
#include "trigirth/matrix.hpp"

namespace trigirth::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << text;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

/// Ordered key/value report: `key: value` for people, `key=value` with --porcelain.
class Report {
 public:
  template <class T>
  void add(const std::string& key, const T& value) {
    std::ostringstream s;
    s << value;
    rows_.emplace_back(key, s.str());
  }
  void attach(std::string text) { trailer_ = std::move(text); }

  void print(std::ostream& os, bool porcelain) const {
    for (const auto& [k, v] : rows_) os << k << (porcelain ? "=" : ": ") << v << '\n';
    if (!porcelain && !trailer_.empty()) os << '\n' << trailer_;
  }

 private:
  std::vector<std::pair<std::string, std::string>> rows_;
  std::string trailer_;
};

struct Settings {
  bool porcelain = false;
  unsigned jobs = 1;
};

/// Writes a certificate to `path` when given, otherwise appends it to the report.
void emit_certificate(Report& report, const std::string& path, const std::string& text, std::ostream& out) {
  if (!path.empty()) {
    write_text(path, text, out);
    report.add("certificate", path);
  } else {
    report.attach(text);
  }
}

std::string triple_name(const OrientedTriple& t) {
  return std::to_string(t[0]) + " " + std::to_string(t[1]) + " " + std::to_string(t[2]);
}

std::vector<OrientedTriple> parse_support(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text.compare(first, 3, "cyc") == 0) {
    return parse_cycle_certificate(text).support();
  }
  const auto g = parse_o3g(text);
  return {g.triples().begin(), g.triples().end()};
}

}  // namespace

int dispatch(const std::vector<std::string>& args, Streams io) {
  CLI::App app{"Cycles, girth and constructions for oriented 3-graphs", "trigirth"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings settings;
  app.add_flag("--porcelain", settings.porcelain, "Print key=value lines instead of prose");
  app.add_option("--jobs,-j", settings.jobs, "Concurrent feasibility queries")->check(CLI::Range(1u, 256u));

  std::function<int()> run;

  // gen
  std::string gen_kind, gen_out = "-", gen_star_out;
  int gen_k = 0;
  auto* gen = app.add_subcommand("gen", "Write a built-in construction as o3g");
  gen->add_option("kind", gen_kind, "c4 | p | s | p-iter | s-iter | k4-cycle | k7-cycle")
      ->required()
      ->check(CLI::IsMember({"c4", "p", "s", "p-iter", "s-iter", "k4-cycle", "k7-cycle"}));
  gen->add_option("K", gen_k, "Iteration count for p-iter / s-iter")->check(CLI::Range(0, 64));
  gen->add_option("-o,--output", gen_out, "Output path ('-' for stdout)");
  gen->add_option("--star-out", gen_star_out, "Also write the exported star system");
  gen->callback([&] {
    run = [&]() -> int {
      OrientedThreeGraph g;
      std::optional<StarSystem> star;
      std::vector<std::string> comments{"trigirth gen " + gen_kind +
                                        (gen_kind.ends_with("-iter") ? " " + std::to_string(gen_k) : "")};
      if (gen_kind == "c4") {
        g = directed_four_set();
        star = StarSystem{1, {{2, 3}}};
      } else if (gen_kind == "p" || gen_kind == "s") {
        const auto kind = gen_kind == "p" ? GadgetKind::P : GadgetKind::S;
        g = gadget(kind);
        comments.push_back("labels " + gadget_legend(kind));
      } else if (gen_kind == "p-iter" || gen_kind == "s-iter") {
        const auto kind = gen_kind == "p-iter" ? GadgetKind::P : GadgetKind::S;
        auto it = iterate(kind, gen_k);
        g = std::move(it.graph);
        star = std::move(it.star);
      } else {
        const auto rot = gen_kind == "k4-cycle" ? builtin_k4_rotation() : builtin_k7_rotation();
        g = cycle_from_triangulation(faces_from_rotation(rot));
      }
      comments.push_back("vertices " + std::to_string(g.vertex_count()) + ", triples " + std::to_string(g.size()));
      write_text(gen_out, emit_o3g(g, comments), io.out);
      if (!gen_star_out.empty()) {
        if (!star) throw UsageError("'" + gen_kind + "' has no exported star system");
        write_text(gen_star_out, emit_star(*star), io.out);
      }
      return 0;
    };
  });

  // girth
  std::string girth_file = "-", girth_cert;
  std::uint64_t max_nodes = GirthBudget{}.max_nodes;
  auto* girth_cmd = app.add_subcommand("girth", "Shortest cycle length");
  girth_cmd->add_option("FILE", girth_file, "o3g input ('-' for stdin)");
  girth_cmd->add_option("--max-nodes", max_nodes, "Branch-and-bound node budget");
  girth_cmd->add_option("--cert-out", girth_cert, "Write the certificate here");
  girth_cmd->callback([&] {
    run = [&]() -> int {
      const auto g = parse_o3g(read_text(girth_file, io.in));
      const auto r = girth(g, GirthBudget{max_nodes}, settings.jobs);
      Report report;
      report.add("vertices", g.vertex_count());
      report.add("triples", g.size());
      report.add("status", to_string(r.status));
      if (r.status != GirthStatus::NoCycle) {
        report.add("girth", r.girth);
        report.add("method", r.method);
        report.add("explored", r.explored);
        report.add("max_nodes", r.budget.max_nodes);
        report.add("upper_bound", r.upper_bound);
        report.add("within_upper_bound", yes_no(static_cast<std::int64_t>(r.girth) <= r.upper_bound));
        emit_certificate(report, girth_cert, emit_cycle_certificate(*r.certificate), io.out);
      } else {
        const auto search = find_cycle(g);
        if (search.refutation) {
          emit_certificate(report, girth_cert, emit_farkas(IncidenceMatrix(g), *search.refutation), io.out);
        }
      }
      report.print(io.out, settings.porcelain);
      return r.status == GirthStatus::Exact ? 0 : 1;
    };
  });

  // has-cycle
  std::string has_file = "-", has_cert;
  auto* has = app.add_subcommand("has-cycle", "Decide whether any cycle exists");
  has->add_option("FILE", has_file, "o3g input ('-' for stdin)");
  has->add_option("--cert-out", has_cert, "Write the cycle or Farkas certificate here");
  has->callback([&] {
    run = [&]() -> int {
      const auto g = parse_o3g(read_text(has_file, io.in));
      const auto search = find_cycle(g);
      Report report;
      report.add("has_cycle", yes_no(bool(search)));
      if (search) {
        report.add("length", search.cycle->length());
        emit_certificate(report, has_cert, emit_cycle_certificate(*search.cycle), io.out);
      } else if (search.refutation) {
        emit_certificate(report, has_cert, emit_farkas(IncidenceMatrix(g), *search.refutation), io.out);
      }
      report.print(io.out, settings.porcelain);
      return search ? 0 : 1;
    };
  });

  // verify-cycle
  std::string verify_file = "-", verify_cert;
  auto* verify = app.add_subcommand("verify-cycle", "Check a cycle certificate exactly");
  verify->add_option("FILE", verify_file, "o3g input ('-' for stdin)");
  verify->add_option("--cert", verify_cert, "cyc certificate")->required();
  verify->callback([&] {
    run = [&]() -> int {
      const auto g = parse_o3g(read_text(verify_file, io.in));
      const auto cert = parse_cycle_certificate(read_text(verify_cert, io.in));
      const bool ok = check_certificate(g, cert);
      Report report;
      report.add("valid", yes_no(ok));
      report.add("length", cert.length());
      report.print(io.out, settings.porcelain);
      return ok ? 0 : 1;
    };
  });

  // single-cycle
  std::string single_file = "-", single_cert;
  auto* single = app.add_subcommand("single-cycle", "Check that the only cycle is the whole triple set");
  single->add_option("FILE", single_file, "o3g input ('-' for stdin)");
  single->add_option("--cert-out", single_cert, "Write the deciding certificate here");
  single->callback([&] {
    run = [&]() -> int {
      const auto g = parse_o3g(read_text(single_file, io.in));
      const auto r = check_single_cycle(g, settings.jobs);
      Report report;
      report.add("single_cycle", yes_no(r.single));
      report.add("triples", g.size());
      report.add("vertices", g.vertex_count());
      report.add("refutations_checked", r.refutations);
      if (r.single) {
        emit_certificate(report, single_cert, emit_cycle_certificate(*r.full), io.out);
      } else if (r.proper) {
        report.add("reason", "proper sub-cycle of length " + std::to_string(r.proper->length()));
        emit_certificate(report, single_cert, emit_cycle_certificate(*r.proper), io.out);
      } else {
        report.add("reason", "the triple set is not a cycle");
        const auto whole = is_cycle(g, g.triples());
        if (whole.refutation) {
          emit_certificate(report, single_cert, emit_farkas(IncidenceMatrix(g), *whole.refutation), io.out);
        }
      }
      report.print(io.out, settings.porcelain);
      return r.single ? 0 : 1;
    };
  });

  // only-cycle
  std::string only_file = "-", only_support, only_cert;
  auto* only = app.add_subcommand("only-cycle", "Check that a given support is the graph's only cycle");
  only->add_option("FILE", only_file, "o3g input ('-' for stdin)");
  only->add_option("--support", only_support, "o3g or cyc file listing the support triples")->required();
  only->add_option("--cert-out", only_cert, "Write the deciding certificate here");
  only->callback([&] {
    run = [&]() -> int {
      const auto g = parse_o3g(read_text(only_file, io.in));
      const auto support = parse_support(read_text(only_support, io.in));
      const auto r = check_only_cycle(g, support, settings.jobs);
      Report report;
      report.add("only_cycle", yes_no(r.holds));
      report.add("support", support.size());
      report.add("refutations_checked", r.refutations);
      if (!r.reason.empty()) report.add("reason", r.reason);
      if (r.holds) {
        emit_certificate(report, only_cert, emit_cycle_certificate(*r.cycle), io.out);
      } else if (r.other) {
        emit_certificate(report, only_cert, emit_cycle_certificate(*r.other), io.out);
      }
      report.print(io.out, settings.porcelain);
      return r.holds ? 0 : 1;
    };
  });

  // rank
  std::string rank_file = "-", rank_mtx;
  auto* rank = app.add_subcommand("rank", "Exact rank of the incidence matrix");
  rank->add_option("FILE", rank_file, "o3g input ('-' for stdin)");
  rank->add_option("--mtx-out", rank_mtx, "Dump the incidence matrix");
  rank->callback([&] {
    run = [&]() -> int {
      const auto g = parse_o3g(read_text(rank_file, io.in));
      const IncidenceMatrix m(g);
      const auto k = rank_and_kernel(m);
      Report report;
      report.add("rows", m.rows());
      report.add("cols", m.cols());
      report.add("rank", k.rank);
      report.add("kernel_dim", k.kernel_basis.size());
      report.add("rank_bound", rank_upper_bound(g.vertex_count()));
      report.add("within_rank_bound", yes_no(static_cast<std::int64_t>(k.rank) <= rank_upper_bound(g.vertex_count())));
      if (!rank_mtx.empty()) write_text(rank_mtx, emit_mtx(m), io.out);
      report.print(io.out, settings.porcelain);
      return 0;
    };
  });

  // null-vectors
  int null_n = 0;
  auto* nulls = app.add_subcommand("null-vectors", "Vectors orthogonal to every incidence column");
  nulls->add_option("N", null_n, "Vertex count")->required()->check(CLI::Range(2, 2000));
  nulls->callback([&] {
    run = [&]() -> int {
      const IncidenceMatrix layout{OrientedThreeGraph(null_n)};
      io.out << "# rows";
      for (std::size_t r = 0; r < layout.rows(); ++r) {
        auto [i, j] = layout.row_pair(r);
        io.out << ' ' << i << '-' << j;
      }
      io.out << '\n';
      const auto vectors = lemma_rank_null_vectors(null_n);
      for (std::size_t i = 0; i < vectors.size(); ++i) {
        io.out << "x " << i + 1;
        for (int v : vectors[i]) io.out << ' ' << v;
        io.out << '\n';
      }
      return 0;
    };
  });

  // complete
  std::string complete_file = "-", complete_out = "-", complete_cert;
  auto* complete = app.add_subcommand("complete", "Orient all remaining 3-sets keeping the only cycle");
  complete->add_option("FILE", complete_file, "o3g input ('-' for stdin)");
  complete->add_option("-o,--output", complete_out, "Output path ('-' for stdout)");
  complete->add_option("--cert-out", complete_cert, "Where to write the offending cycle on failure");
  complete->callback([&] {
    run = [&]() -> int {
      const auto g = parse_o3g(read_text(complete_file, io.in));
      std::ostream& log = complete_out == "-" ? io.err : io.out;
      Report report;
      try {
        const auto t = complete_to_tournament(g, settings.jobs);
        write_text(complete_out, emit_o3g(t), io.out);
        report.add("tournament", yes_no(t.is_tournament()));
        report.add("triples", t.size());
        report.add("added", t.size() - g.size());
        report.add("only_cycle", "yes");
        report.print(log, settings.porcelain);
        return 0;
      } catch (const HypothesisViolated& e) {
        report.add("hypothesis", "violated");
        report.add("reason", e.what());
        if (e.certificate()) emit_certificate(report, complete_cert, emit_cycle_certificate(*e.certificate()), io.out);
        report.print(log, settings.porcelain);
        return 1;
      }
    };
  });

  // attach
  std::string attach_file = "-", attach_gadget, attach_star, attach_out = "-", attach_star_out;
  bool attach_unchecked = false;
  auto* att = app.add_subcommand("attach", "Attach gadget copies along a star system");
  att->add_option("FILE", attach_file, "o3g input ('-' for stdin)");
  att->add_option("--gadget", attach_gadget, "p | s")->required()->check(CLI::IsMember({"p", "s"}));
  att->add_option("--star", attach_star, "star file")->required();
  att->add_option("-o,--output", attach_out, "Output path ('-' for stdout)");
  att->add_option("--star-out", attach_star_out, "Write the exported star system");
  att->add_flag("--no-check", attach_unchecked, "Skip the single-cycle precondition check");
  att->callback([&] {
    run = [&]() -> int {
      const auto g = parse_o3g(read_text(attach_file, io.in));
      const auto star = parse_star(read_text(attach_star, io.in));
      AttachOptions options;
      options.check_single_cycle = !attach_unchecked;
      options.jobs = settings.jobs;
      const auto r = attach(g, attach_gadget == "p" ? GadgetKind::P : GadgetKind::S, star, options);
      write_text(attach_out, emit_o3g(r.graph), io.out);
      if (!attach_star_out.empty()) write_text(attach_star_out, emit_star(r.star), io.out);
      Report report;
      report.add("vertices", r.graph.vertex_count());
      report.add("triples", r.graph.size());
      report.add("star_size", r.star.size());
      report.print(attach_out == "-" ? io.err : io.out, settings.porcelain);
      return 0;
    };
  });

  // reduce
  std::string reduce_file = "-", reduce_cert, reduce_out = "-";
  auto* red = app.add_subcommand("reduce", "Shrink a cycle certificate to support <= rank + 1");
  red->add_option("FILE", reduce_file, "o3g input ('-' for stdin)");
  red->add_option("--cert", reduce_cert, "cyc certificate")->required();
  red->add_option("-o,--output", reduce_out, "Output path ('-' for stdout)");
  red->callback([&] {
    run = [&]() -> int {
      const auto g = parse_o3g(read_text(reduce_file, io.in));
      const auto cert = parse_cycle_certificate(read_text(reduce_cert, io.in));
      const IncidenceMatrix m(g);
      const auto reduced = caratheodory_reduce(m, cert);
      const auto support_rank = rank_and_kernel(m, support_columns(m, cert)).rank;
      write_text(reduce_out, emit_cycle_certificate(reduced), io.out);
      Report report;
      report.add("input_length", cert.length());
      report.add("output_length", reduced.length());
      report.add("support_rank", support_rank);
      report.print(reduce_out == "-" ? io.err : io.out, settings.porcelain);
      return 0;
    };
  });

  // faces
  std::string faces_file = "-", faces_o3g;
  auto* faces = app.add_subcommand("faces", "Trace the faces of a rotation system");
  faces->add_option("ROTFILE", faces_file, "rot input ('-' for stdin)");
  faces->add_option("--o3g-out", faces_o3g, "Write the uniformly oriented face cycle (triangulations only)");
  faces->callback([&] {
    run = [&]() -> int {
      const auto rot = parse_rotation(read_text(faces_file, io.in));
      const auto f = faces_from_rotation(rot);
      Report report;
      report.add("vertices", f.vertices);
      report.add("edges", f.edges);
      report.add("faces", f.faces.size());
      report.add("euler_characteristic", f.euler_characteristic());
      report.add("triangulation", yes_no(f.all_triangles()));
      std::ostringstream listing;
      for (const auto& face : f.faces) {
        listing << "f";
        for (VertexId v : face) listing << ' ' << v;
        listing << '\n';
      }
      report.attach(listing.str());
      if (!faces_o3g.empty()) write_text(faces_o3g, emit_o3g(cycle_from_triangulation(f)), io.out);
      report.print(io.out, settings.porcelain);
      return 0;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, io.out, io.err);
    return code == 0 ? 0 : 2;
  }

  try {
    return run();
  } catch (const UsageError& e) {
    io.err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    io.err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace trigirth::cli
