#include "trigirth/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace trigirth {

std::string format_rational(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  auto fail = [&] { throw Error(ErrorKind::ParseError, "bad rational '" + std::string(text) + "'"); };
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s) {
      if (ch < '0' || ch > '9') return false;
    }
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') fail();
  Integer p(std::string(num[0] == '+' ? num.substr(1) : num));
  Integer q{std::string(den)};
  if (q == 0) fail();
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::vector<Rational> primitive_integer_scaling(std::span<const Rational> v) {
  Integer lcm_den = 1;
  for (const auto& x : v) {
    if (x != 0) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
  }
  Integer g = 0;
  for (const auto& x : v) {
    if (x == 0) continue;
    Integer scaled = x.get_num() * (lcm_den / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_mpz_t());
  }
  if (g == 0) return {v.begin(), v.end()};
  std::vector<Rational> out;
  out.reserve(v.size());
  for (const auto& x : v) {
    Rational s = x * Rational(lcm_den) / Rational(g);
    s.canonicalize();
    out.push_back(s);
  }
  return out;
}

IncidenceMatrix::IncidenceMatrix(const OrientedThreeGraph& g)
    : n_(g.vertex_count()),
      row_count_(static_cast<std::size_t>(g.vertex_count()) * static_cast<std::size_t>(std::max(g.vertex_count() - 1, 0)) / 2),
      triples_(g.triples().begin(), g.triples().end()) {
  cols_.reserve(triples_.size());
  for (const auto& t : triples_) {
    std::array<ColumnEntry, 3> col{};
    const auto edges = induced_edges(t);
    for (int k = 0; k < 3; ++k) {
      col[k] = {row_index(edges[k].from, edges[k].to), edges[k].from < edges[k].to ? 1 : -1};
    }
    cols_.push_back(col);
  }
}

std::size_t IncidenceMatrix::row_index(VertexId i, VertexId j) const {
  if (i > j) std::swap(i, j);
  const auto a = static_cast<std::size_t>(i - 1);
  const auto n = static_cast<std::size_t>(n_);
  return a * n - a * (a + 1) / 2 + static_cast<std::size_t>(j - i - 1);
}

std::pair<VertexId, VertexId> IncidenceMatrix::row_pair(std::size_t r) const {
  for (VertexId i = 1; i < n_; ++i) {
    const auto width = static_cast<std::size_t>(n_ - i);
    if (r < width) return {i, i + 1 + static_cast<VertexId>(r)};
    r -= width;
  }
  return {0, 0};
}

int IncidenceMatrix::entry(std::size_t r, std::size_t c) const {
  for (const auto& e : cols_[c]) {
    if (e.row == r) return e.sign;
  }
  return 0;
}

KernelReport rank_and_kernel(std::vector<std::vector<Integer>> a, std::size_t cols) {
  const std::size_t m = a.size();
  std::vector<std::size_t> pivots;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[r]);
    const Integer& piv = a[r][c];
    for (std::size_t i = r + 1; i < m; ++i) {
      const Integer f = a[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer v = piv * a[i][j];
        if (f != 0) v -= f * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }

  KernelReport report;
  report.rank = pivots.size();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(cols, 0);
    x[f] = 1;
    for (std::size_t k = pivots.size(); k-- > 0;) {
      const std::size_t pc = pivots[k];
      Rational acc = 0;
      for (std::size_t j = pc + 1; j < cols; ++j) {
        if (x[j] != 0 && a[k][j] != 0) acc += Rational(a[k][j]) * x[j];
      }
      x[pc] = -acc / Rational(a[k][pc]);
    }
    report.kernel_basis.push_back(primitive_integer_scaling(x));
  }
  return report;
}

KernelReport rank_and_kernel(const IncidenceMatrix& m, std::span<const std::size_t> columns) {
  std::vector<std::vector<Integer>> dense(m.rows(), std::vector<Integer>(columns.size(), 0));
  std::vector<bool> touched(m.rows(), false);
  for (std::size_t k = 0; k < columns.size(); ++k) {
    for (const auto& e : m.column(columns[k])) {
      dense[e.row][k] = e.sign;
      touched[e.row] = true;
    }
  }
  // Untouched rows are zero and do not affect rank or kernel.
  std::vector<std::vector<Integer>> rows;
  for (std::size_t r = 0; r < dense.size(); ++r) {
    if (touched[r]) rows.push_back(std::move(dense[r]));
  }
  return rank_and_kernel(std::move(rows), columns.size());
}

KernelReport rank_and_kernel(const IncidenceMatrix& m) {
  std::vector<std::size_t> all(m.cols());
  for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
  return rank_and_kernel(m, all);
}

std::vector<std::vector<int>> lemma_rank_null_vectors(int n) {
  if (n < 2) return {};
  const IncidenceMatrix layout{OrientedThreeGraph(n)};
  std::vector<std::vector<int>> out;
  for (VertexId i = 1; i <= n - 1; ++i) {
    std::vector<int> x(layout.rows(), 0);
    for (VertexId k = i + 1; k <= n; ++k) x[layout.row_index(i, k)] = 1;
    for (VertexId j = 1; j < i; ++j) x[layout.row_index(j, i)] = -1;
    out.push_back(std::move(x));
  }
  return out;
}

std::int64_t rank_upper_bound(int n) {
  return static_cast<std::int64_t>(n) * (n - 1) / 2 - n + 1;
}

std::string emit_mtx(const IncidenceMatrix& m) {
  std::ostringstream out;
  out << "%%MatrixMarket matrix coordinate integer general\n";
  out << m.rows() << ' ' << m.cols() << ' ' << 3 * m.cols() << '\n';
  for (std::size_t c = 0; c < m.cols(); ++c) {
    auto col = m.column(c);
    std::array<ColumnEntry, 3> sorted{col[0], col[1], col[2]};
    std::sort(sorted.begin(), sorted.end(), [](auto& x, auto& y) { return x.row < y.row; });
    for (const auto& e : sorted) out << e.row + 1 << ' ' << c + 1 << ' ' << e.sign << '\n';
  }
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto [i, j] = m.row_pair(r);
    out << "% row " << r + 1 << " = " << i << ' ' << j << '\n';
  }
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const auto& t = m.column_triple(c);
    out << "% col " << c + 1 << " = " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  }
  return out.str();
}

}  // namespace trigirth
