#include "simplex.hpp"

#include <limits>

namespace trigirth::detail {

PhaseOneResult solve_phase_one(std::size_t m, const std::vector<SparseColumn>& columns,
                               const std::vector<Rational>& b) {
  const std::size_t n = columns.size();
  const std::size_t width = n + m + 1;
  const std::size_t rhs = n + m;

  // Rows are flipped so the right-hand side is non-negative; sigma records it.
  std::vector<int> sigma(m, 1);
  for (std::size_t i = 0; i < m; ++i) {
    if (sgn(b[i]) < 0) sigma[i] = -1;
  }

  std::vector<std::vector<Rational>> t(m + 1, std::vector<Rational>(width, 0));
  std::vector<std::size_t> basis(m);
  for (std::size_t j = 0; j < n; ++j) {
    for (auto [row, v] : columns[j]) t[row][j] = sigma[row] * v;
  }
  for (std::size_t i = 0; i < m; ++i) {
    t[i][n + i] = 1;
    t[i][rhs] = sigma[i] < 0 ? Rational(-b[i]) : b[i];
    basis[i] = n + i;
  }
  // Objective row holds reduced costs of min sum(artificials); its rhs slot
  // holds minus the current objective value.
  auto& obj = t[m];
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (t[i][j] != 0) obj[j] -= t[i][j];
    }
    obj[rhs] -= t[i][rhs];
  }

  PhaseOneResult result;
  std::vector<std::size_t> nz;
  nz.reserve(width);
  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < n + m; ++j) {
      if (sgn(obj[j]) < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;

    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(t[i][enter]) <= 0) continue;
      Rational ratio = t[i][rhs] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = std::move(ratio);
      }
    }
    // Phase one is bounded below by zero, so some row always qualifies.
    if (leave == m) break;

    auto& pr = t[leave];
    const Rational piv = pr[enter];
    nz.clear();
    for (std::size_t j = 0; j < width; ++j) {
      if (sgn(pr[j]) != 0) {
        pr[j] /= piv;
        nz.push_back(j);
      }
    }
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || sgn(t[i][enter]) == 0) continue;
      const Rational f = t[i][enter];
      auto& row = t[i];
      for (std::size_t j : nz) row[j] -= f * pr[j];
    }
    basis[leave] = enter;
    ++result.pivots;
  }

  if (sgn(obj[rhs]) == 0) {
    result.feasible = true;
    result.x.assign(n, 0);
    for (std::size_t i = 0; i < m; ++i) {
      if (basis[i] < n) result.x[basis[i]] = t[i][rhs];
    }
  } else {
    // Reduced cost of artificial i is 1 - y_i, with y the phase-one duals of
    // the flipped system; z = -sigma * y refutes the original one.
    result.z.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      Rational y = 1 - obj[n + i];
      result.z[i] = sigma[i] > 0 ? Rational(-y) : y;
    }
  }
  return result;
}

}  // namespace trigirth::detail
