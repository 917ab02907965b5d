#include <algorithm>

#include "trigirth/solver.hpp"

namespace trigirth {

namespace {

bool parallel(const std::vector<Rational>& u, const std::vector<Rational>& v) {
  // u, v parallel iff all 2x2 minors vanish.
  std::size_t p = 0;
  while (p < u.size() && u[p] == 0) ++p;
  if (p == u.size()) return true;
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (u[p] * v[j] != u[j] * v[p]) return false;
  }
  return true;
}

}  // namespace

CycleCertificate caratheodory_reduce(const IncidenceMatrix& m, const CycleCertificate& cert) {
  if (!check_certificate(m, cert)) {
    throw Error(ErrorKind::InvalidCertificate, "input is not a valid cycle certificate for this matrix");
  }
  std::vector<std::size_t> cols = support_columns(m, cert);
  std::vector<Rational> alpha;
  alpha.reserve(cols.size());
  for (const auto& [t, w] : cert.weights) alpha.push_back(w);

  for (;;) {
    const auto kernel = rank_and_kernel(m, cols);
    if (kernel.kernel_basis.size() <= 1) break;

    const std::vector<Rational>* dir = nullptr;
    for (const auto& v : kernel.kernel_basis) {
      if (!parallel(alpha, v)) {
        dir = &v;
        break;
      }
    }
    // Two independent kernel vectors cannot both be parallel to alpha.
    std::vector<Rational> v = *dir;
    if (std::none_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) > 0; })) {
      for (auto& x : v) x = -x;
    }

    // Largest step keeping alpha - t v >= 0; first minimizer wins ties.
    std::size_t hit = v.size();
    Rational step;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (sgn(v[j]) <= 0) continue;
      Rational ratio = alpha[j] / v[j];
      if (hit == v.size() || ratio < step) {
        hit = j;
        step = std::move(ratio);
      }
    }

    std::vector<std::size_t> next_cols;
    std::vector<Rational> next_alpha;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      Rational a = alpha[j] - step * v[j];
      if (j == hit) a = 0;
      if (sgn(a) > 0) {
        next_cols.push_back(cols[j]);
        next_alpha.push_back(std::move(a));
      }
    }
    cols = std::move(next_cols);
    alpha = std::move(next_alpha);
  }

  CycleCertificate out;
  for (std::size_t j = 0; j < cols.size(); ++j) out.weights.emplace(m.column_triple(cols[j]), alpha[j]);
  return normalized(std::move(out));
}

}  // namespace trigirth
