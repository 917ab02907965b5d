#include "trigirth/solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "simplex.hpp"

namespace trigirth {

namespace {

void validate_query(const IncidenceMatrix& m, const FeasibilityQuery& q) {
  if (q.lower.empty()) throw std::invalid_argument("feasibility query needs a non-empty anchor set");
  std::vector<char> role(m.cols(), 0);
  for (auto j : q.zero) {
    if (j >= m.cols()) throw std::invalid_argument("zero-set column out of range");
    role[j] = 1;
  }
  for (auto j : q.lower) {
    if (j >= m.cols()) throw std::invalid_argument("anchor column out of range");
    if (role[j] == 1) throw std::invalid_argument("column in both zero and anchor sets");
  }
}

std::vector<Rational> row_combination(const IncidenceMatrix& m, const std::vector<Rational>& y) {
  std::vector<Rational> c(m.cols(), 0);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (const auto& e : m.column(j)) {
      if (y[e.row] != 0) c[j] += e.sign * y[e.row];
    }
  }
  return c;
}

std::string show(const OrientedTriple& t) {
  return std::to_string(t[0]) + " " + std::to_string(t[1]) + " " + std::to_string(t[2]);
}

}  // namespace

FeasibilityResult feasible(const IncidenceMatrix& m, const FeasibilityQuery& q) {
  validate_query(m, q);

  std::vector<char> is_zero(m.cols(), 0), is_lower(m.cols(), 0);
  for (auto j : q.zero) is_zero[j] = 1;
  for (auto j : q.lower) is_lower[j] = 1;

  std::vector<std::size_t> active;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (!is_zero[j]) active.push_back(j);
  }

  // Right-hand side over the full row space; for EachAtLeastOne the anchored
  // variables are shifted x = 1 + s, moving their columns to the right.
  std::vector<Rational> rhs_full(m.rows(), 0);
  if (q.anchor == Anchor::EachAtLeastOne) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!is_lower[j]) continue;
      for (const auto& e : m.column(j)) rhs_full[e.row] -= e.sign;
    }
  }

  // Keep only rows touched by an active column or carrying a non-zero rhs.
  std::vector<std::size_t> compact(m.rows(), SIZE_MAX);
  std::vector<std::size_t> kept;
  auto keep = [&](std::size_t r) {
    if (compact[r] == SIZE_MAX) {
      compact[r] = kept.size();
      kept.push_back(r);
    }
  };
  for (auto j : active) {
    for (const auto& e : m.column(j)) keep(e.row);
  }
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (rhs_full[r] != 0) keep(r);
  }
  std::sort(kept.begin(), kept.end());
  for (std::size_t i = 0; i < kept.size(); ++i) compact[kept[i]] = i;

  std::size_t rows = kept.size();
  const bool sum_row = q.anchor == Anchor::SumAtLeastOne;
  if (sum_row) ++rows;

  std::vector<detail::SparseColumn> cols;
  cols.reserve(active.size() + (sum_row ? 1 : 0));
  for (auto j : active) {
    detail::SparseColumn col;
    for (const auto& e : m.column(j)) col.emplace_back(compact[e.row], e.sign);
    if (sum_row && is_lower[j]) col.emplace_back(rows - 1, 1);
    cols.push_back(std::move(col));
  }
  if (sum_row) cols.push_back({{rows - 1, -1}});  // surplus

  std::vector<Rational> b(rows, 0);
  for (std::size_t i = 0; i < kept.size(); ++i) b[i] = rhs_full[kept[i]];
  if (sum_row) b[rows - 1] = 1;

  auto solved = detail::solve_phase_one(rows, cols, b);

  if (solved.feasible) {
    FeasibleWitness w;
    w.x.assign(m.cols(), 0);
    for (std::size_t k = 0; k < active.size(); ++k) {
      w.x[active[k]] = solved.x[k];
      if (!sum_row && is_lower[active[k]]) w.x[active[k]] += 1;
    }
    Rational smallest = 0;
    for (const auto& v : w.x) {
      if (sgn(v) > 0 && (smallest == 0 || v < smallest)) smallest = v;
    }
    for (auto& v : w.x) v /= smallest;
    return w;
  }

  // The surplus column gives -z_sum >= 0, the anchor row's multiplier is
  // negative, so the incidence part alone is the certificate.
  std::vector<Rational> y(m.rows(), 0);
  for (std::size_t i = 0; i < kept.size(); ++i) y[kept[i]] = solved.z[i];
  return InfeasibleWitness{primitive_integer_scaling(y)};
}

bool check_witness(const IncidenceMatrix& m, const FeasibilityQuery& q, const FeasibleWitness& w) {
  if (w.x.size() != m.cols()) {
    throw Error(ErrorKind::DimensionMismatch,
                "witness has " + std::to_string(w.x.size()) + " entries, matrix has " +
                    std::to_string(m.cols()) + " columns");
  }
  for (const auto& v : w.x) {
    if (sgn(v) < 0) return false;
  }
  for (auto j : q.zero) {
    if (j >= m.cols() || w.x[j] != 0) return false;
  }
  if (q.lower.empty()) return false;
  Rational anchored = 0;
  for (auto j : q.lower) {
    if (j >= m.cols()) return false;
    if (q.anchor == Anchor::EachAtLeastOne && w.x[j] < 1) return false;
    anchored += w.x[j];
  }
  if (anchored < 1) return false;
  std::vector<Rational> ax(m.rows(), 0);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (w.x[j] == 0) continue;
    for (const auto& e : m.column(j)) ax[e.row] += e.sign * w.x[j];
  }
  return std::all_of(ax.begin(), ax.end(), [](const Rational& v) { return v == 0; });
}

bool check_witness(const IncidenceMatrix& m, const FeasibilityQuery& q, const InfeasibleWitness& w) {
  if (w.y.size() != m.rows()) {
    throw Error(ErrorKind::DimensionMismatch,
                "Farkas witness has " + std::to_string(w.y.size()) + " entries, matrix has " +
                    std::to_string(m.rows()) + " rows");
  }
  if (q.lower.empty()) return false;
  std::vector<char> is_zero(m.cols(), 0);
  for (auto j : q.zero) {
    if (j >= m.cols()) return false;
    is_zero[j] = 1;
  }
  const auto c = row_combination(m, w.y);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (!is_zero[j] && sgn(c[j]) < 0) return false;
  }
  Rational anchored = 0;
  for (auto j : q.lower) {
    if (j >= m.cols() || is_zero[j]) return false;
    if (q.anchor == Anchor::SumAtLeastOne && sgn(c[j]) <= 0) return false;
    anchored += c[j];
  }
  return sgn(anchored) > 0;
}

bool check_witness(const IncidenceMatrix& m, const FeasibilityQuery& q, const FeasibilityResult& w) {
  return std::visit([&](const auto& v) { return check_witness(m, q, v); }, w);
}

std::vector<OrientedTriple> CycleCertificate::support() const {
  std::vector<OrientedTriple> out;
  out.reserve(weights.size());
  for (const auto& [t, w] : weights) out.push_back(t);
  return out;
}

std::vector<std::size_t> support_columns(const IncidenceMatrix& m, const CycleCertificate& cert) {
  const auto triples = m.column_triples();
  std::vector<std::size_t> cols;
  cols.reserve(cert.weights.size());
  for (const auto& [t, w] : cert.weights) {
    auto it = std::lower_bound(triples.begin(), triples.end(), t);
    if (it == triples.end() || *it != t) throw Error(ErrorKind::UnknownTriple, show(t));
    cols.push_back(static_cast<std::size_t>(it - triples.begin()));
  }
  return cols;
}

bool check_certificate(const IncidenceMatrix& m, const CycleCertificate& cert) {
  if (cert.weights.empty()) return false;
  std::vector<std::size_t> cols;
  try {
    cols = support_columns(m, cert);
  } catch (const Error&) {
    return false;
  }
  std::vector<Rational> sum(m.rows(), 0);
  std::size_t k = 0;
  for (const auto& [t, w] : cert.weights) {
    if (sgn(w) <= 0) return false;
    for (const auto& e : m.column(cols[k])) sum[e.row] += e.sign * w;
    ++k;
  }
  return std::all_of(sum.begin(), sum.end(), [](const Rational& v) { return v == 0; });
}

bool check_certificate(const OrientedThreeGraph& g, const CycleCertificate& cert) {
  return check_certificate(IncidenceMatrix(g), cert);
}

CycleCertificate certificate_from_witness(const IncidenceMatrix& m, const FeasibleWitness& w) {
  CycleCertificate cert;
  for (std::size_t j = 0; j < m.cols() && j < w.x.size(); ++j) {
    if (sgn(w.x[j]) > 0) cert.weights.emplace(m.column_triple(j), w.x[j]);
  }
  return normalized(std::move(cert));
}

CycleCertificate normalized(CycleCertificate cert) {
  if (cert.weights.empty()) return cert;
  Rational smallest = cert.weights.begin()->second;
  for (const auto& [t, w] : cert.weights) {
    if (w < smallest) smallest = w;
  }
  if (sgn(smallest) <= 0) return cert;
  for (auto& [t, w] : cert.weights) w /= smallest;
  return cert;
}

}  // namespace trigirth
