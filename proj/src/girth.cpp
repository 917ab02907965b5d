#include <algorithm>

#include "analysis_detail.hpp"
#include "parallel.hpp"

namespace trigirth {

namespace {

struct BudgetExhausted {};

// Depth-first enumeration of k-subsets of columns in canonical order. A
// partial choice survives only if (i) every row it touches with one sign can
// still receive the other sign from a later column, and (ii) some cycle
// contains the whole choice while avoiding every skipped column.
class SupportSearch {
 public:
  SupportSearch(const IncidenceMatrix& m, std::uint64_t max_nodes, std::uint64_t& explored)
      : m_(m), max_nodes_(max_nodes), explored_(explored), pos_(m.rows(), 0), neg_(m.rows(), 0),
        last_pos_(m.rows(), -1), last_neg_(m.rows(), -1) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      for (const auto& e : m.column(j)) {
        auto& last = e.sign > 0 ? last_pos_ : last_neg_;
        last[e.row] = static_cast<long>(j);
      }
    }
  }

  std::optional<CycleCertificate> run(std::size_t k) {
    k_ = k;
    chosen_.clear();
    result_.reset();
    descend(0);
    return std::move(result_);
  }

 private:
  bool descend(std::size_t start) {
    const std::size_t n = m_.cols();
    for (std::size_t i = start; i < n; ++i) {
      if (n - i < k_ - chosen_.size()) break;
      if (++explored_ > max_nodes_) throw BudgetExhausted{};
      push(i);
      const bool leaf = chosen_.size() == k_;
      bool ok = signs_can_close(leaf ? n : i + 1);
      if (ok) {
        if (leaf) {
          ok = leaf_is_cycle();
          if (ok) return true;
        } else if (relaxation_feasible(i + 1) && descend(i + 1)) {
          return true;
        }
      }
      pop(i);
    }
    return false;
  }

  void push(std::size_t j) {
    chosen_.push_back(j);
    for (const auto& e : m_.column(j)) ++(e.sign > 0 ? pos_ : neg_)[e.row];
  }
  void pop(std::size_t j) {
    chosen_.pop_back();
    for (const auto& e : m_.column(j)) --(e.sign > 0 ? pos_ : neg_)[e.row];
  }

  bool signs_can_close(std::size_t next) const {
    const long bound = static_cast<long>(next);
    for (auto j : chosen_) {
      for (const auto& e : m_.column(j)) {
        if (pos_[e.row] > 0 && neg_[e.row] == 0 && last_neg_[e.row] < bound) return false;
        if (neg_[e.row] > 0 && pos_[e.row] == 0 && last_pos_[e.row] < bound) return false;
      }
    }
    return true;
  }

  FeasibilityQuery query(std::size_t next) const {
    FeasibilityQuery q;
    q.lower = chosen_;
    std::size_t c = 0;
    for (std::size_t j = 0; j < next; ++j) {
      if (c < chosen_.size() && chosen_[c] == j) {
        ++c;
      } else {
        q.zero.push_back(j);
      }
    }
    return q;
  }

  bool relaxation_feasible(std::size_t next) const {
    auto r = detail::verified_feasible(m_, query(next));
    return std::holds_alternative<FeasibleWitness>(r);
  }

  bool leaf_is_cycle() {
    auto r = detail::verified_feasible(m_, query(m_.cols()));
    if (auto* x = std::get_if<FeasibleWitness>(&r)) {
      result_ = certificate_from_witness(m_, *x);
      return true;
    }
    return false;
  }

  const IncidenceMatrix& m_;
  std::uint64_t max_nodes_;
  std::uint64_t& explored_;
  std::size_t k_ = 0;
  std::vector<std::size_t> chosen_;
  std::vector<int> pos_, neg_;
  std::vector<long> last_pos_, last_neg_;
  std::optional<CycleCertificate> result_;
};

}  // namespace

GirthReport girth(const OrientedThreeGraph& g, GirthBudget budget, unsigned jobs) {
  GirthReport report;
  report.budget = budget;
  const int n = g.vertex_count();
  report.upper_bound = n >= 1 ? static_cast<std::int64_t>(n - 1) * (n - 2) / 2 + 1 : 1;

  auto any = find_cycle(g);
  if (!any) {
    report.status = GirthStatus::NoCycle;
    report.method = "farkas";
    return report;
  }

  auto single = check_single_cycle(g, jobs);
  if (single.single) {
    report.status = GirthStatus::Exact;
    report.girth = g.size();
    report.certificate = std::move(single.full);
    report.method = "single-cycle";
    return report;
  }

  // Triples lying on no cycle cannot be in a shortest one.
  const IncidenceMatrix full(g);
  std::vector<std::optional<CycleCertificate>> through(full.cols());
  detail::run_indexed(full.cols(), jobs, [&](std::size_t j) {
    FeasibilityQuery q;
    q.lower = {j};
    auto r = detail::to_search(full, detail::verified_feasible(full, q));
    through[j] = std::move(r.cycle);
    return false;
  });

  CycleCertificate best = caratheodory_reduce(full, *any.cycle);
  std::vector<OrientedTriple> usable;
  for (std::size_t j = 0; j < full.cols(); ++j) {
    if (!through[j]) continue;
    usable.push_back(full.column_triple(j));
    if (through[j]->length() < best.length()) best = *through[j];
  }

  const auto restricted = g.restricted_to(usable);
  const IncidenceMatrix m(restricted);
  SupportSearch search(m, budget.max_nodes, report.explored);
  report.method = "branch-and-bound";
  try {
    for (std::size_t k = 3; k < best.length(); ++k) {
      if (auto cert = search.run(k)) {
        report.status = GirthStatus::Exact;
        report.girth = k;
        report.certificate = std::move(cert);
        return report;
      }
    }
  } catch (const BudgetExhausted&) {
    report.status = GirthStatus::UnknownAtBudget;
    report.girth = best.length();
    report.certificate = std::move(best);
    return report;
  }
  report.status = GirthStatus::Exact;
  report.girth = best.length();
  report.certificate = std::move(best);
  return report;
}

}  // namespace trigirth
