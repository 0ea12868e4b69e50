#include "arcflow/arcset.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace arcflow {

ArcSetInstance::ArcSetInstance(std::vector<Int> demands, std::vector<Int> capacities,
                               Int existing)
    : demands_(std::move(demands)), capacities_(std::move(capacities)), existing_(existing) {
  if (capacities_.empty()) throw std::invalid_argument("arc set needs at least one facility");
  for (Int a : demands_)
    if (a <= 0) throw std::invalid_argument("demands must be positive");
  for (Int b : capacities_)
    if (b <= 0) throw std::invalid_argument("capacities must be positive");
  if (!std::is_sorted(capacities_.begin(), capacities_.end()))
    std::sort(capacities_.begin(), capacities_.end());
  total_demand_ = std::accumulate(demands_.begin(), demands_.end(), Int{0});
  if (total_demand_ - existing_ <= 0)
    throw std::invalid_argument("capacity constraint is redundant (a.1 - c <= 0)");
}

double CutInequality::lhs_minus_rhs(const FracPoint& p) const {
  double v = -gamma;
  for (std::size_t q = 0; q < alpha.size(); ++q) v += alpha[q] * p.x[q];
  for (std::size_t t = 0; t < beta.size(); ++t) v -= beta[t] * p.y[t];
  return v;
}

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::TrivialBound: return "TrivialBound";
    case Provenance::ClosedFormP5: return "ClosedFormP5";
    case Provenance::ClosedFormP6: return "ClosedFormP6";
    case Provenance::ClosedFormP7: return "ClosedFormP7";
    case Provenance::ClosedFormP8: return "ClosedFormP8";
    case Provenance::RowGeneration: return "RowGeneration";
  }
  return "?";
}

Int rho(const ArcSetInstance& inst, const std::vector<Int>& x, std::size_t t) {
  Int load = -inst.existing();
  for (std::size_t q = 0; q < x.size(); ++q) load += inst.demands()[q] * x[q];
  if (load <= 0) return 0;
  return ceil_div(load, inst.capacities()[t]);
}

Int r_value(const ArcSetInstance& inst) {
  Int c = inst.existing();
  if (c >= 0) return 0;
  return ceil_div(-c, inst.capacities()[0]);
}

std::size_t d_index(const FracPoint& point) {
  if (point.x.empty()) throw std::invalid_argument("d_index needs |Q| >= 1");
  std::size_t best = 0;
  for (std::size_t q = 1; q < point.x.size(); ++q)
    if (point.x[q] > point.x[best]) best = q;
  return best;
}

std::vector<std::size_t> q_tilde(const FracPoint& point) {
  if (point.y.size() < 2) throw std::invalid_argument("q_tilde needs |T| >= 2");
  double rest = 0.0;
  for (std::size_t t = 1; t < point.y.size(); ++t) rest += point.y[t];
  std::vector<std::size_t> out;
  for (std::size_t q = 0; q < point.x.size(); ++q)
    if (point.x[q] > rest + kFeasTol) out.push_back(q);
  return out;
}

std::optional<SeparationOutcome> screen_trivial(const ArcSetInstance& inst,
                                                const FracPoint& point) {
  const std::size_t nq = inst.num_commodities();
  const std::size_t nt = inst.num_facilities();
  auto violated = [&](CutInequality cut, double amount) {
    SeparationOutcome out;
    out.verdict = Verdict::Violated;
    out.violation = amount;
    out.provenance = Provenance::TrivialBound;
    out.cut = std::move(cut);
    return out;
  };

  for (std::size_t q = 0; q < nq; ++q) {
    if (point.x[q] > 1.0 + kFeasTol) {
      // x_q <= 1, written as x_q <= 0.y + 1
      CutInequality cut;
      cut.alpha.assign(nq, 0.0);
      cut.beta.assign(nt, 0.0);
      cut.alpha[q] = 1.0;
      cut.gamma = 1.0;
      cut.integralized = true;
      return violated(std::move(cut), point.x[q] - 1.0);
    }
    if (point.x[q] < -kFeasTol) {
      // -x_q <= 0
      CutInequality cut;
      cut.alpha.assign(nq, 0.0);
      cut.beta.assign(nt, 0.0);
      cut.alpha[q] = -1.0;
      cut.integralized = true;
      return violated(std::move(cut), -point.x[q]);
    }
  }
  for (std::size_t t = 0; t < nt; ++t) {
    if (point.y[t] < -kFeasTol) {
      // 0 <= y_t
      CutInequality cut;
      cut.alpha.assign(nq, 0.0);
      cut.beta.assign(nt, 0.0);
      cut.beta[t] = 1.0;
      cut.integralized = true;
      return violated(std::move(cut), -point.y[t]);
    }
  }
  double lhs = 0.0;
  for (std::size_t q = 0; q < nq; ++q) lhs += double(inst.demands()[q]) * point.x[q];
  double rhs = double(inst.existing());
  for (std::size_t t = 0; t < nt; ++t) rhs += double(inst.capacities()[t]) * point.y[t];
  if (lhs > rhs + kFeasTol) {
    CutInequality cut;
    cut.alpha.reserve(nq);
    for (Int a : inst.demands()) cut.alpha.push_back(double(a));
    cut.beta.reserve(nt);
    for (Int b : inst.capacities()) cut.beta.push_back(double(b));
    cut.gamma = double(inst.existing());
    cut.integralized = true;
    return violated(std::move(cut), lhs - rhs);
  }
  return std::nullopt;
}

}  // namespace arcflow
