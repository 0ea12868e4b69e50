#include "arcflow/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace arcflow::oracle {
namespace {
constexpr double kTightTol = 1e-7;
constexpr std::size_t kMaxPoints = 500000;

void enumerate_covers(const std::vector<Int>& caps, Int demand, std::size_t t,
                      std::vector<Int>& y, const std::function<void(const std::vector<Int>&)>& emit) {
  if (t == caps.size()) {
    Int got = 0;
    for (std::size_t i = 0; i < caps.size(); ++i) got += caps[i] * y[i];
    if (got < demand) return;
    // minimal: dropping any used module must break the cover
    for (std::size_t i = 0; i < caps.size(); ++i)
      if (y[i] > 0 && got - caps[i] >= demand) return;
    emit(y);
    return;
  }
  Int ub = demand > 0 ? ceil_div(demand, caps[t]) : 0;
  for (Int k = 0; k <= ub; ++k) {
    y[t] = k;
    enumerate_covers(caps, demand, t + 1, y, emit);
  }
  y[t] = 0;
}

// Affine rank of a point family: 1 + linear rank of differences to the first.
std::size_t affine_rank(const std::vector<std::vector<double>>& pts) {
  if (pts.empty()) return 0;
  const std::size_t dim = pts[0].size();
  std::vector<std::vector<double>> rows;
  rows.reserve(pts.size() - 1);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<double> d(dim);
    for (std::size_t j = 0; j < dim; ++j) d[j] = pts[i][j] - pts[0][j];
    rows.push_back(std::move(d));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < dim && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    for (std::size_t i = rank + 1; i < rows.size(); ++i)
      if (std::fabs(rows[i][col]) > std::fabs(rows[piv][col])) piv = i;
    if (std::fabs(rows[piv][col]) <= kTightTol) continue;
    std::swap(rows[rank], rows[piv]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank) continue;
      double f = rows[i][col] / rows[rank][col];
      if (f == 0.0) continue;
      for (std::size_t j = col; j < dim; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank + 1;
}

}  // namespace

PointCatalogue::PointCatalogue(const ArcSetInstance& inst) {
  const std::size_t nq = inst.num_commodities();
  if (nq > 22) throw BudgetExceeded("catalogue: too many commodities");
  const auto& a = inst.demands();
  std::vector<Int> x(nq), y(inst.num_facilities());
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << nq); ++mask) {
    Int demand = -inst.existing();
    for (std::size_t q = 0; q < nq; ++q) {
      x[q] = (mask >> q) & 1;
      demand += a[q] * x[q];
    }
    enumerate_covers(inst.capacities(), demand, 0, y, [&](const std::vector<Int>& cov) {
      if (points_.size() >= kMaxPoints) throw BudgetExceeded("catalogue: too many points");
      points_.push_back({x, cov});
    });
  }
}

FullSeparation full_separation(const ArcSetInstance& inst, const FracPoint& point) {
  const std::size_t nq = inst.num_commodities();
  const std::size_t nt = inst.num_facilities();
  const auto& a = inst.demands();
  const auto& b = inst.capacities();
  const Int b1 = b[0];

  lp::LpModel model;
  for (std::size_t q = 0; q < nq; ++q)
    model.add_variable(point.x[q], 0.0, double(ceil_div(a[q], b1)));
  for (std::size_t t = 1; t < nt; ++t)
    model.add_variable(-point.y[t], 0.0, double(ceil_div(b[t], b1)));
  model.add_variable(-1.0, -double(r_value(inst)), lp::kInf);  // gamma

  PointCatalogue cat(inst);
  for (const auto& p : cat.points()) {
    lp::LpRow row;
    row.coeffs.assign(nq + nt, 0.0);
    for (std::size_t q = 0; q < nq; ++q) row.coeffs[q] = double(p.x[q]);
    for (std::size_t t = 1; t < nt; ++t) row.coeffs[nq + t - 1] = -double(p.y[t]);
    row.coeffs[nq + nt - 1] = -1.0;
    row.sense = lp::RowSense::Le;
    row.rhs = double(p.y[0]);
    model.add_row(std::move(row));
  }

  auto sol = lp::solve(model);
  if (sol.status != lp::LpStatus::Optimal)
    throw std::runtime_error("full separation: LP not optimal");

  FullSeparation out;
  out.value = sol.objective - point.y[0];
  out.cut.alpha.assign(sol.values.begin(), sol.values.begin() + std::ptrdiff_t(nq));
  out.cut.beta.assign(nt, 1.0);
  for (std::size_t t = 1; t < nt; ++t) out.cut.beta[t] = sol.values[nq + t - 1];
  out.cut.gamma = sol.values[nq + nt - 1];
  return out;
}

bool membership(const ArcSetInstance& inst, const FracPoint& point) {
  if (screen_trivial(inst, point)) return false;
  return full_separation(inst, point).value <= kViolationTol;
}

double cut_slack(const ArcSetInstance& inst, const CutInequality& cut) {
  for (double bt : cut.beta)
    if (bt < -kTightTol) return lp::kInf;  // a unit ray escapes
  PointCatalogue cat(inst);
  double worst = -lp::kInf;
  for (const auto& p : cat.points()) {
    double s = -cut.gamma;
    for (std::size_t q = 0; q < p.x.size(); ++q) s += cut.alpha[q] * double(p.x[q]);
    for (std::size_t t = 0; t < p.y.size(); ++t) s -= cut.beta[t] * double(p.y[t]);
    worst = std::max(worst, s);
  }
  return worst;
}

std::size_t facet_rank(const ArcSetInstance& inst, const CutInequality& cut) {
  PointCatalogue cat(inst);
  std::vector<std::vector<double>> tight;
  for (const auto& p : cat.points()) {
    double s = -cut.gamma;
    for (std::size_t q = 0; q < p.x.size(); ++q) s += cut.alpha[q] * double(p.x[q]);
    for (std::size_t t = 0; t < p.y.size(); ++t) s -= cut.beta[t] * double(p.y[t]);
    if (s > kTightTol) throw std::invalid_argument("facet_rank: cut is not valid");
    if (s >= -kTightTol) {
      std::vector<double> v;
      v.reserve(p.x.size() + p.y.size());
      for (Int xi : p.x) v.push_back(double(xi));
      for (Int yi : p.y) v.push_back(double(yi));
      tight.push_back(std::move(v));
    }
  }
  if (tight.empty()) return 0;
  // a zero-coefficient facility keeps its unit ray inside the face
  for (std::size_t t = 0; t < cut.beta.size(); ++t) {
    if (std::fabs(cut.beta[t]) <= kTightTol) {
      auto shifted = tight[0];
      shifted[inst.num_commodities() + t] += 1.0;
      tight.push_back(std::move(shifted));
    }
  }
  return affine_rank(tight);
}

}  // namespace arcflow::oracle
