#include "arcflow/rowgen.hpp"

#include <set>

#include "arcflow/knapsack.hpp"

namespace arcflow::rowgen {
namespace {
constexpr double kZeroTol = 1e-9;

lp::LpRow make_row(const std::vector<Int>& x, const std::vector<Int>& y, std::size_t nq,
                   std::size_t nt) {
  lp::LpRow row;
  row.coeffs.assign(nq + nt, 0.0);
  for (std::size_t q = 0; q < nq; ++q) row.coeffs[q] = double(x[q]);
  for (std::size_t t = 1; t < nt; ++t) row.coeffs[nq + t - 1] = -double(y[t]);
  row.coeffs[nq + nt - 1] = -1.0;  // gamma
  row.sense = lp::RowSense::Le;
  row.rhs = double(y[0]);
  return row;
}

}  // namespace

RowGenResult run(const ArcSetInstance& inst, const FracPoint& point,
                 const RowGenOptions& opts) {
  const std::size_t nq = inst.num_commodities();
  const std::size_t nt = inst.num_facilities();
  const auto& a = inst.demands();
  const auto& b = inst.capacities();
  const Int b1 = b[0];

  lp::LpModel model;
  for (std::size_t q = 0; q < nq; ++q)
    model.add_variable(point.x[q], 0.0, double(ceil_div(a[q], b1)));
  for (std::size_t t = 1; t < nt; ++t)
    model.add_variable(-point.y[t], 1.0, double(ceil_div(b[t], b1)));
  model.add_variable(-1.0, -double(r_value(inst)), lp::kInf);  // gamma

  std::set<std::pair<std::vector<Int>, std::vector<Int>>> pool;
  for (const auto& seed : opts.initial_points) {
    model.add_row(make_row(seed.x, seed.y, nq, nt));
    pool.insert({seed.x, seed.y});
  }

  RowGenResult res;
  auto sol = lp::solve(model);
  for (res.iterations = 1; res.iterations <= opts.max_iterations; ++res.iterations) {
    if (sol.status != lp::LpStatus::Optimal)
      throw std::runtime_error("row generation: partial LP not optimal");
    const double v = sol.objective - point.y[0];

    std::vector<double> alpha(sol.values.begin(), sol.values.begin() + std::ptrdiff_t(nq));
    std::vector<double> beta(nt, 1.0);
    for (std::size_t t = 1; t < nt; ++t) beta[t] = sol.values[nq + t - 1];
    const double gamma = sol.values[nq + nt - 1];

    if (v <= kZeroTol) {
      res.outcome.verdict = Verdict::Member;
      res.outcome.violation = 0.0;
      res.outcome.provenance = Provenance::RowGeneration;
      res.trace.push_back({v, 0.0, pool.size()});
      break;
    }

    auto best = knapsack::maximize(alpha, beta, gamma, inst);
    res.trace.push_back({v, best.value, pool.size()});
    if (best.value <= kZeroTol) {
      CutInequality cut;
      cut.alpha = std::move(alpha);
      cut.beta = std::move(beta);
      cut.gamma = gamma;
      res.outcome.verdict = Verdict::Violated;
      res.outcome.violation = v;
      res.outcome.cut = std::move(cut);
      res.outcome.provenance = Provenance::RowGeneration;
      res.trace.back().pool_size = pool.size();
      break;
    }

    if (opts.use_strengthen) knapsack::strengthen(inst, best.x, best.y);
    if (!pool.insert({best.x, best.y}).second)
      throw std::logic_error("row generation: repeated point, no progress");
    res.trace.back().pool_size = pool.size();
    model.add_row(make_row(best.x, best.y, nq, nt));
    sol = lp::resolve(model, sol.basis);
  }
  if (res.trace.empty() || res.iterations > opts.max_iterations)
    throw std::runtime_error("row generation: iteration limit reached");
  res.last_lp = std::move(sol);
  return res;
}

}  // namespace arcflow::rowgen
