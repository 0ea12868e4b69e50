#pragma once

#include "arcflow/arcset.hpp"

namespace arcflow::knapsack {

struct CoverResult {
  double cost = 0.0;
  std::vector<Int> y;
};

// min beta.y  s.t.  caps.y >= demand, y integer >= 0.
// demand <= 0 gives cost 0. betas must be >= 0 (strictly positive for the
// separation use; zeros are tolerated and simply make capacity free).
CoverResult cover_cost(const std::vector<double>& betas, const std::vector<Int>& caps,
                       Int demand);

struct KnapsackAnswer {
  double value = 0.0;
  std::vector<Int> x;
  std::vector<Int> y;
};

// z = max alpha.x - beta.y - gamma over X with reduced capacity c
// (x binary, y integer >= 0, a.x <= b.y + c). Exact subset-sum DP over the
// integer demand totals; beta > 0 keeps the unbounded y side finite.
KnapsackAnswer maximize(const std::vector<double>& alpha, const std::vector<double>& beta,
                        double gamma, const ArcSetInstance& inst);

// Shares the demand-sum and cover tables across many W(C) evaluations
// (the ell-sweep of a y-lift hits the same tables repeatedly).
class WEvaluator {
 public:
  WEvaluator(std::vector<double> alpha, std::vector<double> beta, std::vector<Int> demands,
             std::vector<Int> caps);

  // W(C) = max { alpha.x - beta.y : a.x <= b.y + C }.
  double value(Int capacity) const;

  Int total_demand() const { return total_; }

 private:
  std::vector<double> best_;   // best_[s] = max alpha.x with a.x = s (-inf if none)
  mutable std::vector<double> cover_;  // cover_[d] = min beta.y with b.y >= d
  std::vector<Int> caps_;
  std::vector<double> beta_;
  Int total_ = 0;
  void extend_cover(Int demand) const;
};

// Algorithm-1 style strengthening: scan commodities by nonincreasing demand
// (ties by index) and set x_q = 1 whenever the capacity constraint still
// holds. Input must be feasible for X.
void strengthen(const ArcSetInstance& inst, std::vector<Int>& x, const std::vector<Int>& y);

}  // namespace arcflow::knapsack
