#pragma once

#include "arcflow/arcset.hpp"
#include "arcflow/lp.hpp"

namespace arcflow::rowgen {

struct SeedPoint {
  std::vector<Int> x;
  std::vector<Int> y;
};

struct RowGenOptions {
  bool use_strengthen = true;
  std::vector<SeedPoint> initial_points;
  std::size_t max_iterations = 100000;
};

struct IterationLog {
  double lp_value = 0.0;        // violation of the current candidate at the point
  double knapsack_value = 0.0;  // max slack of the candidate over X
  std::size_t pool_size = 0;    // |U| after this iteration
};

struct RowGenResult {
  SeparationOutcome outcome;
  std::vector<IterationLog> trace;
  std::size_t iterations = 0;
  lp::LpSolution last_lp;  // final partial-LP solution (basis info, reduced costs)
};

// Row-generation separation over the reduced instance. The point must lie in
// X_LP with 0 < x_q < 1 and y_t > 0 throughout; facility 0 carries the
// beta_1 = 1 normalization.
RowGenResult run(const ArcSetInstance& inst, const FracPoint& point,
                 const RowGenOptions& opts = {});

}  // namespace arcflow::rowgen
