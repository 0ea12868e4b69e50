#pragma once

#include "arcflow/arcset.hpp"

namespace arcflow::refine {

struct ScalingPolicy {
  double eps = 1e-9;
  double lambda_max = 1e6;
  Int mu_max = 1000;
};

// Continued-fraction rational reconstruction of every coefficient, then
// multiplication by the lcm of denominators. nullopt = rejected (a
// denominator or a scaled magnitude exceeds the policy limits).
std::optional<CutInequality> scale(const CutInequality& cut, const ScalingPolicy& policy = {});

// gamma = max { alpha.x - beta.y : (x,y) feasible for `reduced` }, making the
// inequality valid and tight on the reduced set. Requires beta > 0.
void recompute_gamma(CutInequality& cut, const ArcSetInstance& reduced);

enum class LiftOrder { Lift1, Lift2, Lift3, Lift4 };

LiftOrder parse_lift_order(const std::string& name);  // "lift1".."lift4"
const char* to_string(LiftOrder order);

// Full-space indices of the variables removed during preprocessing.
struct FixedVariables {
  std::vector<std::size_t> x_at_zero;
  std::vector<std::size_t> x_at_one;
  std::vector<std::size_t> y_at_zero;
  bool empty() const { return x_at_zero.empty() && x_at_one.empty() && y_at_zero.empty(); }
};

struct LiftStep {
  enum class Kind { XZero, XOne, YZero } kind;
  std::size_t index = 0;     // full-space index
  double coefficient = 0.0;  // after any rescale applied at this step
};

struct LiftResult {
  CutInequality cut;
  std::vector<LiftStep> steps;
  Int scale_factor = 1;  // product of rescales forced by fractional y-lifts
};

// Sequential lifting of the fixed variables back into the inequality. The
// input cut lives in full-space coordinates with zeros on fixed positions and
// must be integral and valid for the reduced set. Reduced costs (one per
// x-variable then one per y-variable) drive Lift3/Lift4; without them Lift4
// falls back to Lift2.
LiftResult lift(const CutInequality& cut, const ArcSetInstance& inst,
                const FixedVariables& fixed, LiftOrder order,
                const std::vector<double>* reduced_costs = nullptr);

}  // namespace arcflow::refine
