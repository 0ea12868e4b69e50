#pragma once

#include "arcflow/arcset.hpp"
#include "arcflow/lp.hpp"

namespace arcflow::oracle {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IntPoint {
  std::vector<Int> x;
  std::vector<Int> y;
};

// Integer points of X whose y is a minimal cover of the selected demand.
// conv(catalogue) + cone(unit y rays) = P, so the catalogue stands in for
// the vertex list in the separation LP and the membership test.
class PointCatalogue {
 public:
  explicit PointCatalogue(const ArcSetInstance& inst);
  const std::vector<IntPoint>& points() const { return points_; }

 private:
  std::vector<IntPoint> points_;
};

bool membership(const ArcSetInstance& inst, const FracPoint& point);

struct FullSeparation {
  double value = 0.0;  // optimum of the vertex-listed separation LP
  CutInequality cut;
};

// Solves the full separation LP (beta_1 = 1 normalization) by complete
// catalogue enumeration. The point must lie in X_LP.
FullSeparation full_separation(const ArcSetInstance& inst, const FracPoint& point);

// Exact max of alpha.x - beta.y - gamma over X; <= 0 means the cut is valid.
double cut_slack(const ArcSetInstance& inst, const CutInequality& cut);

// Number of affinely independent tight catalogue points (plus tight-ray
// shifts for zero-beta facilities); the cut must be valid.
std::size_t facet_rank(const ArcSetInstance& inst, const CutInequality& cut);

}  // namespace arcflow::oracle
