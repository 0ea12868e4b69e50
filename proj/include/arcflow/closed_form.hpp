#pragma once

#include "arcflow/arcset.hpp"

namespace arcflow::closed_form {

enum class CaseId {
  P5,
  P6a,
  P6b_1,
  P6b_2,
  P6b_3,
  P7a,
  P7b,
  P8a,
  P8b,
  P8c,
  P8d_1,
  P8d_2,
  P8d_3,
  NotApplicable,
};

const char* to_string(CaseId id);

struct ClosedFormCase {
  CaseId id = CaseId::NotApplicable;
  Int r = 0;
  std::size_t d = 0;
  std::vector<std::size_t> qtilde;
  // Multifacility assumptions held but sum_{t>=2} y_t >= 1: the point is in P
  // outright and no inequality needs building.
  bool member_certified = false;
};

// Checks the special-case assumptions for the given instance/point; the point
// is expected to lie in X_LP.
ClosedFormCase detect(const ArcSetInstance& inst, const FracPoint& point);

// Builds the proposition's inequality for a detected case and evaluates it at
// the point.
SeparationOutcome build(const ClosedFormCase& c, const ArcSetInstance& inst,
                        const FracPoint& point);

}  // namespace arcflow::closed_form
