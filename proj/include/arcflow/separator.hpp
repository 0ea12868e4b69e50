#pragma once

#include "arcflow/arcset.hpp"
#include "arcflow/closed_form.hpp"
#include "arcflow/refine.hpp"
#include "arcflow/rowgen.hpp"

namespace arcflow::separator {

// Variable fixing derived from the point: integral x and zero y leave the
// problem, shrinking separation to the fractional support.
struct ReducedProblem {
  std::vector<std::size_t> q_bar;  // commodities kept (0 < x < 1)
  std::vector<std::size_t> t_bar;  // facilities kept (y > 0), capacity-sorted
  refine::FixedVariables fixed;
  Int cbar = 0;
  bool fallback_facility = false;  // t_bar was empty; smallest capacity adjoined

  ArcSetInstance reduced_instance(const ArcSetInstance& full) const;
  FracPoint reduced_point(const FracPoint& full) const;
  // Expands a reduced-space cut to full-length vectors (zeros on fixed slots).
  CutInequality expand(const CutInequality& cut, const ArcSetInstance& full) const;
};

ReducedProblem build_reduced(const ArcSetInstance& inst, const FracPoint& point);

struct SeparateOptions {
  refine::LiftOrder lift_order = refine::LiftOrder::Lift4;
  // Length |Q|+|T|; enables Lift3/Lift4 (otherwise Lift4 degrades to Lift2).
  const std::vector<double>* reduced_costs = nullptr;
  rowgen::RowGenOptions rowgen;
};

struct SeparationReport {
  SeparationOutcome outcome;
  std::string stage;  // "trivial", "fixing", "closed-form", "row-generation"
  closed_form::CaseId closed_form_case = closed_form::CaseId::NotApplicable;
  std::size_t rowgen_iterations = 0;
  std::vector<rowgen::IterationLog> trace;
  std::vector<refine::LiftStep> lift_steps;
  Int scale_factor = 1;
};

// The four-stage exact separation pipeline: trivial screening, fixing with
// the small-case observations, closed-form fast path, row generation, then
// scaling + lifting of whatever cut came out.
SeparationReport separate(const ArcSetInstance& inst, const FracPoint& point,
                          const SeparateOptions& opts = {});

}  // namespace arcflow::separator
