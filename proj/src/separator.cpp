#include "arcflow/separator.hpp"

#include <cmath>

#include "arcflow/knapsack.hpp"

namespace arcflow::separator {

ArcSetInstance ReducedProblem::reduced_instance(const ArcSetInstance& full) const {
  std::vector<Int> a, b;
  for (std::size_t q : q_bar) a.push_back(full.demands()[q]);
  for (std::size_t t : t_bar) b.push_back(full.capacities()[t]);
  return ArcSetInstance(std::move(a), std::move(b), cbar);
}

FracPoint ReducedProblem::reduced_point(const FracPoint& full) const {
  FracPoint p;
  for (std::size_t q : q_bar) p.x.push_back(full.x[q]);
  for (std::size_t t : t_bar) p.y.push_back(full.y[t]);
  return p;
}

CutInequality ReducedProblem::expand(const CutInequality& cut, const ArcSetInstance& full) const {
  CutInequality out;
  out.alpha.assign(full.num_commodities(), 0.0);
  out.beta.assign(full.num_facilities(), 0.0);
  for (std::size_t i = 0; i < q_bar.size(); ++i) out.alpha[q_bar[i]] = cut.alpha[i];
  for (std::size_t i = 0; i < t_bar.size(); ++i) out.beta[t_bar[i]] = cut.beta[i];
  out.gamma = cut.gamma;
  out.integralized = cut.integralized;
  return out;
}

ReducedProblem build_reduced(const ArcSetInstance& inst, const FracPoint& point) {
  ReducedProblem red;
  red.cbar = inst.existing();
  for (std::size_t q = 0; q < inst.num_commodities(); ++q) {
    if (point.x[q] <= kFeasTol) {
      red.fixed.x_at_zero.push_back(q);
    } else if (point.x[q] >= 1.0 - kFeasTol) {
      red.fixed.x_at_one.push_back(q);
      red.cbar -= inst.demands()[q];
    } else {
      red.q_bar.push_back(q);
    }
  }
  for (std::size_t t = 0; t < inst.num_facilities(); ++t) {
    if (point.y[t] > kFeasTol) red.t_bar.push_back(t);
    else red.fixed.y_at_zero.push_back(t);
  }
  if (red.t_bar.empty()) {
    // capacities are sorted, so facility 0 is the smallest one
    red.t_bar.push_back(0);
    red.fixed.y_at_zero.erase(red.fixed.y_at_zero.begin());
    red.fallback_facility = true;
  }
  return red;
}

namespace {

void finish(SeparationReport& rep, CutInequality reduced_cut, double violation,
            Provenance prov, const ReducedProblem& red, const ArcSetInstance& inst,
            const ArcSetInstance& reduced_inst, const FracPoint& reduced_pt,
            const SeparateOptions& opts) {
  rep.outcome.provenance = prov;
  auto scaled = refine::scale(reduced_cut);
  if (scaled) {
    refine::recompute_gamma(*scaled, reduced_inst);
    if (scaled->lhs_minus_rhs(reduced_pt) <= kViolationTol) scaled.reset();
  }
  if (!scaled) {
    rep.outcome.verdict = Verdict::Member;
    rep.outcome.cut_dropped = true;
    return;
  }
  auto lifted = refine::lift(red.expand(*scaled, inst), inst, red.fixed, opts.lift_order,
                             opts.reduced_costs);
  auto check = knapsack::maximize(lifted.cut.alpha, lifted.cut.beta, lifted.cut.gamma, inst);
  if (check.value > 1e-9)
    throw std::logic_error("separate: lifted cut failed the exact validity check");
  rep.outcome.verdict = Verdict::Violated;
  rep.outcome.violation = violation;
  rep.outcome.cut = std::move(lifted.cut);
  rep.lift_steps = std::move(lifted.steps);
  rep.scale_factor = lifted.scale_factor;
}

}  // namespace

SeparationReport separate(const ArcSetInstance& inst, const FracPoint& point,
                          const SeparateOptions& opts) {
  SeparationReport rep;
  if (auto trivial = screen_trivial(inst, point)) {
    rep.outcome = std::move(*trivial);
    rep.stage = "trivial";
    return rep;
  }

  ReducedProblem red = build_reduced(inst, point);
  rep.stage = "fixing";

  if (red.q_bar.empty()) {
    if (red.fallback_facility) return rep;  // integral x, zero y, capacity holds
    if (red.t_bar.size() == 1) {
      const std::size_t t = red.t_bar[0];
      const Int bt = inst.capacities()[t];
      const Int rbar = red.cbar < 0 ? ceil_div(-red.cbar, bt) : 0;
      if (point.y[t] >= double(rbar) - kFeasTol) return rep;
      CutInequality cut;
      cut.beta.assign(1, 1.0);
      cut.gamma = -double(rbar);
      cut.integralized = true;
      finish(rep, std::move(cut), double(rbar) - point.y[t], Provenance::TrivialBound, red,
             inst, red.reduced_instance(inst), red.reduced_point(point), opts);
      return rep;
    }
  }

  // rounded capacity check: fractional demand fits the already-paid modules
  Int lhs = 0;
  for (std::size_t q : red.q_bar) lhs += inst.demands()[q];
  Int rhs = red.cbar;
  for (std::size_t t : red.t_bar)
    rhs += inst.capacities()[t] * Int(std::floor(point.y[t] + kFeasTol));
  if (lhs <= rhs) return rep;

  const ArcSetInstance reduced_inst = red.reduced_instance(inst);
  const FracPoint reduced_pt = red.reduced_point(point);

  if (!red.q_bar.empty()) {
    auto cf = closed_form::detect(reduced_inst, reduced_pt);
    if (cf.member_certified) {
      rep.stage = "closed-form";
      return rep;
    }
    if (cf.id != closed_form::CaseId::NotApplicable) {
      rep.stage = "closed-form";
      rep.closed_form_case = cf.id;
      auto built = closed_form::build(cf, reduced_inst, reduced_pt);
      if (built.verdict == Verdict::Member) return rep;
      finish(rep, std::move(*built.cut), built.violation, built.provenance, red, inst,
             reduced_inst, reduced_pt, opts);
      return rep;
    }
  }

  rep.stage = "row-generation";
  auto rg = rowgen::run(reduced_inst, reduced_pt, opts.rowgen);
  rep.rowgen_iterations = rg.iterations;
  rep.trace = std::move(rg.trace);
  if (rg.outcome.verdict == Verdict::Member) return rep;
  finish(rep, std::move(*rg.outcome.cut), rg.outcome.violation, Provenance::RowGeneration, red,
         inst, reduced_inst, reduced_pt, opts);
  return rep;
}

}  // namespace arcflow::separator
