#include "arcflow/closed_form.hpp"

#include <cmath>
#include <numeric>

namespace arcflow::closed_form {

const char* to_string(CaseId id) {
  switch (id) {
    case CaseId::P5: return "P5";
    case CaseId::P6a: return "P6a";
    case CaseId::P6b_1: return "P6b_1";
    case CaseId::P6b_2: return "P6b_2";
    case CaseId::P6b_3: return "P6b_3";
    case CaseId::P7a: return "P7a";
    case CaseId::P7b: return "P7b";
    case CaseId::P8a: return "P8a";
    case CaseId::P8b: return "P8b";
    case CaseId::P8c: return "P8c";
    case CaseId::P8d_1: return "P8d_1";
    case CaseId::P8d_2: return "P8d_2";
    case CaseId::P8d_3: return "P8d_3";
    case CaseId::NotApplicable: return "NotApplicable";
  }
  return "?";
}

ClosedFormCase detect(const ArcSetInstance& inst, const FracPoint& point) {
  ClosedFormCase out;
  const auto& a = inst.demands();
  const auto& b = inst.capacities();
  const Int c = inst.existing();
  const std::size_t nq = a.size();
  const std::size_t nt = b.size();
  if (nq == 0) return out;

  const Int r = r_value(inst);
  out.r = r;
  const Int b1 = b[0];
  for (Int aq : a) {
    if (aq > b1) return out;           // (i)
    if (b1 * r + c >= aq) return out;  // (ii)
  }
  const Int total = inst.total_demand();
  const Int level = b1 * (r + 1) + c;
  const bool cond_first = total <= level;  // (13)
  Int min_a = a[0];
  for (Int aq : a) min_a = std::min(min_a, aq);
  const bool cond_third = (total - min_a <= level) && (level < total);
  if (!cond_first && !cond_third) return out;

  out.d = d_index(point);
  const double xd = point.x[out.d];
  double sum_x = std::accumulate(point.x.begin(), point.x.end(), 0.0);

  if (nt == 1) {
    if (cond_first) {
      out.id = CaseId::P5;
      return out;
    }
    if (nq <= 2) {
      out.id = CaseId::P6a;
      return out;
    }
    double ratio = sum_x / double(nq - 1);
    if (ratio <= xd + kFeasTol) out.id = CaseId::P6b_1;
    else if (ratio <= 1.0 + kFeasTol) out.id = CaseId::P6b_2;
    else out.id = CaseId::P6b_3;
    return out;
  }

  // multifacility: (iii) and sum_{t>=2} y_t < 1
  for (std::size_t t = 1; t < nt; ++t)
    if (total > b[t] + c) return out;
  double y_rest = 0.0;
  for (std::size_t t = 1; t < nt; ++t) y_rest += point.y[t];
  if (y_rest >= 1.0 - kFeasTol) {
    out.member_certified = true;
    return out;
  }
  out.qtilde = q_tilde(point);

  if (cond_first) {
    out.id = out.qtilde.empty() ? CaseId::P7a : CaseId::P7b;
    return out;
  }
  if (out.qtilde.empty()) {
    out.id = CaseId::P8a;
    return out;
  }
  if (out.qtilde.size() < nq) {
    out.id = CaseId::P8b;
    return out;
  }
  if (nq <= 2) {
    out.id = CaseId::P8c;
    return out;
  }
  double ratio = (sum_x - y_rest) / double(nq - 1);
  if (ratio <= xd + kFeasTol) out.id = CaseId::P8d_1;
  else if (ratio <= 1.0 + kFeasTol) out.id = CaseId::P8d_2;
  else out.id = CaseId::P8d_3;
  return out;
}

SeparationOutcome build(const ClosedFormCase& c, const ArcSetInstance& inst,
                        const FracPoint& point) {
  const std::size_t nq = inst.num_commodities();
  const std::size_t nt = inst.num_facilities();
  const double r = double(c.r);
  CutInequality cut;
  cut.alpha.assign(nq, 0.0);
  cut.beta.assign(nt, 0.0);
  cut.beta[0] = 1.0;
  cut.gamma = -r;
  Provenance prov = Provenance::ClosedFormP5;
  auto rest_beta = [&](double v) {
    for (std::size_t t = 1; t < nt; ++t) cut.beta[t] = v;
  };
  switch (c.id) {
    case CaseId::P5:
      cut.alpha[c.d] = 1.0;
      break;
    case CaseId::P6a:
      cut.alpha.assign(nq, 1.0);
      prov = Provenance::ClosedFormP6;
      break;
    case CaseId::P6b_1:
      cut.alpha[c.d] = 1.0;
      prov = Provenance::ClosedFormP6;
      break;
    case CaseId::P6b_2:
      cut.alpha.assign(nq, 1.0 / double(nq - 1));
      prov = Provenance::ClosedFormP6;
      break;
    case CaseId::P6b_3:
      cut.alpha.assign(nq, 1.0);
      cut.gamma = -r + double(nq) - 2.0;
      prov = Provenance::ClosedFormP6;
      break;
    case CaseId::P7a:
      rest_beta(r);
      prov = Provenance::ClosedFormP7;
      break;
    case CaseId::P7b:
      cut.alpha[c.d] = 1.0;
      rest_beta(r + 1.0);
      prov = Provenance::ClosedFormP7;
      break;
    case CaseId::P8a:
      rest_beta(r);
      prov = Provenance::ClosedFormP8;
      break;
    case CaseId::P8b:
      cut.alpha[c.d] = 1.0;
      rest_beta(r + 1.0);
      prov = Provenance::ClosedFormP8;
      break;
    case CaseId::P8c:
      cut.alpha.assign(nq, 1.0);
      rest_beta(r + double(nq));
      prov = Provenance::ClosedFormP8;
      break;
    case CaseId::P8d_1:
      cut.alpha[c.d] = 1.0;
      rest_beta(r + 1.0);
      prov = Provenance::ClosedFormP8;
      break;
    case CaseId::P8d_2:
      cut.alpha.assign(nq, 1.0 / double(nq - 1));
      rest_beta(r + double(nq) / double(nq - 1));
      prov = Provenance::ClosedFormP8;
      break;
    case CaseId::P8d_3:
      cut.alpha.assign(nq, 1.0);
      rest_beta(r + 2.0);
      cut.gamma = -r + double(nq) - 2.0;
      prov = Provenance::ClosedFormP8;
      break;
    case CaseId::NotApplicable:
      throw std::invalid_argument("build: case not applicable");
  }
  cut.integralized = !(c.id == CaseId::P6b_2 || c.id == CaseId::P8d_2);

  SeparationOutcome out;
  out.provenance = prov;
  double viol = cut.lhs_minus_rhs(point);
  if (viol > kViolationTol) {
    out.verdict = Verdict::Violated;
    out.violation = viol;
  } else {
    out.verdict = Verdict::Member;
    out.violation = 0.0;
  }
  out.cut = std::move(cut);  // kept on Member too; callers read its value at the point
  return out;
}

}  // namespace arcflow::closed_form
