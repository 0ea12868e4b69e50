#include "arcflow/refine.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "arcflow/knapsack.hpp"

namespace arcflow::refine {
namespace {

// Best rational approximation of v >= 0 by continued-fraction convergents.
std::optional<std::pair<Int, Int>> to_rational(double v, const ScalingPolicy& policy) {
  if (v < 0.0) {
    auto r = to_rational(-v, policy);
    if (!r) return std::nullopt;
    return std::pair<Int, Int>{-r->first, r->second};
  }
  double x = v;
  Int p_prev = 1, q_prev = 0;
  Int p = Int(std::floor(x)), q = 1;
  for (int k = 0; k < 64; ++k) {
    if (q > policy.mu_max || std::fabs(double(p)) > policy.lambda_max) return std::nullopt;
    if (std::fabs(double(p) / double(q) - v) <= policy.eps) return std::pair<Int, Int>{p, q};
    double frac = x - std::floor(x);
    if (frac < 1e-15) break;
    x = 1.0 / frac;
    double af = std::floor(x);
    if (af > 1e15) break;
    Int a = Int(af);
    Int p_next = a * p + p_prev;
    Int q_next = a * q + q_prev;
    p_prev = p; q_prev = q;
    p = p_next; q = q_next;
  }
  return std::nullopt;
}

}  // namespace

std::optional<CutInequality> scale(const CutInequality& cut, const ScalingPolicy& policy) {
  std::vector<std::pair<Int, Int>> fracs;
  fracs.reserve(cut.alpha.size() + cut.beta.size());
  Int mu = 1;
  auto take = [&](double v) {
    auto r = to_rational(v, policy);
    if (!r) return false;
    fracs.push_back(*r);
    mu = std::lcm(mu, r->second);
    return mu <= policy.mu_max;
  };
  for (double v : cut.alpha)
    if (!take(v)) return std::nullopt;
  for (double v : cut.beta)
    if (!take(v)) return std::nullopt;

  CutInequality out = cut;
  std::size_t i = 0;
  auto emit = [&](double& slot) {
    auto [p, q] = fracs[i++];
    slot = double(p * (mu / q));
    return std::fabs(slot) <= policy.lambda_max;
  };
  for (double& v : out.alpha)
    if (!emit(v)) return std::nullopt;
  for (double& v : out.beta)
    if (!emit(v)) return std::nullopt;
  out.gamma = cut.gamma * double(mu);
  out.integralized = true;
  return out;
}

void recompute_gamma(CutInequality& cut, const ArcSetInstance& reduced) {
  knapsack::WEvaluator w(cut.alpha, cut.beta, reduced.demands(), reduced.capacities());
  cut.gamma = w.value(reduced.existing());
}

LiftOrder parse_lift_order(const std::string& name) {
  if (name == "lift1") return LiftOrder::Lift1;
  if (name == "lift2") return LiftOrder::Lift2;
  if (name == "lift3") return LiftOrder::Lift3;
  if (name == "lift4") return LiftOrder::Lift4;
  throw std::invalid_argument("unknown lift order: " + name);
}

const char* to_string(LiftOrder order) {
  switch (order) {
    case LiftOrder::Lift1: return "lift1";
    case LiftOrder::Lift2: return "lift2";
    case LiftOrder::Lift3: return "lift3";
    case LiftOrder::Lift4: return "lift4";
  }
  return "?";
}

namespace {

struct Entry {
  LiftStep::Kind kind;
  std::size_t index;
  double key = 0.0;
};

std::vector<Entry> ordered_entries(const ArcSetInstance& inst, const FixedVariables& fixed,
                                   LiftOrder order, const std::vector<double>* reduced_costs) {
  if ((order == LiftOrder::Lift3 || order == LiftOrder::Lift4) && reduced_costs == nullptr)
    order = LiftOrder::Lift2;

  std::vector<Entry> entries;
  auto rc = [&](std::size_t var) { return (*reduced_costs)[var]; };
  auto push = [&](LiftStep::Kind kind, std::size_t idx) {
    double key;
    std::size_t var = kind == LiftStep::Kind::YZero ? inst.num_commodities() + idx : idx;
    switch (order) {
      case LiftOrder::Lift1:
      case LiftOrder::Lift2:
        key = kind == LiftStep::Kind::YZero ? -double(inst.capacities()[idx])
                                            : -double(inst.demands()[idx]);
        break;
      case LiftOrder::Lift3: key = -rc(var); break;
      case LiftOrder::Lift4: key = rc(var); break;
    }
    entries.push_back({kind, idx, key});
  };
  for (std::size_t q : fixed.x_at_one) push(LiftStep::Kind::XOne, q);
  for (std::size_t q : fixed.x_at_zero) push(LiftStep::Kind::XZero, q);
  for (std::size_t t : fixed.y_at_zero) push(LiftStep::Kind::YZero, t);

  auto by_key = [](const Entry& l, const Entry& r) { return l.key < r.key; };
  if (order == LiftOrder::Lift1) {
    auto mid = std::stable_partition(entries.begin(), entries.end(), [](const Entry& e) {
      return e.kind == LiftStep::Kind::XOne;
    });
    std::stable_sort(entries.begin(), mid, by_key);
    std::stable_sort(mid, entries.end(), by_key);
  } else {
    std::stable_sort(entries.begin(), entries.end(), by_key);
  }
  return entries;
}

}  // namespace

LiftResult lift(const CutInequality& cut, const ArcSetInstance& inst,
                const FixedVariables& fixed, LiftOrder order,
                const std::vector<double>* reduced_costs) {
  const auto& a = inst.demands();
  const auto& b = inst.capacities();
  const std::size_t nq = inst.num_commodities();
  const std::size_t nt = inst.num_facilities();

  std::vector<bool> free_x(nq, true), free_y(nt, true);
  Int cbar = inst.existing();
  for (std::size_t q : fixed.x_at_zero) free_x[q] = false;
  for (std::size_t q : fixed.x_at_one) {
    free_x[q] = false;
    cbar -= a[q];
  }
  for (std::size_t t : fixed.y_at_zero) free_y[t] = false;

  LiftResult res;
  res.cut = cut;
  auto& alpha = res.cut.alpha;
  auto& beta = res.cut.beta;
  double& gamma = res.cut.gamma;

  auto make_w = [&]() {
    std::vector<double> wa, wb;
    std::vector<Int> wd, wc;
    for (std::size_t q = 0; q < nq; ++q)
      if (free_x[q]) {
        wa.push_back(alpha[q]);
        wd.push_back(a[q]);
      }
    for (std::size_t t = 0; t < nt; ++t)
      if (free_y[t]) {
        wb.push_back(beta[t]);
        wc.push_back(b[t]);
      }
    return knapsack::WEvaluator(std::move(wa), std::move(wb), std::move(wd), std::move(wc));
  };

  for (const Entry& e : ordered_entries(inst, fixed, order, reduced_costs)) {
    knapsack::WEvaluator w = make_w();
    switch (e.kind) {
      case LiftStep::Kind::XZero: {
        double ak = gamma - w.value(cbar - a[e.index]);
        alpha[e.index] = ak;
        free_x[e.index] = true;
        res.steps.push_back({e.kind, e.index, ak});
        break;
      }
      case LiftStep::Kind::XOne: {
        double ak = w.value(cbar + a[e.index]) - gamma;
        alpha[e.index] = ak;
        gamma += ak;
        cbar += a[e.index];
        free_x[e.index] = true;
        res.steps.push_back({e.kind, e.index, ak});
        break;
      }
      case LiftStep::Kind::YZero: {
        Int rest = -cbar;
        for (std::size_t q = 0; q < nq; ++q)
          if (free_x[q]) rest += a[q];
        Int ell_bar = rest > 0 ? ceil_div(rest, b[e.index]) : 1;
        if (ell_bar < 1) ell_bar = 1;
        // exact max of N_ell / ell via cross-multiplication
        Int best_num = 0, best_den = 1;  // beta_k >= 0 keeps the unbounded direction valid
        for (Int ell = 1; ell <= ell_bar; ++ell) {
          Int n = Int(std::llround(w.value(cbar + ell * b[e.index]) - gamma));
          if (n * best_den > best_num * ell) {
            best_num = n;
            best_den = ell;
          }
        }
        Int g = std::gcd(best_num, best_den);
        if (g > 1) {
          best_num /= g;
          best_den /= g;
        }
        if (best_den > 1) {
          for (double& v : alpha) v *= double(best_den);
          for (double& v : beta) v *= double(best_den);
          gamma *= double(best_den);
          res.scale_factor *= best_den;
        }
        beta[e.index] = double(best_num);
        free_y[e.index] = true;
        res.steps.push_back({e.kind, e.index, double(best_num)});
        break;
      }
    }
  }
  return res;
}

}  // namespace arcflow::refine
