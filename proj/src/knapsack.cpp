#include "arcflow/knapsack.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace arcflow::knapsack {
namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

CoverResult cover_cost(const std::vector<double>& betas, const std::vector<Int>& caps,
                       Int demand) {
  CoverResult res;
  res.y.assign(caps.size(), 0);
  if (demand <= 0) return res;
  std::vector<double> g(std::size_t(demand) + 1, kNegInf);
  std::vector<int> pick(std::size_t(demand) + 1, -1);
  g[0] = 0.0;
  for (Int d = 1; d <= demand; ++d) {
    double best = std::numeric_limits<double>::infinity();
    int arg = -1;
    for (std::size_t t = 0; t < caps.size(); ++t) {
      Int rest = d - caps[t];
      if (rest < 0) rest = 0;
      double cand = betas[t] + g[std::size_t(rest)];
      if (cand < best) { best = cand; arg = int(t); }
    }
    g[std::size_t(d)] = best;
    pick[std::size_t(d)] = arg;
  }
  res.cost = g[std::size_t(demand)];
  Int d = demand;
  while (d > 0) {
    int t = pick[std::size_t(d)];
    ++res.y[std::size_t(t)];
    d -= caps[std::size_t(t)];
    if (d < 0) d = 0;
  }
  return res;
}

namespace {

// best_[s] = max alpha.x over binary x with a.x == s, processed so that a
// forward traceback prefers x_q = 1 on ties starting from the first
// commodity (lexicographically largest argmax).
struct DemandTable {
  std::vector<std::vector<double>> layer;  // layer[k]: after items k..n-1
  std::vector<Int> a;
  std::vector<double> alpha;
  Int total = 0;

  DemandTable(const std::vector<double>& alpha_in, const std::vector<Int>& a_in)
      : a(a_in), alpha(alpha_in) {
    total = std::accumulate(a.begin(), a.end(), Int{0});
    std::size_t n = a.size();
    layer.assign(n + 1, {});
    layer[n].assign(std::size_t(total) + 1, kNegInf);
    layer[n][0] = 0.0;
    for (std::size_t k = n; k-- > 0;) {
      layer[k] = layer[k + 1];
      for (Int s = total; s >= a[k]; --s) {
        double cand = layer[k + 1][std::size_t(s - a[k])] + alpha[k];
        if (cand >= layer[k][std::size_t(s)]) layer[k][std::size_t(s)] = cand;
      }
    }
  }

  const std::vector<double>& best() const { return layer[0]; }

  std::vector<Int> traceback(Int s) const {
    std::size_t n = a.size();
    std::vector<Int> x(n, 0);
    double need = layer[0][std::size_t(s)];
    for (std::size_t k = 0; k < n; ++k) {
      if (s >= a[k] && std::fabs(layer[k + 1][std::size_t(s - a[k])] + alpha[k] - need) < 1e-9) {
        x[k] = 1;
        s -= a[k];
        need -= alpha[k];
      }
    }
    return x;
  }
};

}  // namespace

KnapsackAnswer maximize(const std::vector<double>& alpha, const std::vector<double>& beta,
                        double gamma, const ArcSetInstance& inst) {
  DemandTable table(alpha, inst.demands());
  const Int c = inst.existing();
  // one cover table serves every demand total
  Int max_need = table.total - c;
  if (max_need < 0) max_need = 0;
  std::vector<double> g(std::size_t(max_need) + 1, 0.0);
  for (Int d = 1; d <= max_need; ++d) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < inst.capacities().size(); ++t) {
      Int rest = d - inst.capacities()[t];
      if (rest < 0) rest = 0;
      best = std::min(best, beta[t] + g[std::size_t(rest)]);
    }
    g[std::size_t(d)] = best;
  }
  KnapsackAnswer ans;
  ans.value = kNegInf;
  Int best_s = 0;
  double best_base = kNegInf;
  for (Int s = 0; s <= table.total; ++s) {
    double base = table.best()[std::size_t(s)];
    if (base == kNegInf) continue;
    Int need = s - c;
    double cost = need > 0 ? g[std::size_t(need)] : 0.0;
    double v = base - cost - gamma;
    if (v > ans.value + 1e-12 ||
        (v > ans.value - 1e-12 && (base > best_base + 1e-12 ||
                                   (std::fabs(base - best_base) <= 1e-12 && s > best_s)))) {
      ans.value = v;
      best_s = s;
      best_base = base;
    }
  }
  ans.x = table.traceback(best_s);
  ans.y = cover_cost(beta, inst.capacities(), best_s - c).y;
  return ans;
}

WEvaluator::WEvaluator(std::vector<double> alpha, std::vector<double> beta,
                       std::vector<Int> demands, std::vector<Int> caps)
    : caps_(std::move(caps)), beta_(std::move(beta)) {
  DemandTable table(alpha, demands);
  best_ = table.best();
  total_ = table.total;
  cover_.assign(1, 0.0);
}

void WEvaluator::extend_cover(Int demand) const {
  while (Int(cover_.size()) <= demand) {
    Int d = Int(cover_.size());
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < caps_.size(); ++t) {
      Int rest = d - caps_[t];
      if (rest < 0) rest = 0;
      double cand = beta_[t] + cover_[std::size_t(rest)];
      best = std::min(best, cand);
    }
    cover_.push_back(best);
  }
}

double WEvaluator::value(Int capacity) const {
  Int max_need = total_ - capacity;
  if (max_need > 0) extend_cover(max_need);
  double w = kNegInf;
  for (Int s = 0; s <= total_; ++s) {
    double base = best_[std::size_t(s)];
    if (base == kNegInf) continue;
    Int need = s - capacity;
    double cost = need > 0 ? cover_[std::size_t(need)] : 0.0;
    w = std::max(w, base - cost);
  }
  return w;
}

void strengthen(const ArcSetInstance& inst, std::vector<Int>& x, const std::vector<Int>& y) {
  const auto& a = inst.demands();
  const auto& b = inst.capacities();
  Int slack = inst.existing();
  for (std::size_t t = 0; t < b.size(); ++t) slack += b[t] * y[t];
  for (std::size_t q = 0; q < a.size(); ++q) slack -= a[q] * x[q];
  std::vector<std::size_t> order(a.size());
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a[i] > a[j]; });
  for (std::size_t q : order) {
    if (x[q] == 0 && a[q] <= slack) {
      x[q] = 1;
      slack -= a[q];
    }
  }
}

}  // namespace arcflow::knapsack
