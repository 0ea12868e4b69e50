#include "arcflow/lp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace arcflow::lp {
namespace {

constexpr double kTol = 1e-9;       // bound/dual feasibility
constexpr double kPivotTol = 1e-9;  // pivot eligibility
constexpr int kBlandAfter = 4000;
constexpr int kMaxIters = 200000;

enum VarStatus : std::int8_t { AtLower = 0, AtUpper = 1, Basic = 2, FreeNb = 3 };

// Dense tableau simplex over the equality form  A x + s = rhs  with bounded
// structural variables and one logical variable per row.
class Simplex {
 public:
  explicit Simplex(const LpModel& model) : model_(model) {
    n_ = model.objective.size();
    m_ = model.rows.size();
    N_ = n_ + m_;
    lb_.resize(N_);
    ub_.resize(N_);
    cost_.assign(N_, 0.0);
    for (std::size_t j = 0; j < n_; ++j) {
      lb_[j] = model.lower[j];
      ub_[j] = model.upper[j];
      cost_[j] = model.objective[j];
      if (lb_[j] > ub_[j] + kTol) throw std::invalid_argument("lower > upper");
    }
    for (std::size_t i = 0; i < m_; ++i) {
      std::size_t j = n_ + i;
      switch (model.rows[i].sense) {
        case RowSense::Le: lb_[j] = 0.0; ub_[j] = kInf; break;
        case RowSense::Ge: lb_[j] = -kInf; ub_[j] = 0.0; break;
        case RowSense::Eq: lb_[j] = 0.0; ub_[j] = 0.0; break;
      }
    }
  }

  LpSolution run(const Basis* warm) {
    if (!install_basis(warm)) install_logical_basis();
    LpStatus st = LpStatus::Optimal;
    for (int round = 0; round < 3; ++round) {
      if (!factor()) {
        install_logical_basis();
        if (!factor()) throw std::runtime_error("lp: singular logical basis");
      }
      st = phase1();
      if (st == LpStatus::Optimal) st = phase2();
      if (st != LpStatus::Optimal) break;
      // refactor and double-check primal feasibility at the claimed optimum
      if (!factor()) throw std::runtime_error("lp: singular final basis");
      compute_xb();
      if (primal_infeasibility() <= 1e-8) break;
    }
    return extract(st);
  }

 private:
  double col(std::size_t i, std::size_t j) const {
    if (j < n_) {
      const auto& r = model_.rows[i].coeffs;
      return j < r.size() ? r[j] : 0.0;
    }
    return (j - n_) == i ? 1.0 : 0.0;
  }

  double nb_value(std::size_t j) const {
    switch (status_[j]) {
      case AtLower: return lb_[j];
      case AtUpper: return ub_[j];
      case FreeNb: return 0.0;
      default: return 0.0;
    }
  }

  void install_logical_basis() {
    status_.assign(N_, AtLower);
    basic_.resize(m_);
    for (std::size_t j = 0; j < n_; ++j) {
      if (std::isfinite(lb_[j])) status_[j] = AtLower;
      else if (std::isfinite(ub_[j])) status_[j] = AtUpper;
      else status_[j] = FreeNb;
    }
    for (std::size_t i = 0; i < m_; ++i) {
      basic_[i] = n_ + i;
      status_[n_ + i] = Basic;
    }
  }

  bool install_basis(const Basis* warm) {
    if (!warm || warm->status.size() > N_) return false;
    status_.assign(N_, AtLower);
    std::copy(warm->status.begin(), warm->status.end(), status_.begin());
    // rows appended after the token was taken: their logicals enter the basis
    std::size_t old_logicals = warm->status.size() >= n_ ? warm->status.size() - n_ : 0;
    if (warm->status.size() < n_) return false;
    for (std::size_t i = old_logicals; i < m_; ++i) status_[n_ + i] = Basic;
    basic_.clear();
    for (std::size_t j = 0; j < N_; ++j)
      if (status_[j] == Basic) basic_.push_back(j);
    if (basic_.size() != m_) return false;
    for (std::size_t j = 0; j < n_; ++j) {
      if (status_[j] == AtLower && !std::isfinite(lb_[j])) status_[j] = FreeNb;
      if (status_[j] == AtUpper && !std::isfinite(ub_[j])) status_[j] = FreeNb;
    }
    return true;
  }

  // tab = B^-1 [A | I], rhsb = B^-1 rhs, via Gauss-Jordan with partial pivot.
  bool factor() {
    std::vector<double> B(m_ * m_);
    tab_.assign(m_ * N_, 0.0);
    rhsb_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t k = 0; k < m_; ++k) B[i * m_ + k] = col(i, basic_[k]);
      for (std::size_t j = 0; j < N_; ++j) tab_[i * N_ + j] = col(i, j);
      rhsb_[i] = model_.rows[i].rhs;
    }
    for (std::size_t k = 0; k < m_; ++k) {
      std::size_t piv = k;
      for (std::size_t i = k + 1; i < m_; ++i)
        if (std::fabs(B[i * m_ + k]) > std::fabs(B[piv * m_ + k])) piv = i;
      if (std::fabs(B[piv * m_ + k]) < 1e-11) return false;
      if (piv != k) {
        for (std::size_t j = k; j < m_; ++j) std::swap(B[piv * m_ + j], B[k * m_ + j]);
        for (std::size_t j = 0; j < N_; ++j) std::swap(tab_[piv * N_ + j], tab_[k * N_ + j]);
        std::swap(rhsb_[piv], rhsb_[k]);
        // rows are swapped, but row k still ends up hosting basic_[k]'s unit
        // column once the elimination finishes, so basic_ stays put
      }
      double d = B[k * m_ + k];
      for (std::size_t j = k; j < m_; ++j) B[k * m_ + j] /= d;
      for (std::size_t j = 0; j < N_; ++j) tab_[k * N_ + j] /= d;
      rhsb_[k] /= d;
      for (std::size_t i = 0; i < m_; ++i) {
        if (i == k) continue;
        double f = B[i * m_ + k];
        if (f == 0.0) continue;
        for (std::size_t j = k; j < m_; ++j) B[i * m_ + j] -= f * B[k * m_ + j];
        for (std::size_t j = 0; j < N_; ++j) tab_[i * N_ + j] -= f * tab_[k * N_ + j];
        rhsb_[i] -= f * rhsb_[k];
      }
    }
    return true;
  }

  void compute_xb() {
    xb_.assign(m_, 0.0);
    for (std::size_t i = 0; i < m_; ++i) xb_[i] = rhsb_[i];
    for (std::size_t j = 0; j < N_; ++j) {
      if (status_[j] == Basic) continue;
      double v = nb_value(j);
      if (v == 0.0) continue;
      for (std::size_t i = 0; i < m_; ++i) xb_[i] -= tab_[i * N_ + j] * v;
    }
  }

  double primal_infeasibility() const {
    double s = 0.0;
    for (std::size_t i = 0; i < m_; ++i) {
      std::size_t j = basic_[i];
      if (xb_[i] < lb_[j]) s += lb_[j] - xb_[i];
      if (xb_[i] > ub_[j]) s += xb_[i] - ub_[j];
    }
    return s;
  }

  void pivot(std::size_t r, std::size_t e) {
    double piv = tab_[r * N_ + e];
    for (std::size_t j = 0; j < N_; ++j) tab_[r * N_ + j] /= piv;
    rhsb_[r] /= piv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r) continue;
      double f = tab_[i * N_ + e];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < N_; ++j) tab_[i * N_ + j] -= f * tab_[r * N_ + j];
      rhsb_[i] -= f * rhsb_[r];
    }
    basic_[r] = e;
  }

  struct Ratio {
    double step = kInf;
    std::size_t row = SIZE_MAX;  // SIZE_MAX => entering's own bound flip
    std::int8_t leave_to = AtLower;
  };

  // Step limit when entering variable e moves in direction sigma.
  // infeasible-aware: basics beyond a bound block when reaching it.
  Ratio ratio_test(std::size_t e, int sigma, bool bland = false) const {
    Ratio best;
    double span = ub_[e] - lb_[e];
    if (std::isfinite(span)) best.step = span;
    for (std::size_t i = 0; i < m_; ++i) {
      double a = tab_[i * N_ + e];
      if (std::fabs(a) < kPivotTol) continue;
      std::size_t bj = basic_[i];
      double rate = -sigma * a;  // d xb_i / d step
      double x = xb_[i];
      double cand = kInf;
      std::int8_t to = AtLower;
      if (x > ub_[bj] + kTol) {
        if (rate < 0.0) { cand = (x - ub_[bj]) / (-rate); to = AtUpper; }
      } else if (x < lb_[bj] - kTol) {
        if (rate > 0.0) { cand = (lb_[bj] - x) / rate; to = AtLower; }
      } else {
        if (rate < 0.0 && std::isfinite(lb_[bj])) {
          cand = (x - lb_[bj]) / (-rate);
          to = AtLower;
        } else if (rate > 0.0 && std::isfinite(ub_[bj])) {
          cand = (ub_[bj] - x) / rate;
          to = AtUpper;
        }
      }
      if (cand < 0.0) cand = 0.0;
      bool better;
      if (cand < best.step - 1e-12) {
        better = true;
      } else if (cand < best.step + 1e-12 && best.row != SIZE_MAX) {
        // tie: Bland picks the lowest variable index (anti-cycling); Dantzig
        // mode prefers the larger pivot
        better = bland ? bj < basic_[best.row]
                       : std::fabs(a) > std::fabs(tab_[best.row * N_ + e]);
      } else {
        better = false;
      }
      if (better) {
        best.step = cand;
        best.row = i;
        best.leave_to = to;
      }
    }
    return best;
  }

  void apply_step(std::size_t e, int sigma, const Ratio& r) {
    if (r.row == SIZE_MAX) {
      // bound flip
      status_[e] = (sigma > 0) ? AtUpper : AtLower;
      compute_xb();
      return;
    }
    std::size_t leaving = basic_[r.row];
    pivot(r.row, e);
    status_[e] = Basic;
    status_[leaving] = r.leave_to;
    if (status_[leaving] == AtLower && !std::isfinite(lb_[leaving]))
      status_[leaving] = FreeNb;
    if (status_[leaving] == AtUpper && !std::isfinite(ub_[leaving]))
      status_[leaving] = FreeNb;
    compute_xb();
  }

  LpStatus phase1() {
    compute_xb();
    for (int iter = 0; iter < kMaxIters; ++iter) {
      std::vector<double> w(m_, 0.0);
      bool infeas = false;
      for (std::size_t i = 0; i < m_; ++i) {
        std::size_t j = basic_[i];
        if (xb_[i] > ub_[j] + kTol) { w[i] = 1.0; infeas = true; }
        else if (xb_[i] < lb_[j] - kTol) { w[i] = -1.0; infeas = true; }
      }
      if (!infeas) return LpStatus::Optimal;
      bool bland = iter > kBlandAfter;
      std::size_t e = SIZE_MAX;
      int sigma = 0;
      double best = kTol;
      for (std::size_t j = 0; j < N_; ++j) {
        if (status_[j] == Basic) continue;
        double g = 0.0;
        for (std::size_t i = 0; i < m_; ++i)
          if (w[i] != 0.0) g += w[i] * tab_[i * N_ + j];
        int s = 0;
        if ((status_[j] == AtLower || status_[j] == FreeNb) && g > kTol) s = 1;
        else if ((status_[j] == AtUpper || status_[j] == FreeNb) && g < -kTol) s = -1;
        if (s == 0) continue;
        if (bland) { e = j; sigma = s; break; }
        if (std::fabs(g) > best) { best = std::fabs(g); e = j; sigma = s; }
      }
      if (e == SIZE_MAX) return LpStatus::Infeasible;
      Ratio r = ratio_test(e, sigma, bland);
      if (!std::isfinite(r.step)) return LpStatus::Infeasible;  // cannot happen
      apply_step(e, sigma, r);
    }
    throw std::runtime_error("lp: phase-1 iteration limit");
  }

  LpStatus phase2() {
    compute_xb();
    for (int iter = 0; iter < kMaxIters; ++iter) {
      std::vector<double> cb(m_);
      for (std::size_t i = 0; i < m_; ++i) cb[i] = cost_[basic_[i]];
      bool bland = iter > kBlandAfter;
      std::size_t e = SIZE_MAX;
      int sigma = 0;
      double best = kTol;
      for (std::size_t j = 0; j < N_; ++j) {
        if (status_[j] == Basic) continue;
        double d = cost_[j];
        for (std::size_t i = 0; i < m_; ++i) d -= cb[i] * tab_[i * N_ + j];
        int s = 0;
        if ((status_[j] == AtLower || status_[j] == FreeNb) && d > kTol) s = 1;
        else if ((status_[j] == AtUpper || status_[j] == FreeNb) && d < -kTol) s = -1;
        if (s == 0) continue;
        if (bland) { e = j; sigma = s; break; }
        if (std::fabs(d) > best) { best = std::fabs(d); e = j; sigma = s; }
      }
      if (e == SIZE_MAX) return LpStatus::Optimal;
      Ratio r = ratio_test(e, sigma, bland);
      if (!std::isfinite(r.step)) return LpStatus::Unbounded;
      apply_step(e, sigma, r);
    }
    throw std::runtime_error("lp: phase-2 iteration limit");
  }

  LpSolution extract(LpStatus st) {
    LpSolution sol;
    sol.status = st;
    sol.basis.status.assign(status_.begin(), status_.end());
    if (st != LpStatus::Optimal) return sol;
    sol.values.assign(n_, 0.0);
    std::vector<double> all(N_);
    for (std::size_t j = 0; j < N_; ++j)
      if (status_[j] != Basic) all[j] = nb_value(j);
    for (std::size_t i = 0; i < m_; ++i) all[basic_[i]] = xb_[i];
    for (std::size_t j = 0; j < n_; ++j) sol.values[j] = all[j];
    sol.objective = 0.0;
    for (std::size_t j = 0; j < n_; ++j) sol.objective += cost_[j] * sol.values[j];
    std::vector<double> cb(m_);
    for (std::size_t i = 0; i < m_; ++i) cb[i] = cost_[basic_[i]];
    sol.reduced_costs.assign(n_, 0.0);
    for (std::size_t j = 0; j < n_; ++j) {
      double d = cost_[j];
      for (std::size_t i = 0; i < m_; ++i) d -= cb[i] * tab_[i * N_ + j];
      sol.reduced_costs[j] = d;
    }
    sol.duals.assign(m_, 0.0);
    for (std::size_t i = 0; i < m_; ++i) {
      double y = 0.0;
      for (std::size_t k = 0; k < m_; ++k) y += cb[k] * tab_[k * N_ + n_ + i];
      sol.duals[i] = y;
    }
    for (std::size_t i = 0; i < m_; ++i)
      if (status_[n_ + i] != Basic) sol.active_rows.push_back(i);
    return sol;
  }

  const LpModel& model_;
  std::size_t n_ = 0, m_ = 0, N_ = 0;
  std::vector<double> lb_, ub_, cost_;
  std::vector<std::int8_t> status_;
  std::vector<std::size_t> basic_;
  std::vector<double> tab_, rhsb_, xb_;
};

}  // namespace

LpSolution solve(const LpModel& model) {
  Simplex s(model);
  return s.run(nullptr);
}

LpSolution resolve(const LpModel& model, const Basis& warm) {
  Simplex s(model);
  return s.run(&warm);
}

}  // namespace arcflow::lp
