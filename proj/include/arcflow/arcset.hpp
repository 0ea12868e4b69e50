#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace arcflow {

using Int = long long;

inline constexpr double kFeasTol = 1e-9;
inline constexpr double kViolationTol = 1e-6;

/// One arc's unsplittable flow set
///   X = { (x,y) in {0,1}^|Q| x Z_+^|T| : a.x <= b.y + c }.
/// Capacities are kept sorted nondecreasing; construction rejects input
/// whose capacity constraint is redundant (a.1 - c <= 0).
class ArcSetInstance {
 public:
  ArcSetInstance(std::vector<Int> demands, std::vector<Int> capacities, Int existing);

  const std::vector<Int>& demands() const { return demands_; }
  const std::vector<Int>& capacities() const { return capacities_; }
  Int existing() const { return existing_; }

  std::size_t num_commodities() const { return demands_.size(); }
  std::size_t num_facilities() const { return capacities_.size(); }
  Int total_demand() const { return total_demand_; }

 private:
  std::vector<Int> demands_;
  std::vector<Int> capacities_;
  Int existing_;
  Int total_demand_;
};

/// Candidate fractional point (x, y) to separate.
struct FracPoint {
  std::vector<double> x;
  std::vector<double> y;
};

/// Inequality alpha.x <= beta.y + gamma.
struct CutInequality {
  std::vector<double> alpha;
  std::vector<double> beta;
  double gamma = 0.0;
  bool integralized = false;

  double lhs_minus_rhs(const FracPoint& p) const;
};

enum class Provenance {
  TrivialBound,
  ClosedFormP5,
  ClosedFormP6,
  ClosedFormP7,
  ClosedFormP8,
  RowGeneration,
};

const char* to_string(Provenance p);

enum class Verdict { Member, Violated };

struct SeparationOutcome {
  Verdict verdict = Verdict::Member;
  std::optional<CutInequality> cut;
  double violation = 0.0;
  Provenance provenance = Provenance::TrivialBound;
  // Set when a violated inequality was found but the scaling stage rejected
  // it; the verdict reads Member but the point is known to lie outside P.
  bool cut_dropped = false;
};

// rho_t(x) = max{ceil((a.x - c)/b_t), 0} for binary x.
Int rho(const ArcSetInstance& inst, const std::vector<Int>& x, std::size_t t);

// r = max{ceil(-c/b_1), 0}.
Int r_value(const ArcSetInstance& inst);

// Smallest index attaining max_q x_q.
std::size_t d_index(const FracPoint& point);

// Q~ = {q : x_q > sum_{t>=2} y_t}; requires |T| >= 2.
std::vector<std::size_t> q_tilde(const FracPoint& point);

// Checks the trivial inequalities 0 <= x_q <= 1, y_t >= 0, a.x <= b.y + c.
// Returns a Violated outcome for the first one broken beyond kFeasTol,
// or nullopt when the point lies in X_LP.
std::optional<SeparationOutcome> screen_trivial(const ArcSetInstance& inst,
                                                const FracPoint& point);

inline Int ceil_div(Int num, Int den) {
  // den > 0
  Int q = num / den;
  if (num % den != 0 && num > 0) ++q;
  return q;
}

}  // namespace arcflow
