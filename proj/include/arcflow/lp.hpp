#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

namespace arcflow::lp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class RowSense { Le, Ge, Eq };

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpRow {
  std::vector<double> coeffs;  // dense, length = variable count
  RowSense sense = RowSense::Le;
  double rhs = 0.0;
};

// Warm-start token: statuses of all variables (structural + one logical per
// row). Opaque to callers; invalidated by anything but appending rows.
struct Basis {
  std::vector<std::int8_t> status;  // see lp.cpp VarStatus
};

/// Maximization LP with explicit variable bounds.
struct LpModel {
  std::vector<double> objective;
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<LpRow> rows;

  std::size_t add_variable(double obj, double lb, double ub) {
    objective.push_back(obj);
    lower.push_back(lb);
    upper.push_back(ub);
    return objective.size() - 1;
  }
  void add_row(LpRow row) { rows.push_back(std::move(row)); }
};

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  std::vector<double> values;
  double objective = 0.0;
  Basis basis;
  // Rows whose logical variable is nonbasic, i.e. rows active at the basic
  // solution (the constraints entering the Theorem-1 rank argument).
  std::vector<std::size_t> active_rows;
  // Reduced cost per structural variable and dual value per row.
  std::vector<double> reduced_costs;
  std::vector<double> duals;
};

// Solves from the logical (all-slack) basis.
LpSolution solve(const LpModel& model);

// Re-solves after rows were appended, starting from a previous basis token.
// Result agrees with a cold solve; falls back to one when the warm basis is
// unusable.
LpSolution resolve(const LpModel& model, const Basis& warm);

}  // namespace arcflow::lp
