#pragma once

#include <iosfwd>
#include <vector>

#include "msn/core.hpp"
#include "msn/interval.hpp"
#include "msn/simplex.hpp"

namespace msn {

// Interval-indexed relaxation. Variables y[i][j][l] measure the time
// task i is processed by worker j inside interval I_l, divided by |I_l|.
// Per-task completion variables are eliminated through one auxiliary
// column z_i bounded below by both completion bounds; minimization
// makes z_i attain their max at any optimum.
//
//   min  sum_i w_i z_i
//   s.t. sum_{j,l} y_ijl |I_l| / tau_i = 1              (per task)
//        sum_i y_ijl <= 1                               (per worker, interval)
//        D_i(y) - z_i <= 0                              (per task)
//        sum_{j,l} y_ijl |I_l| - z_i <= 0               (per task)
//        y >= 0
//   D_i(y) = sum_{j,l} [ (y_ijl |I_l| / tau_i)(e_j + ref_l) + y_ijl |I_l| / 2 ]
// with ref_l = (1+eta)^(l-1) and the l = 0 case defined as 1/2.
struct LpModel {
  int n = 0;
  int m = 0;
  IntervalGrid grid;
  std::vector<double> rst;      // per task
  std::vector<double> weight;   // per task
  std::vector<double> contact;  // per worker
  LinearProgram lp;

  int levels() const { return grid.count(); }
  int y_index(int task, int worker, int level) const {
    return (task * m + worker) * levels() + level;
  }
  int z_index(int task) const { return n * m * levels() + task; }

  // probability mass p_ijl = y_ijl |I_l| / tau_i used by the rounders
  double mass_coef(int task, int level) const { return grid.length[level] / rst[task]; }

  // coefficient of y_ijl inside D_i
  double d_coef(int task, int worker, int level) const {
    return mass_coef(task, level) * (contact[worker] + grid.lower_ref(level)) +
           0.5 * grid.length[level];
  }
};

struct LpSolution {
  std::vector<double> y;     // dense, n*m*(L+1)
  std::vector<double> cbar;  // per-task completion lower bound
  double objective = 0.0;    // sum_i w_i cbar_i
  int iterations = 0;
  double max_residual = 0.0;
  double min_reduced_cost = 0.0;

  double y_at(const LpModel& model, int task, int worker, int level) const {
    return y[model.y_index(task, worker, level)];
  }
};

LpModel build_lp(const Instance& inst, const IntervalGrid& grid);

// Throws SolverError if the iteration cap is hit or the solver reports
// the (always-feasible) model infeasible.
LpSolution solve_lp(const LpModel& model, const SimplexOptions& opts = {});

// Grid construction + model build + solve; handles n = 0.
LpSolution solve_instance_lp(const Instance& inst, double eta, IntervalGrid* grid_out = nullptr);

// D_i(y): completion-time lower bound of task i under fractional y.
double d_lower_bound(const LpModel& model, const LpSolution& sol, int task);

// Plain-text listing (LP file format) for external cross-checks.
void dump_lp(const LpModel& model, std::ostream& os);

}  // namespace msn
