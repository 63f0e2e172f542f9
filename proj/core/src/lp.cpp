#include "msn/lp.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace msn {

LpModel build_lp(const Instance& inst, const IntervalGrid& grid) {
  LpModel model;
  model.n = inst.n();
  model.m = inst.m();
  model.grid = grid;
  model.rst.resize(model.n);
  model.weight.resize(model.n);
  for (int i = 0; i < model.n; ++i) {
    model.rst[i] = inst.tasks[i].rst;
    model.weight[i] = inst.tasks[i].weight;
  }
  model.contact.resize(model.m);
  for (int j = 0; j < model.m; ++j) model.contact[j] = inst.workers[j].contact;

  if (model.n == 0) return model;

  const int levels = model.levels();
  LinearProgram& lp = model.lp;

  for (int i = 0; i < model.n; ++i)
    for (int j = 0; j < model.m; ++j)
      for (int l = 0; l < levels; ++l) lp.add_col(0.0);
  for (int i = 0; i < model.n; ++i) lp.add_col(model.weight[i]);

  // rows: assignment equalities, capacities, then the two z bounds
  std::vector<int> assign_row(model.n), dlow_row(model.n), slow_row(model.n);
  for (int i = 0; i < model.n; ++i)
    assign_row[i] = lp.add_row(LinearProgram::RowType::Equal, 1.0);
  std::vector<int> cap_row(model.m * levels);
  for (int j = 0; j < model.m; ++j)
    for (int l = 0; l < levels; ++l)
      cap_row[j * levels + l] = lp.add_row(LinearProgram::RowType::LessEqual, 1.0);
  for (int i = 0; i < model.n; ++i) {
    dlow_row[i] = lp.add_row(LinearProgram::RowType::LessEqual, 0.0);
    slow_row[i] = lp.add_row(LinearProgram::RowType::LessEqual, 0.0);
  }

  for (int i = 0; i < model.n; ++i) {
    for (int j = 0; j < model.m; ++j) {
      for (int l = 0; l < levels; ++l) {
        int col = model.y_index(i, j, l);
        lp.add_entry(col, assign_row[i], model.mass_coef(i, l));
        lp.add_entry(col, cap_row[j * levels + l], 1.0);
        lp.add_entry(col, dlow_row[i], model.d_coef(i, j, l));
        lp.add_entry(col, slow_row[i], model.grid.length[l]);
      }
    }
    lp.add_entry(model.z_index(i), dlow_row[i], -1.0);
    lp.add_entry(model.z_index(i), slow_row[i], -1.0);
  }
  return model;
}

LpSolution solve_lp(const LpModel& model, const SimplexOptions& opts) {
  LpSolution sol;
  if (model.n == 0) return sol;

  SimplexSolution raw = solve_simplex(model.lp, opts);

  const int ny = model.n * model.m * model.levels();
  sol.y.assign(raw.x.begin(), raw.x.begin() + ny);
  sol.iterations = raw.iterations;
  sol.max_residual = raw.max_residual;
  sol.min_reduced_cost = raw.min_reduced_cost;

  // cbar from the recovered y, not the raw z column, so the stored
  // solution satisfies cbar_i = max(D_i, sum y |I|) exactly
  sol.cbar.resize(model.n);
  sol.objective = 0.0;
  for (int i = 0; i < model.n; ++i) {
    double frac_time = 0.0;
    for (int j = 0; j < model.m; ++j)
      for (int l = 0; l < model.levels(); ++l)
        frac_time += sol.y[model.y_index(i, j, l)] * model.grid.length[l];
    sol.cbar[i] = std::max(d_lower_bound(model, sol, i), frac_time);
    sol.objective += model.weight[i] * sol.cbar[i];
  }
  return sol;
}

LpSolution solve_instance_lp(const Instance& inst, double eta, IntervalGrid* grid_out) {
  IntervalGrid grid = build_grid(std::max(inst.total_rst(), 1.0), eta);
  if (grid_out) *grid_out = grid;
  return solve_lp(build_lp(inst, grid));
}

double d_lower_bound(const LpModel& model, const LpSolution& sol, int task) {
  double d = 0.0;
  for (int j = 0; j < model.m; ++j)
    for (int l = 0; l < model.levels(); ++l)
      d += sol.y[model.y_index(task, j, l)] * model.d_coef(task, j, l);
  return d;
}

void dump_lp(const LpModel& model, std::ostream& os) {
  auto yname = [](int i, int j, int l) {
    return "y_" + std::to_string(i + 1) + "_" + std::to_string(j + 1) + "_" + std::to_string(l);
  };
  auto zname = [](int i) { return "c_" + std::to_string(i + 1); };

  os << "\\ interval-indexed relaxation: " << model.n << " tasks, " << model.m
     << " workers, " << model.levels() << " intervals, eta=" << model.grid.eta << "\n";
  os << "Minimize\n obj:";
  for (int i = 0; i < model.n; ++i)
    os << (i ? " + " : " ") << model.weight[i] << " " << zname(i);
  os << "\nSubject To\n";
  for (int i = 0; i < model.n; ++i) {
    os << " assign_" << (i + 1) << ":";
    for (int j = 0; j < model.m; ++j)
      for (int l = 0; l < model.levels(); ++l)
        os << " + " << model.mass_coef(i, l) << " " << yname(i, j, l);
    os << " = 1\n";
  }
  for (int j = 0; j < model.m; ++j) {
    for (int l = 0; l < model.levels(); ++l) {
      os << " cap_" << (j + 1) << "_" << l << ":";
      for (int i = 0; i < model.n; ++i) os << " + " << yname(i, j, l);
      os << " <= 1\n";
    }
  }
  for (int i = 0; i < model.n; ++i) {
    os << " dbound_" << (i + 1) << ":";
    for (int j = 0; j < model.m; ++j)
      for (int l = 0; l < model.levels(); ++l)
        os << " + " << model.d_coef(i, j, l) << " " << yname(i, j, l);
    os << " - " << zname(i) << " <= 0\n";
    os << " tbound_" << (i + 1) << ":";
    for (int j = 0; j < model.m; ++j)
      for (int l = 0; l < model.levels(); ++l)
        os << " + " << model.grid.length[l] << " " << yname(i, j, l);
    os << " - " << zname(i) << " <= 0\n";
  }
  os << "End\n";
}

}  // namespace msn
