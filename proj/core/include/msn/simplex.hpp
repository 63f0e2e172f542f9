#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace msn {

// min c'x  s.t. rows of Ax {=, <=} b, x >= 0, with A stored by sparse
// columns. Small self-contained solver: no scaling, no presolve; scale
// here is a few hundred rows by a few tens of thousands of columns.
struct LinearProgram {
  enum class RowType : std::uint8_t { Equal, LessEqual };

  int num_cols = 0;
  std::vector<double> objective;                           // size num_cols
  std::vector<RowType> row_type;
  std::vector<double> rhs;
  std::vector<std::vector<std::pair<int, double>>> cols;   // (row, coef)

  int num_rows() const { return static_cast<int>(rhs.size()); }
  int add_col(double obj);
  void add_entry(int col, int row, double coef);
  int add_row(RowType type, double b);
};

struct SimplexOptions {
  double pivot_tol = 1e-9;
  double opt_tol = 1e-7;
  double feas_tol = 1e-7;
  int max_iterations = 0;  // 0: derived from problem size
  int refactor_every = 300;
};

struct SimplexSolution {
  std::vector<double> x;   // structural variables only
  double objective = 0.0;
  int iterations = 0;
  double max_residual = 0.0;      // primal constraint violation
  double min_reduced_cost = 0.0;  // optimality certificate (>= -opt_tol)
};

class SolverError : public std::runtime_error {
 public:
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

// Two-phase primal simplex. Maintains an explicit dense basis inverse
// with periodic refactorization; pricing is Dantzig with a Bland
// fallback after a run of degenerate pivots. Fully deterministic: all
// ties break on the smallest index.
SimplexSolution solve_simplex(const LinearProgram& lp, const SimplexOptions& opts = {});

}  // namespace msn
