#include "msn/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace msn {

int LinearProgram::add_col(double obj) {
  objective.push_back(obj);
  cols.emplace_back();
  return num_cols++;
}

void LinearProgram::add_entry(int col, int row, double coef) {
  if (coef != 0.0) cols[col].emplace_back(row, coef);
}

int LinearProgram::add_row(RowType type, double b) {
  row_type.push_back(type);
  rhs.push_back(b);
  return static_cast<int>(rhs.size()) - 1;
}

namespace {

class RevisedSimplex {
 public:
  RevisedSimplex(const LinearProgram& lp, const SimplexOptions& opts)
      : lp_(lp), opts_(opts) {
    build();
  }

  SimplexSolution solve() {
    SimplexSolution out;
    if (rows_ == 0 || lp_.num_cols == 0) {
      out.x.assign(lp_.num_cols, 0.0);
      return out;
    }

    if (num_artificial_ > 0) {
      phase_ = 1;
      set_phase_costs();
      iterate();
      if (phase1_value() > opts_.feas_tol)
        throw SolverError("simplex: problem reported infeasible (phase-1 objective " +
                          std::to_string(phase1_value()) + ")");
      expel_artificials();
    }

    phase_ = 2;
    set_phase_costs();
    iterate();

    refactorize();
    return extract();
  }

 private:
  const LinearProgram& lp_;
  SimplexOptions opts_;

  int rows_ = 0;
  int structural_ = 0;
  int num_slack_ = 0;
  int num_artificial_ = 0;
  int total_cols_ = 0;

  // row-normalized problem (rhs >= 0)
  std::vector<double> nrhs_;
  std::vector<std::vector<std::pair<int, double>>> cols_;  // all columns incl. slack/artificial
  std::vector<double> cost_;                               // phase-dependent
  std::vector<int> basis_;                                 // column basic in each row
  std::vector<char> in_basis_;
  std::vector<double> binv_;                               // rows_ x rows_, row-major
  std::vector<double> xb_;
  std::vector<double> y_;   // duals, scratch
  std::vector<double> w_;   // FTRAN result, scratch

  int phase_ = 1;
  int iterations_ = 0;
  int degenerate_run_ = 0;
  bool bland_ = false;

  bool is_artificial(int col) const { return col >= structural_ + num_slack_; }

  void build() {
    rows_ = lp_.num_rows();
    structural_ = lp_.num_cols;
    cols_.assign(lp_.cols.begin(), lp_.cols.end());
    nrhs_.resize(rows_);

    std::vector<int> flip(rows_, 0);
    std::vector<int> sense(rows_);  // 0: equal, -1: <=, +1: >=
    for (int r = 0; r < rows_; ++r) {
      double b = lp_.rhs[r];
      flip[r] = b < 0.0;
      nrhs_[r] = std::abs(b);
      if (lp_.row_type[r] == LinearProgram::RowType::Equal)
        sense[r] = 0;
      else
        sense[r] = flip[r] ? +1 : -1;
    }
    if (std::any_of(flip.begin(), flip.end(), [](int f) { return f; })) {
      for (auto& col : cols_)
        for (auto& [r, v] : col)
          if (flip[r]) v = -v;
    }

    basis_.assign(rows_, -1);
    for (int r = 0; r < rows_; ++r) {
      if (sense[r] != 0) {
        int col = static_cast<int>(cols_.size());
        cols_.push_back({{r, sense[r] < 0 ? 1.0 : -1.0}});
        ++num_slack_;
        if (sense[r] < 0) basis_[r] = col;
      }
    }
    for (int r = 0; r < rows_; ++r) {
      if (basis_[r] < 0) {
        int col = static_cast<int>(cols_.size());
        cols_.push_back({{r, 1.0}});
        ++num_artificial_;
        basis_[r] = col;
      }
    }
    total_cols_ = static_cast<int>(cols_.size());

    in_basis_.assign(total_cols_, 0);
    for (int c : basis_) in_basis_[c] = 1;

    binv_.assign(static_cast<std::size_t>(rows_) * rows_, 0.0);
    for (int r = 0; r < rows_; ++r) binv_[static_cast<std::size_t>(r) * rows_ + r] = 1.0;
    xb_ = nrhs_;
    y_.resize(rows_);
    w_.resize(rows_);

    if (opts_.max_iterations <= 0)
      opts_.max_iterations = 2000 + 20 * rows_ + 2 * total_cols_;
  }

  void set_phase_costs() {
    cost_.assign(total_cols_, 0.0);
    if (phase_ == 1) {
      for (int c = structural_ + num_slack_; c < total_cols_; ++c) cost_[c] = 1.0;
    } else {
      for (int c = 0; c < structural_; ++c) cost_[c] = lp_.objective[c];
    }
  }

  double phase1_value() const {
    double v = 0.0;
    for (int r = 0; r < rows_; ++r)
      if (is_artificial(basis_[r])) v += xb_[r];
    return v;
  }

  void compute_duals() {
    std::fill(y_.begin(), y_.end(), 0.0);
    for (int r = 0; r < rows_; ++r) {
      double cb = cost_[basis_[r]];
      if (cb == 0.0) continue;
      const double* row = &binv_[static_cast<std::size_t>(r) * rows_];
      for (int k = 0; k < rows_; ++k) y_[k] += cb * row[k];
    }
  }

  double reduced_cost(int col) const {
    double d = cost_[col];
    for (const auto& [r, v] : cols_[col]) d -= y_[r] * v;
    return d;
  }

  // w = Binv * A_col
  void ftran(int col) {
    std::fill(w_.begin(), w_.end(), 0.0);
    for (const auto& [r, v] : cols_[col]) {
      const double* brow = &binv_[static_cast<std::size_t>(r)];
      for (int i = 0; i < rows_; ++i) w_[i] += v * brow[static_cast<std::size_t>(i) * rows_];
    }
  }

  void pivot(int row, int col) {
    double wp = w_[row];
    double* prow = &binv_[static_cast<std::size_t>(row) * rows_];
    double inv = 1.0 / wp;
    for (int k = 0; k < rows_; ++k) prow[k] *= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == row) continue;
      double f = w_[i];
      if (f == 0.0) continue;
      double* irow = &binv_[static_cast<std::size_t>(i) * rows_];
      for (int k = 0; k < rows_; ++k) irow[k] -= f * prow[k];
    }
    in_basis_[basis_[row]] = 0;
    basis_[row] = col;
    in_basis_[col] = 1;
  }

  void refactorize() {
    // rebuild Binv from the basis columns by Gauss-Jordan with partial
    // pivoting, then recompute the basic values from scratch
    std::vector<double> mat(static_cast<std::size_t>(rows_) * rows_, 0.0);
    for (int r = 0; r < rows_; ++r)
      for (const auto& [rr, v] : cols_[basis_[r]])
        mat[static_cast<std::size_t>(rr) * rows_ + r] = v;

    std::fill(binv_.begin(), binv_.end(), 0.0);
    for (int r = 0; r < rows_; ++r) binv_[static_cast<std::size_t>(r) * rows_ + r] = 1.0;

    for (int c = 0; c < rows_; ++c) {
      int piv = c;
      double best = std::abs(mat[static_cast<std::size_t>(c) * rows_ + c]);
      for (int r = c + 1; r < rows_; ++r) {
        double v = std::abs(mat[static_cast<std::size_t>(r) * rows_ + c]);
        if (v > best) {
          best = v;
          piv = r;
        }
      }
      if (best < 1e-12) throw SolverError("simplex: singular basis during refactorization");
      if (piv != c) {
        for (int k = 0; k < rows_; ++k) {
          std::swap(mat[static_cast<std::size_t>(piv) * rows_ + k], mat[static_cast<std::size_t>(c) * rows_ + k]);
          std::swap(binv_[static_cast<std::size_t>(piv) * rows_ + k], binv_[static_cast<std::size_t>(c) * rows_ + k]);
        }
      }
      double inv = 1.0 / mat[static_cast<std::size_t>(c) * rows_ + c];
      for (int k = 0; k < rows_; ++k) {
        mat[static_cast<std::size_t>(c) * rows_ + k] *= inv;
        binv_[static_cast<std::size_t>(c) * rows_ + k] *= inv;
      }
      for (int r = 0; r < rows_; ++r) {
        if (r == c) continue;
        double f = mat[static_cast<std::size_t>(r) * rows_ + c];
        if (f == 0.0) continue;
        for (int k = 0; k < rows_; ++k) {
          mat[static_cast<std::size_t>(r) * rows_ + k] -= f * mat[static_cast<std::size_t>(c) * rows_ + k];
          binv_[static_cast<std::size_t>(r) * rows_ + k] -= f * binv_[static_cast<std::size_t>(c) * rows_ + k];
        }
      }
    }

    for (int r = 0; r < rows_; ++r) {
      const double* row = &binv_[static_cast<std::size_t>(r) * rows_];
      double v = 0.0;
      for (int k = 0; k < rows_; ++k) v += row[k] * nrhs_[k];
      xb_[r] = (v < 0.0 && v > -opts_.feas_tol) ? 0.0 : v;
    }
  }

  bool eligible(int col) const {
    if (in_basis_[col]) return false;
    if (phase_ == 2 && is_artificial(col)) return false;
    return true;
  }

  int price() {
    compute_duals();
    int entering = -1;
    double best = -opts_.opt_tol;
    for (int col = 0; col < total_cols_; ++col) {
      if (!eligible(col)) continue;
      double d = reduced_cost(col);
      if (d < best) {
        entering = col;
        if (bland_) break;
        best = d;
      }
    }
    return entering;
  }

  // smallest-index guard rows first: a basic artificial must never move
  // away from zero, so it leaves as soon as the entering column touches
  // its row
  int choose_leaving(double& step) {
    for (int r = 0; r < rows_; ++r) {
      if (is_artificial(basis_[r]) && std::abs(w_[r]) > opts_.pivot_tol) {
        step = 0.0;
        return r;
      }
    }
    int leave = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int r = 0; r < rows_; ++r) {
      if (w_[r] <= opts_.pivot_tol) continue;
      double ratio = std::max(xb_[r], 0.0) / w_[r];
      if (ratio < best_ratio - 1e-12) {
        best_ratio = ratio;
        leave = r;
      } else if (ratio < best_ratio + 1e-12 && leave >= 0) {
        if (bland_) {
          if (basis_[r] < basis_[leave]) leave = r;
        } else if (std::abs(w_[r]) > std::abs(w_[leave])) {
          leave = r;
        }
      }
    }
    step = (leave >= 0) ? std::max(xb_[leave], 0.0) / w_[leave] : 0.0;
    return leave;
  }

  void iterate() {
    int since_refactor = 0;
    for (;;) {
      if (phase_ == 1 && phase1_value() <= opts_.feas_tol * 0.5) return;
      if (iterations_ >= opts_.max_iterations)
        throw SolverError("simplex: iteration cap " + std::to_string(opts_.max_iterations) +
                          " exceeded (phase " + std::to_string(phase_) + ")");

      int entering = price();
      if (entering < 0) return;

      ftran(entering);
      double step = 0.0;
      int leaving = choose_leaving(step);
      if (leaving < 0) throw SolverError("simplex: unbounded direction encountered");

      for (int r = 0; r < rows_; ++r) {
        if (r == leaving) continue;
        xb_[r] -= step * w_[r];
        if (xb_[r] < 0.0 && xb_[r] > -opts_.feas_tol) xb_[r] = 0.0;
      }
      xb_[leaving] = step;
      pivot(leaving, entering);

      ++iterations_;
      if (step <= 1e-12) {
        if (++degenerate_run_ > 60) bland_ = true;
      } else {
        degenerate_run_ = 0;
        bland_ = false;
      }
      if (++since_refactor >= opts_.refactor_every) {
        refactorize();
        since_refactor = 0;
      }
    }
  }

  void expel_artificials() {
    for (int r = 0; r < rows_; ++r) {
      if (!is_artificial(basis_[r])) continue;
      const double* brow = &binv_[static_cast<std::size_t>(r) * rows_];
      int found = -1;
      for (int col = 0; col < structural_ + num_slack_ && found < 0; ++col) {
        if (in_basis_[col]) continue;
        double elt = 0.0;
        for (const auto& [rr, v] : cols_[col]) elt += brow[rr] * v;
        if (std::abs(elt) > opts_.pivot_tol) found = col;
      }
      if (found >= 0) {
        ftran(found);
        xb_[r] = 0.0;
        pivot(r, found);
      }
      // otherwise the row is redundant; the artificial stays basic at
      // zero and the ratio-test guard keeps it there
    }
  }

  SimplexSolution extract() {
    SimplexSolution out;
    out.x.assign(structural_, 0.0);
    for (int r = 0; r < rows_; ++r) {
      int c = basis_[r];
      if (c < structural_) out.x[c] = std::max(xb_[r], 0.0);
    }
    out.objective = 0.0;
    for (int c = 0; c < structural_; ++c) out.objective += lp_.objective[c] * out.x[c];
    out.iterations = iterations_;

    std::vector<double> ax(rows_, 0.0);
    for (int c = 0; c < structural_; ++c) {
      if (out.x[c] == 0.0) continue;
      for (const auto& [r, v] : lp_.cols[c]) ax[r] += v * out.x[c];
    }
    double resid = 0.0;
    for (int r = 0; r < rows_; ++r) {
      double viol = (lp_.row_type[r] == LinearProgram::RowType::Equal)
                        ? std::abs(ax[r] - lp_.rhs[r])
                        : std::max(0.0, ax[r] - lp_.rhs[r]);
      resid = std::max(resid, viol);
    }
    out.max_residual = resid;

    compute_duals();
    double min_d = 0.0;
    for (int col = 0; col < total_cols_; ++col) {
      if (!eligible(col)) continue;
      min_d = std::min(min_d, reduced_cost(col));
    }
    out.min_reduced_cost = min_d;
    return out;
  }
};

}  // namespace

SimplexSolution solve_simplex(const LinearProgram& lp, const SimplexOptions& opts) {
  RevisedSimplex solver(lp, opts);
  return solver.solve();
}

}  // namespace msn
