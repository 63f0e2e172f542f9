#pragma once

#include <vector>

#include "msn/core.hpp"
#include "msn/greedy.hpp"
#include "msn/lp.hpp"
#include "msn/rng.hpp"

namespace msn {

// Per-task placement law induced by the LP solution: task i goes to
// worker-interval (j, l) with probability y_ijl |I_l| / tau_i.
struct PlacementDistribution {
  struct Atom {
    int worker;
    int level;
    double prob;  // y |I| / tau
    double mass;  // y |I|
  };
  std::vector<std::vector<Atom>> per_task;
  std::vector<double> total_prob;  // per-task sum, 1 within tolerance
};

// Throws std::invalid_argument when some task's probability mass
// deviates from 1 by more than `tol`.
PlacementDistribution placement_distribution(const LpModel& model, const LpSolution& sol,
                                             double tol = 1e-7);

// Tie order among tasks sharing an interval on one worker. The
// randomized rounder breaks ties uniformly; SmallerIndex matches the
// ordering rule the derandomized variant (and its analytic expectation)
// uses, which is what the Monte-Carlo cross-checks need.
enum class RisTie { UniformRandom, SmallerIndex };

// Randomized interval-indexed rounding: draw a worker-interval pair per
// task independently, then run each worker's tasks back-to-back in
// non-decreasing order of the interval left endpoint t_i.
Schedule ris_round(const Instance& inst, const LpModel& model, const LpSolution& sol,
                   Rng& rng, RisTie tie = RisTie::UniformRandom);

// Partial placement during derandomization: decided tasks hold one
// (worker, interval) indicator; undecided tasks keep their fractional
// placement law from the LP solution they condition on.
class DisState {
 public:
  DisState(const Instance& inst, const LpModel& model, const LpSolution& sol);

  bool decided(int task) const { return worker_[task] >= 0; }
  int worker_of(int task) const { return worker_[task]; }
  int level_of(int task) const { return level_[task]; }
  int num_decided() const { return num_decided_; }
  void place(int task, int worker, int level);

  const Instance& instance() const { return *inst_; }
  const LpModel& model() const { return *model_; }
  const LpSolution& solution() const { return *sol_; }
  const PlacementDistribution& distribution() const { return dist_; }

 private:
  const Instance* inst_;
  const LpModel* model_;
  const LpSolution* sol_;
  PlacementDistribution dist_;
  std::vector<int> worker_;
  std::vector<int> level_;
  int num_decided_ = 0;
};

struct ExpectationProfile {
  double total = 0.0;
  std::vector<double> per_task;
};

// Exact conditional expectation of sum_q w_q C_q given the decided
// placements, with the same-interval order rule "smaller index first".
// Decided tasks contribute their realized prefix; undecided tasks
// average over their placement law.
ExpectationProfile expected_completion_profile(const DisState& state);
double expected_wct(const DisState& state);

struct DisOptions {
  // cross-check the incremental expectation against a full recompute
  // after every placement
  bool verify_full = false;
  double lemma_tol = 1e-9;
};

struct DisResult {
  Schedule schedule;
  double initial_expectation = 0.0;  // E with nothing decided
  double final_expectation = 0.0;    // equals the schedule's WCT
};

// Derandomization by conditional expectations: tasks in ascending id,
// each placed at the pair minimizing the resulting expectation. Each
// step must not increase the expectation (throws std::logic_error
// otherwise -- that would falsify the convex-combination argument).
DisResult dis_schedule(const Instance& inst, const LpModel& model, const LpSolution& sol,
                       const DisOptions& opts = {});

// List scheduling in non-decreasing order of the LP completion times,
// onto the least-loaded worker by EW. Ties: ascending id / smallest
// worker index.
Schedule mdis_schedule(const Instance& inst, const LpSolution& sol);

}  // namespace msn
