#pragma once

#include <span>
#include <vector>

#include "msn/core.hpp"

namespace msn {

// argmin-EW tie handling. SmallestWorkerIndex is the deterministic
// default; LargestContact reproduces the counterexample assignment in
// which the big equal-ratio task lands on the slow worker.
enum class TieRule {
  SmallestWorkerIndex,
  LargestWorkerIndex,
  LargestContact,
};

// Running expected workload per worker, seeded with the contact times.
class EwTracker {
 public:
  explicit EwTracker(const Instance& inst);
  EwTracker(std::span<const double> seed_ew, std::span<const double> contacts);

  int argmin(TieRule tie) const;
  void add(int worker, double rst) { ew_[worker] += rst; }
  double ew(int worker) const { return ew_[worker]; }
  std::span<const double> values() const { return ew_; }

 private:
  std::vector<double> ew_;
  std::vector<double> contact_;
};

// List scheduling: walk `order` and append each task to the worker with
// the currently smallest EW. Shared backbone of LRF (ratio order),
// MDIS (LP completion-time order) and the online replanning loops.
Schedule list_schedule(const Instance& inst, std::span<const int> order,
                       std::span<const double> initial_ew, TieRule tie);

// Algorithm: tasks in Smith order onto the least-loaded worker by EW.
Schedule lrf_schedule(const Instance& inst, TieRule tie = TieRule::SmallestWorkerIndex);

}  // namespace msn
