#pragma once

#include <span>
#include <vector>

#include "msn/core.hpp"
#include "msn/greedy.hpp"
#include "msn/rng.hpp"

namespace msn {

struct Meeting {
  int worker = 0;
  double time = 0.0;
};

// Realized first-meeting sequence, strictly increasing in time.
struct MeetingTrace {
  std::vector<Meeting> order;
};

// First meeting time per worker drawn exponential(lambda_j), sorted.
MeetingTrace sample_meetings(std::span<const Worker> workers, Rng& rng);

// One replanning step. `overrides` holds the contact value used for
// every still-unassigned worker (NaN for workers already committed);
// `planned_wct` is the step's bookkeeping objective: committed batches
// frozen at feedback-only contact, everything still planned valued at
// its full contact.
struct OnlineStep {
  int worker = -1;
  double meeting_time = 0.0;
  std::vector<int> remaining_before;
  std::vector<double> overrides;
  int clamped = 0;  // overrides that would have gone negative
  double planned_wct = 0.0;
};

struct OnlineStepLog {
  double initial_wct = 0.0;  // offline plan value before any meeting
  std::vector<OnlineStep> steps;

  bool monotone(double tol = 1e-9) const {
    double prev = initial_wct;
    for (const auto& s : steps) {
      if (s.planned_wct > prev + tol) return false;
      prev = s.planned_wct;
    }
    return true;
  }
  int total_clamped() const {
    int c = 0;
    for (const auto& s : steps) c += s.clamped;
    return c;
  }
};

// How realized runs are scored. Realized: actual meeting time for the
// delivery plus expected feedback. Expected: both meetings at their
// bookkeeping values (matches the final step log entry). Sampled:
// actual delivery time plus a simulated meeting process for feedback.
enum class OnlineEval { Realized, Expected, Sampled };

struct OnlineResult {
  Schedule schedule;
  OnlineStepLog log;
  std::vector<double> commit_time;  // per worker, meeting time of its batch
  std::vector<double> completion;   // per task, under the chosen eval mode
  double wct = 0.0;
};

// Meeting-triggered replanning around the ratio-order list scheduler:
// on meeting worker j, rank workers by EW with contacts overridden to
// 1/lambda_j for j and 2/lambda_k - 1/lambda_j for the rest (clamped at
// zero), commit j's batch, drop it from the pool, repeat.
OnlineResult cosmos(const Instance& inst, const MeetingTrace& trace,
                    TieRule tie = TieRule::SmallestWorkerIndex,
                    OnlineEval eval = OnlineEval::Realized, Rng* feedback_rng = nullptr);

// Same loop with the LP + derandomized rounding as the planner; each
// committed batch keeps its interval order (ties to smaller index).
OnlineResult odis(const Instance& inst, const MeetingTrace& trace, double eta,
                  OnlineEval eval = OnlineEval::Realized, Rng* feedback_rng = nullptr);

}  // namespace msn
