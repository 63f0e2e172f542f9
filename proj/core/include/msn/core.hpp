#pragma once

#include <span>
#include <string>
#include <vector>

namespace msn {

// Absolute tolerance used for value comparisons throughout the library.
inline constexpr double kValueTol = 1e-9;

// One crowdsourcing task: required service time tau and weight w.
// Ids are 0-based internally and contiguous within an Instance;
// serialized text (JSON, reports) uses 1-based ids.
struct Task {
  int id = 0;
  double rst = 0.0;
  double weight = 0.0;
};

// One crowd worker: exponential meeting rate lambda and total contact
// time e. Offline, e = 2/lambda (distribution meeting + feedback
// meeting); online replanning overrides contact directly.
struct Worker {
  int id = 0;
  double rate = 0.0;
  double contact = 0.0;
};

Worker make_worker(int id, double rate);

struct Instance {
  std::vector<Task> tasks;
  std::vector<Worker> workers;

  int n() const { return static_cast<int>(tasks.size()); }
  int m() const { return static_cast<int>(workers.size()); }

  double total_rst() const;
  double tau_max() const;
  double tau_min() const;
  double lambda_max() const;
  double lambda_min() const;
  double weight_max() const;
  double weight_min() const;
  double contact_min() const;

  // Throws std::invalid_argument on violated invariants (m >= 1,
  // positive rst/weight/rate, contiguous ids).
  void validate() const;
};

// Returns a copy of `inst` with per-worker contacts replaced. Rates are
// kept; used by the online module for replanning overrides.
Instance with_contacts(const Instance& inst, std::span<const double> contacts);

// Per-worker ordered task lists; list order is processing order.
// placement_key is optional ordering provenance (RIS/DIS store the
// interval left endpoint t_i, MDIS stores the LP completion time);
// either empty or indexed by task id.
struct Schedule {
  std::vector<std::vector<int>> assignment;
  std::vector<double> placement_key;
};

// Task ids sorted by non-increasing weight/rst (Smith's rule),
// ties broken by ascending id. Comparison is by cross-multiplication,
// so equal ratios built from equal values tie exactly.
std::vector<int> smith_order(std::span<const Task> tasks);

// Throws std::invalid_argument unless the schedule assigns every task
// of the instance exactly once and names no unknown worker/task.
void validate_partition(const Instance& inst, const Schedule& sched);

// C_i = e_j + sum of RSTs up to and including task i on its worker.
// Result is indexed by task id. The last task on worker j completes at
// EW_j = e_j + total assigned RST.
std::vector<double> completion_times(const Instance& inst, const Schedule& sched);

// Total weighted completion time: sum_i w_i * C_i.
double weighted_completion(const Instance& inst, const Schedule& sched);

// EW_j = e_j + total RST assigned to worker j by the schedule.
double expected_workload(const Instance& inst, const Schedule& sched, int worker);

}  // namespace msn
