#include "msn/core.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace msn {

Worker make_worker(int id, double rate) {
  return Worker{id, rate, 2.0 / rate};
}

double Instance::total_rst() const {
  double s = 0.0;
  for (const Task& t : tasks) s += t.rst;
  return s;
}

double Instance::tau_max() const {
  double v = -std::numeric_limits<double>::infinity();
  for (const Task& t : tasks) v = std::max(v, t.rst);
  return v;
}

double Instance::tau_min() const {
  double v = std::numeric_limits<double>::infinity();
  for (const Task& t : tasks) v = std::min(v, t.rst);
  return v;
}

double Instance::lambda_max() const {
  double v = -std::numeric_limits<double>::infinity();
  for (const Worker& w : workers) v = std::max(v, w.rate);
  return v;
}

double Instance::lambda_min() const {
  double v = std::numeric_limits<double>::infinity();
  for (const Worker& w : workers) v = std::min(v, w.rate);
  return v;
}

double Instance::weight_max() const {
  double v = -std::numeric_limits<double>::infinity();
  for (const Task& t : tasks) v = std::max(v, t.weight);
  return v;
}

double Instance::weight_min() const {
  double v = std::numeric_limits<double>::infinity();
  for (const Task& t : tasks) v = std::min(v, t.weight);
  return v;
}

double Instance::contact_min() const {
  double v = std::numeric_limits<double>::infinity();
  for (const Worker& w : workers) v = std::min(v, w.contact);
  return v;
}

void Instance::validate() const {
  if (workers.empty()) throw std::invalid_argument("instance: needs at least one worker");
  for (int i = 0; i < n(); ++i) {
    if (tasks[i].id != i) throw std::invalid_argument("instance: task ids must be 0..n-1 in order");
    if (!(tasks[i].rst > 0.0)) throw std::invalid_argument("instance: task rst must be positive");
    if (!(tasks[i].weight > 0.0)) throw std::invalid_argument("instance: task weight must be positive");
  }
  for (int j = 0; j < m(); ++j) {
    if (workers[j].id != j) throw std::invalid_argument("instance: worker ids must be 0..m-1 in order");
    if (!(workers[j].rate > 0.0)) throw std::invalid_argument("instance: worker rate must be positive");
    if (workers[j].contact < 0.0) throw std::invalid_argument("instance: worker contact must be nonnegative");
  }
}

Instance with_contacts(const Instance& inst, std::span<const double> contacts) {
  if (static_cast<int>(contacts.size()) != inst.m())
    throw std::invalid_argument("with_contacts: contact count != worker count");
  Instance out = inst;
  for (int j = 0; j < out.m(); ++j) out.workers[j].contact = contacts[j];
  return out;
}

std::vector<int> smith_order(std::span<const Task> tasks) {
  std::vector<int> order(tasks.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    double lhs = tasks[a].weight * tasks[b].rst;
    double rhs = tasks[b].weight * tasks[a].rst;
    if (lhs != rhs) return lhs > rhs;
    return a < b;
  });
  return order;
}

void validate_partition(const Instance& inst, const Schedule& sched) {
  if (static_cast<int>(sched.assignment.size()) != inst.m())
    throw std::invalid_argument("schedule: worker list count != m");
  std::vector<int> seen(inst.n(), 0);
  for (const auto& list : sched.assignment) {
    for (int id : list) {
      if (id < 0 || id >= inst.n())
        throw std::invalid_argument("schedule: unknown task id");
      if (seen[id]++)
        throw std::invalid_argument("schedule: task assigned more than once");
    }
  }
  for (int i = 0; i < inst.n(); ++i)
    if (!seen[i]) throw std::invalid_argument("schedule: task missing from assignment");
}

std::vector<double> completion_times(const Instance& inst, const Schedule& sched) {
  validate_partition(inst, sched);
  std::vector<double> c(inst.n(), 0.0);
  for (int j = 0; j < inst.m(); ++j) {
    double clock = inst.workers[j].contact;
    for (int id : sched.assignment[j]) {
      clock += inst.tasks[id].rst;
      c[id] = clock;
    }
  }
  return c;
}

double weighted_completion(const Instance& inst, const Schedule& sched) {
  std::vector<double> c = completion_times(inst, sched);
  double total = 0.0;
  for (int i = 0; i < inst.n(); ++i) total += inst.tasks[i].weight * c[i];
  return total;
}

double expected_workload(const Instance& inst, const Schedule& sched, int worker) {
  double ew = inst.workers.at(worker).contact;
  for (int id : sched.assignment.at(worker)) ew += inst.tasks.at(id).rst;
  return ew;
}

}  // namespace msn
