#include "msn/greedy.hpp"

#include <stdexcept>

namespace msn {

EwTracker::EwTracker(const Instance& inst) {
  ew_.reserve(inst.m());
  contact_.reserve(inst.m());
  for (const Worker& w : inst.workers) {
    ew_.push_back(w.contact);
    contact_.push_back(w.contact);
  }
}

EwTracker::EwTracker(std::span<const double> seed_ew, std::span<const double> contacts)
    : ew_(seed_ew.begin(), seed_ew.end()), contact_(contacts.begin(), contacts.end()) {
  if (ew_.size() != contact_.size())
    throw std::invalid_argument("EwTracker: seed/contact size mismatch");
}

int EwTracker::argmin(TieRule tie) const {
  int best = 0;
  for (int j = 1; j < static_cast<int>(ew_.size()); ++j) {
    if (ew_[j] < ew_[best]) {
      best = j;
    } else if (ew_[j] == ew_[best]) {
      switch (tie) {
        case TieRule::SmallestWorkerIndex:
          break;  // keep the earlier index
        case TieRule::LargestWorkerIndex:
          best = j;
          break;
        case TieRule::LargestContact:
          if (contact_[j] > contact_[best]) best = j;
          break;
      }
    }
  }
  return best;
}

Schedule list_schedule(const Instance& inst, std::span<const int> order,
                       std::span<const double> initial_ew, TieRule tie) {
  std::vector<double> contacts(inst.m());
  for (int j = 0; j < inst.m(); ++j) contacts[j] = inst.workers[j].contact;
  EwTracker tracker(initial_ew, contacts);

  Schedule sched;
  sched.assignment.resize(inst.m());
  for (int id : order) {
    int j = tracker.argmin(tie);
    sched.assignment[j].push_back(id);
    tracker.add(j, inst.tasks[id].rst);
  }
  return sched;
}

Schedule lrf_schedule(const Instance& inst, TieRule tie) {
  std::vector<int> order = smith_order(inst.tasks);
  std::vector<double> seed(inst.m());
  for (int j = 0; j < inst.m(); ++j) seed[j] = inst.workers[j].contact;
  return list_schedule(inst, order, seed, tie);
}

}  // namespace msn
