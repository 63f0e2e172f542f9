#include "msn/online.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "msn/lp.hpp"
#include "msn/rounding.hpp"

namespace msn {

MeetingTrace sample_meetings(std::span<const Worker> workers, Rng& rng) {
  MeetingTrace trace;
  trace.order.reserve(workers.size());
  for (const Worker& w : workers)
    trace.order.push_back({w.id, rng.exponential(w.rate)});
  std::sort(trace.order.begin(), trace.order.end(), [](const Meeting& a, const Meeting& b) {
    if (a.time != b.time) return a.time < b.time;
    return a.worker < b.worker;
  });
  for (std::size_t i = 1; i < trace.order.size(); ++i)
    if (trace.order[i].time <= trace.order[i - 1].time)
      trace.order[i].time = std::nextafter(trace.order[i - 1].time,
                                           std::numeric_limits<double>::infinity());
  return trace;
}

namespace {

void check_trace(const Instance& inst, const MeetingTrace& trace) {
  if (static_cast<int>(trace.order.size()) != inst.m())
    throw std::invalid_argument("online: trace must cover every worker exactly once");
  std::vector<int> seen(inst.m(), 0);
  double prev = -1.0;
  for (const Meeting& mt : trace.order) {
    if (mt.worker < 0 || mt.worker >= inst.m() || seen[mt.worker]++)
      throw std::invalid_argument("online: trace names a worker twice or out of range");
    if (mt.time < 0.0 || mt.time <= prev)
      throw std::invalid_argument("online: trace times must be nonnegative and increasing");
    prev = mt.time;
  }
}

struct SubProblem {
  Instance sub;
  std::vector<int> task_orig;    // sub task id -> original id
  std::vector<int> worker_orig;  // sub worker id -> original id
  int met_sub = -1;              // sub index of the worker being met
};

SubProblem make_subproblem(const Instance& inst, const std::vector<char>& task_left,
                           const std::vector<char>& worker_left, int met_worker,
                           int* clamped) {
  SubProblem sp;
  double emt = 1.0 / inst.workers[met_worker].rate;
  for (int i = 0; i < inst.n(); ++i) {
    if (!task_left[i]) continue;
    Task t = inst.tasks[i];
    t.id = static_cast<int>(sp.sub.tasks.size());
    sp.sub.tasks.push_back(t);
    sp.task_orig.push_back(i);
  }
  for (int j = 0; j < inst.m(); ++j) {
    if (!worker_left[j]) continue;
    Worker w = inst.workers[j];
    w.id = static_cast<int>(sp.sub.workers.size());
    if (j == met_worker) {
      sp.met_sub = w.id;
      w.contact = emt;
    } else {
      double v = 2.0 / w.rate - emt;
      if (v < 0.0) {
        v = 0.0;
        if (clamped) ++*clamped;
      }
      w.contact = v;
    }
    sp.sub.workers.push_back(w);
    sp.worker_orig.push_back(j);
  }
  return sp;
}

// batch value when the delivery meeting has happened: feedback-only
// contact plus prefix RSTs
double committed_value(const Instance& inst, std::span<const int> batch, double rate) {
  double clock = 1.0 / rate;
  double v = 0.0;
  for (int id : batch) {
    clock += inst.tasks[id].rst;
    v += inst.tasks[id].weight * clock;
  }
  return v;
}

// batch value while both meetings are still ahead: full contact plus
// prefix RSTs
double planned_value(const Instance& inst, std::span<const int> batch, double contact) {
  double clock = contact;
  double v = 0.0;
  for (int id : batch) {
    clock += inst.tasks[id].rst;
    v += inst.tasks[id].weight * clock;
  }
  return v;
}

// shared replanning loop; `plan` maps a subproblem to its schedule
template <typename Planner>
OnlineResult run_online(const Instance& inst, const MeetingTrace& trace, double offline_wct,
                        Planner plan, OnlineEval eval, Rng* feedback_rng) {
  check_trace(inst, trace);
  if (eval == OnlineEval::Sampled && feedback_rng == nullptr)
    throw std::invalid_argument("online: sampled evaluation needs a random source");

  OnlineResult result;
  result.schedule.assignment.resize(inst.m());
  result.commit_time.assign(inst.m(), 0.0);
  result.log.initial_wct = offline_wct;

  std::vector<char> task_left(inst.n(), 1);
  std::vector<char> worker_left(inst.m(), 1);
  double committed_total = 0.0;

  for (const Meeting& mt : trace.order) {
    OnlineStep step;
    step.worker = mt.worker;
    step.meeting_time = mt.time;
    for (int i = 0; i < inst.n(); ++i)
      if (task_left[i]) step.remaining_before.push_back(i);

    SubProblem sp = make_subproblem(inst, task_left, worker_left, mt.worker, &step.clamped);
    step.overrides.assign(inst.m(), std::numeric_limits<double>::quiet_NaN());
    for (std::size_t sj = 0; sj < sp.worker_orig.size(); ++sj)
      step.overrides[sp.worker_orig[sj]] = sp.sub.workers[sj].contact;

    Schedule planned = plan(sp.sub);

    std::vector<int> batch;
    for (int sub_id : planned.assignment[sp.met_sub])
      batch.push_back(sp.task_orig[sub_id]);

    committed_total += committed_value(inst, batch, inst.workers[mt.worker].rate);
    double planned_total = 0.0;
    for (std::size_t sj = 0; sj < sp.worker_orig.size(); ++sj) {
      int orig = sp.worker_orig[sj];
      if (orig == mt.worker) continue;
      std::vector<int> other;
      for (int sub_id : planned.assignment[sj]) other.push_back(sp.task_orig[sub_id]);
      planned_total += planned_value(inst, other, inst.workers[orig].contact);
    }
    step.planned_wct = committed_total + planned_total;
    result.log.steps.push_back(std::move(step));

    result.schedule.assignment[mt.worker] = batch;
    result.commit_time[mt.worker] = mt.time;
    for (int id : batch) task_left[id] = 0;
    worker_left[mt.worker] = 0;
  }

  // score the realized run
  result.completion.assign(inst.n(), 0.0);
  double wct = 0.0;
  for (int j = 0; j < inst.m(); ++j) {
    const auto& batch = result.schedule.assignment[j];
    if (batch.empty()) continue;
    double rate = inst.workers[j].rate;
    double t0 = result.commit_time[j];
    double prefix = 0.0;
    double next_meeting = t0;
    for (int id : batch) {
      prefix += inst.tasks[id].rst;
      double c = 0.0;
      switch (eval) {
        case OnlineEval::Realized:
          c = t0 + prefix + 1.0 / rate;
          break;
        case OnlineEval::Expected:
          c = 1.0 / rate + prefix;
          break;
        case OnlineEval::Sampled: {
          double finish = t0 + prefix;
          while (next_meeting < finish) next_meeting += feedback_rng->exponential(rate);
          c = next_meeting;
          break;
        }
      }
      result.completion[id] = c;
      wct += inst.tasks[id].weight * c;
    }
  }
  result.wct = wct;
  return result;
}

}  // namespace

OnlineResult cosmos(const Instance& inst, const MeetingTrace& trace, TieRule tie,
                    OnlineEval eval, Rng* feedback_rng) {
  inst.validate();
  double offline = inst.n() > 0 ? weighted_completion(inst, lrf_schedule(inst, tie)) : 0.0;
  auto planner = [tie](const Instance& sub) { return lrf_schedule(sub, tie); };
  return run_online(inst, trace, offline, planner, eval, feedback_rng);
}

OnlineResult odis(const Instance& inst, const MeetingTrace& trace, double eta,
                  OnlineEval eval, Rng* feedback_rng) {
  inst.validate();
  double offline = 0.0;
  if (inst.n() > 0) {
    IntervalGrid grid;
    LpSolution sol = solve_instance_lp(inst, eta, &grid);
    LpModel model = build_lp(inst, grid);
    offline = weighted_completion(inst, dis_schedule(inst, model, sol).schedule);
  }
  auto planner = [eta](const Instance& sub) {
    if (sub.n() == 0) {
      Schedule empty;
      empty.assignment.resize(sub.m());
      return empty;
    }
    IntervalGrid grid = build_grid(std::max(sub.total_rst(), 1.0), eta);
    LpModel model = build_lp(sub, grid);
    LpSolution sol = solve_lp(model);
    return dis_schedule(sub, model, sol).schedule;
  };
  return run_online(inst, trace, offline, planner, eval, feedback_rng);
}

}  // namespace msn
