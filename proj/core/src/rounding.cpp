#include "msn/rounding.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace msn {

namespace {

constexpr double kMassFloor = 1e-14;

// Grid-shaped scratch: one value per (worker, level).
struct Cells {
  int levels = 0;
  std::vector<double> v;
  Cells(int m, int levels_) : levels(levels_), v(static_cast<std::size_t>(m) * levels_, 0.0) {}
  double& at(int j, int l) { return v[static_cast<std::size_t>(j) * levels + l]; }
  double at(int j, int l) const { return v[static_cast<std::size_t>(j) * levels + l]; }
  void cumulate() {
    for (std::size_t j = 0; j * levels < v.size(); ++j)
      for (int l = 1; l < levels; ++l) v[j * levels + l] += v[j * levels + l - 1];
  }
};

}  // namespace

PlacementDistribution placement_distribution(const LpModel& model, const LpSolution& sol,
                                             double tol) {
  PlacementDistribution dist;
  dist.per_task.resize(model.n);
  dist.total_prob.resize(model.n);
  for (int i = 0; i < model.n; ++i) {
    double total = 0.0;
    for (int j = 0; j < model.m; ++j) {
      for (int l = 0; l < model.levels(); ++l) {
        double y = sol.y[model.y_index(i, j, l)];
        if (y <= kMassFloor) continue;
        double mass = y * model.grid.length[l];
        double prob = mass / model.rst[i];
        dist.per_task[i].push_back({j, l, prob, mass});
        total += prob;
      }
    }
    if (std::abs(total - 1.0) > tol)
      throw std::invalid_argument("placement distribution: task " + std::to_string(i + 1) +
                                  " has probability mass " + std::to_string(total));
    dist.total_prob[i] = total;
  }
  return dist;
}

Schedule ris_round(const Instance& inst, const LpModel& model, const LpSolution& sol,
                   Rng& rng, RisTie tie) {
  PlacementDistribution dist = placement_distribution(model, sol);

  struct Placed {
    int id;
    int level;
    double key;  // interval left endpoint
    double tiebreak;
  };
  std::vector<std::vector<Placed>> per_worker(inst.m());

  for (int i = 0; i < inst.n(); ++i) {
    const auto& atoms = dist.per_task[i];
    double u = rng.uniform01() * dist.total_prob[i];
    const PlacementDistribution::Atom* chosen = &atoms.back();
    double acc = 0.0;
    for (const auto& a : atoms) {
      acc += a.prob;
      if (u < acc) {
        chosen = &a;
        break;
      }
    }
    double tb = (tie == RisTie::UniformRandom) ? rng.uniform01() : 0.0;
    per_worker[chosen->worker].push_back(
        {i, chosen->level, model.grid.start_key(chosen->level), tb});
  }

  Schedule sched;
  sched.assignment.resize(inst.m());
  sched.placement_key.assign(inst.n(), 0.0);
  for (int j = 0; j < inst.m(); ++j) {
    auto& list = per_worker[j];
    std::sort(list.begin(), list.end(), [&](const Placed& a, const Placed& b) {
      if (a.level != b.level) return a.level < b.level;
      if (tie == RisTie::UniformRandom && a.tiebreak != b.tiebreak)
        return a.tiebreak < b.tiebreak;
      return a.id < b.id;
    });
    for (const Placed& p : list) {
      sched.assignment[j].push_back(p.id);
      sched.placement_key[p.id] = p.key;
    }
  }
  return sched;
}

DisState::DisState(const Instance& inst, const LpModel& model, const LpSolution& sol)
    : inst_(&inst),
      model_(&model),
      sol_(&sol),
      dist_(placement_distribution(model, sol)),
      worker_(inst.n(), -1),
      level_(inst.n(), -1) {}

void DisState::place(int task, int worker, int level) {
  if (decided(task)) throw std::logic_error("DisState: task already placed");
  worker_[task] = worker;
  level_[task] = level;
  ++num_decided_;
}

// Shared sweep: walks tasks in ascending id and evaluates every task's
// conditional expected completion using running prefix masses. The
// prefix of a task at (j, l) is every decided RST in earlier intervals
// of worker j, decided smaller-id RST in the same interval, plus the
// undecided y-mass in the same positions (excluding the task's own).
ExpectationProfile expected_completion_profile(const DisState& state) {
  const Instance& inst = state.instance();
  const LpModel& model = state.model();
  const int n = inst.n();
  const int m = inst.m();
  const int levels = model.levels();

  ExpectationProfile out;
  out.per_task.assign(n, 0.0);
  if (n == 0) return out;

  Cells xcum(m, levels);  // decided RST, cumulated over levels
  Cells ycum(m, levels);  // undecided y-mass, cumulated over levels
  for (int k = 0; k < n; ++k) {
    if (state.decided(k)) {
      xcum.at(state.worker_of(k), state.level_of(k)) += inst.tasks[k].rst;
    } else {
      for (const auto& a : state.distribution().per_task[k]) ycum.at(a.worker, a.level) += a.mass;
    }
  }
  xcum.cumulate();
  ycum.cumulate();

  Cells xlt(m, levels);  // decided RST at (j,l) over ids < current
  Cells ylt(m, levels);  // undecided mass at (j,l) over ids < current

  std::vector<double> own(levels);
  for (int i = 0; i < n; ++i) {
    const double tau = inst.tasks[i].rst;
    if (state.decided(i)) {
      int j = state.worker_of(i);
      int l = state.level_of(i);
      double before = (l > 0 ? xcum.at(j, l - 1) + ycum.at(j, l - 1) : 0.0);
      out.per_task[i] = inst.workers[j].contact + tau + before + xlt.at(j, l) + ylt.at(j, l);
      xlt.at(j, l) += tau;
    } else {
      double e = 0.0;
      for (int j = 0; j < m; ++j) {
        std::fill(own.begin(), own.end(), 0.0);
        bool any = false;
        for (const auto& a : state.distribution().per_task[i]) {
          if (a.worker == j) {
            own[a.level] = a.mass;
            any = true;
          }
        }
        if (!any) continue;
        double own_cum = 0.0;
        for (int l = 0; l < levels; ++l) {
          double mass = own[l];
          if (l > 0) own_cum += own[l - 1];
          if (mass <= kMassFloor) continue;
          double before = (l > 0 ? xcum.at(j, l - 1) + ycum.at(j, l - 1) - own_cum : 0.0);
          double d = inst.workers[j].contact + tau + before + xlt.at(j, l) + ylt.at(j, l);
          e += (mass / tau) * d;
        }
      }
      out.per_task[i] = e;
      for (const auto& a : state.distribution().per_task[i]) ylt.at(a.worker, a.level) += a.mass;
    }
  }

  out.total = 0.0;
  for (int i = 0; i < n; ++i) out.total += inst.tasks[i].weight * out.per_task[i];
  return out;
}

double expected_wct(const DisState& state) { return expected_completion_profile(state).total; }

namespace {

Schedule schedule_from_placements(const Instance& inst, const IntervalGrid& grid,
                                  const DisState& state) {
  struct Entry {
    int id;
    int level;
  };
  std::vector<std::vector<Entry>> per_worker(inst.m());
  for (int i = 0; i < inst.n(); ++i)
    per_worker[state.worker_of(i)].push_back({i, state.level_of(i)});

  Schedule sched;
  sched.assignment.resize(inst.m());
  sched.placement_key.assign(inst.n(), 0.0);
  for (int j = 0; j < inst.m(); ++j) {
    std::sort(per_worker[j].begin(), per_worker[j].end(), [](const Entry& a, const Entry& b) {
      if (a.level != b.level) return a.level < b.level;
      return a.id < b.id;
    });
    for (const Entry& e : per_worker[j]) {
      sched.assignment[j].push_back(e.id);
      sched.placement_key[e.id] = grid.start_key(e.level);
    }
  }
  return sched;
}

}  // namespace

DisResult dis_schedule(const Instance& inst, const LpModel& model, const LpSolution& sol,
                       const DisOptions& opts) {
  DisResult result;
  DisState state(inst, model, sol);
  const int n = inst.n();
  const int m = inst.m();
  const int levels = model.levels();

  if (n == 0) {
    result.schedule.assignment.resize(inst.m());
    return result;
  }

  ExpectationProfile profile = expected_completion_profile(state);
  result.initial_expectation = profile.total;
  double total = profile.total;
  std::vector<double>& ecur = profile.per_task;

  const PlacementDistribution& dist = state.distribution();

  for (int i = 0; i < n; ++i) {
    const double tau = inst.tasks[i].rst;
    const double wi = inst.tasks[i].weight;

    // current-state aggregates, rebuilt per step
    Cells xcum(m, levels), ycum(m, levels);   // full decided / undecided mass
    Cells xlt(m, levels), ylt(m, levels);     // same, restricted to ids < i
    Cells own(m, levels);                     // task i's own mass
    for (int k = 0; k < n; ++k) {
      if (state.decided(k)) {
        xcum.at(state.worker_of(k), state.level_of(k)) += inst.tasks[k].rst;
        if (k < i) xlt.at(state.worker_of(k), state.level_of(k)) += inst.tasks[k].rst;
      } else {
        for (const auto& a : dist.per_task[k]) {
          ycum.at(a.worker, a.level) += a.mass;
          if (k < i) ylt.at(a.worker, a.level) += a.mass;
          if (k == i) own.at(a.worker, a.level) = a.mass;
        }
      }
    }
    xcum.cumulate();
    ycum.cumulate();
    Cells own_cum = own;
    own_cum.cumulate();

    // Removing task i's fractional mass lowers every other task's
    // expectation by a candidate-independent amount.
    double removed = 0.0;
    for (int k = 0; k < n; ++k) {
      if (k == i) continue;
      const double wk = inst.tasks[k].weight;
      if (state.decided(k)) {
        int j = state.worker_of(k);
        int l = state.level_of(k);
        double bit = (l > 0 ? own_cum.at(j, l - 1) : 0.0) + (i < k ? own.at(j, l) : 0.0);
        removed += wk * bit;
      } else {
        for (const auto& a : dist.per_task[k]) {
          double bit = (a.level > 0 ? own_cum.at(a.worker, a.level - 1) : 0.0) +
                       (i < k ? own.at(a.worker, a.level) : 0.0);
          removed += wk * a.prob * bit;
        }
      }
    }

    // Weight-aggregated views of everyone else's placement mass on each
    // (j, l): what i's own RST will push back once committed there.
    Cells undec_w(m, levels);        // sum w_k p_k(j,l), undecided k != i
    Cells undec_w_gt(m, levels);     // same, k > i only
    Cells dec_w(m, levels);          // decided weight at (j,l)
    Cells dec_w_gt(m, levels);       // decided weight at (j,l), id > i
    for (int k = 0; k < n; ++k) {
      if (k == i) continue;
      const double wk = inst.tasks[k].weight;
      if (state.decided(k)) {
        dec_w.at(state.worker_of(k), state.level_of(k)) += wk;
        if (k > i) dec_w_gt.at(state.worker_of(k), state.level_of(k)) += wk;
      } else {
        for (const auto& a : dist.per_task[k]) {
          undec_w.at(a.worker, a.level) += wk * a.prob;
          if (k > i) undec_w_gt.at(a.worker, a.level) += wk * a.prob;
        }
      }
    }

    int best_j = -1, best_l = -1;
    double best_total = 0.0, best_d = 0.0;
    for (int j = 0; j < m; ++j) {
      double suffix_undec = 0.0, suffix_dec = 0.0;
      for (int l = 0; l < levels; ++l) suffix_undec += undec_w.at(j, l);
      for (int l = 0; l < levels; ++l) suffix_dec += dec_w.at(j, l);
      for (int l = 0; l < levels; ++l) {
        suffix_undec -= undec_w.at(j, l);  // now sum over levels > l
        suffix_dec -= dec_w.at(j, l);
        double before = (l > 0 ? xcum.at(j, l - 1) + ycum.at(j, l - 1) - own_cum.at(j, l - 1) : 0.0);
        double d = inst.workers[j].contact + tau + before + xlt.at(j, l) + ylt.at(j, l);
        double pushed = suffix_undec + undec_w_gt.at(j, l) + suffix_dec + dec_w_gt.at(j, l);
        double cand = total + wi * (d - ecur[i]) - removed + tau * pushed;
        if (best_j < 0 || cand < best_total - 1e-15) {
          best_j = j;
          best_l = l;
          best_total = cand;
          best_d = d;
        }
      }
    }

    if (best_total > total + opts.lemma_tol)
      throw std::logic_error("dis_schedule: no placement keeps the conditional expectation "
                             "from rising (step " + std::to_string(i) + ")");

    // commit and propagate the expectation change to everyone else
    for (int k = 0; k < n; ++k) {
      if (k == i) continue;
      if (state.decided(k)) {
        int j = state.worker_of(k);
        int l = state.level_of(k);
        double delta = -((l > 0 ? own_cum.at(j, l - 1) : 0.0) + (i < k ? own.at(j, l) : 0.0));
        if (j == best_j && (best_l < l || (best_l == l && i < k))) delta += tau;
        ecur[k] += delta;
      } else {
        double delta = 0.0;
        for (const auto& a : dist.per_task[k]) {
          delta -= a.prob * ((a.level > 0 ? own_cum.at(a.worker, a.level - 1) : 0.0) +
                             (i < k ? own.at(a.worker, a.level) : 0.0));
          if (a.worker == best_j && (a.level > best_l || (a.level == best_l && i < k)))
            delta += a.prob * tau;
        }
        ecur[k] += delta;
      }
    }
    ecur[i] = best_d;
    total = best_total;
    state.place(i, best_j, best_l);

    if (opts.verify_full) {
      double full = expected_wct(state);
      if (std::abs(full - total) > 1e-6 + 1e-9 * std::abs(full))
        throw std::logic_error("dis_schedule: incremental expectation drifted from full recompute");
    }
  }

  result.schedule = schedule_from_placements(inst, model.grid, state);
  result.final_expectation = total;

  double realized = weighted_completion(inst, result.schedule);
  if (std::abs(realized - total) > 1e-6 + 1e-9 * std::abs(realized))
    throw std::logic_error("dis_schedule: final expectation does not match the schedule value");
  return result;
}

Schedule mdis_schedule(const Instance& inst, const LpSolution& sol) {
  std::vector<int> order(inst.n());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (sol.cbar[a] != sol.cbar[b]) return sol.cbar[a] < sol.cbar[b];
    return a < b;
  });

  std::vector<double> seed(inst.m());
  for (int j = 0; j < inst.m(); ++j) seed[j] = inst.workers[j].contact;
  Schedule sched = list_schedule(inst, order, seed, TieRule::SmallestWorkerIndex);
  sched.placement_key = sol.cbar;
  return sched;
}

}  // namespace msn
