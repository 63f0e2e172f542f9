#include "msn/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "msn/greedy.hpp"

namespace msn {

namespace {

std::uint64_t checked_pow(std::uint64_t base, int exp, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (int i = 0; i < exp; ++i) {
    if (v > cap / std::max<std::uint64_t>(base, 1)) return cap + 1;
    v *= base;
  }
  return v;
}

// WCT of one assignment with every worker processing in the given task
// order (tasks must arrive in Smith order for optimality).
double assignment_wct(const Instance& inst, const std::vector<int>& order,
                      const std::vector<int>& digit, std::vector<double>& clock) {
  for (int j = 0; j < inst.m(); ++j) clock[j] = inst.workers[j].contact;
  double wct = 0.0;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    int id = order[pos];
    int j = digit[pos];
    clock[j] += inst.tasks[id].rst;
    wct += inst.tasks[id].weight * clock[j];
  }
  return wct;
}

Schedule schedule_from_digits(const Instance& inst, const std::vector<int>& order,
                              const std::vector<int>& digit) {
  Schedule sched;
  sched.assignment.resize(inst.m());
  for (std::size_t pos = 0; pos < order.size(); ++pos)
    sched.assignment[digit[pos]].push_back(order[pos]);
  return sched;
}

void decode_base_m(std::uint64_t index, int m, std::vector<int>& digit) {
  for (std::size_t pos = 0; pos < digit.size(); ++pos) {
    digit[pos] = static_cast<int>(index % m);
    index /= m;
  }
}

struct SearchBest {
  double wct = std::numeric_limits<double>::infinity();
  std::uint64_t index = 0;
};

SearchBest scan_range(const Instance& inst, const std::vector<int>& order, std::uint64_t lo,
                      std::uint64_t hi) {
  SearchBest best;
  std::vector<int> digit(order.size());
  std::vector<double> clock(inst.m());
  for (std::uint64_t idx = lo; idx < hi; ++idx) {
    decode_base_m(idx, inst.m(), digit);
    double wct = assignment_wct(inst, order, digit, clock);
    if (wct < best.wct - 1e-15 || (wct < best.wct + 1e-15 && idx < best.index)) {
      best.wct = wct;
      best.index = idx;
    }
  }
  return best;
}

// Set-partition enumeration for interchangeable workers: digits are
// restricted-growth strings (digit[p] <= 1 + max of earlier digits).
void scan_rgs(const Instance& inst, const std::vector<int>& order, std::vector<int>& digit,
              std::size_t pos, int used, double& best_wct, std::vector<int>& best_digit,
              std::vector<double>& clock) {
  if (pos == order.size()) {
    double wct = assignment_wct(inst, order, digit, clock);
    if (wct < best_wct - 1e-15) {
      best_wct = wct;
      best_digit = digit;
    }
    return;
  }
  int limit = std::min(used + 1, inst.m());
  for (int j = 0; j < limit; ++j) {
    digit[pos] = j;
    scan_rgs(inst, order, digit, pos + 1, std::max(used, j + 1), best_wct, best_digit, clock);
  }
}

}  // namespace

BruteForceResult brute_optimum(const Instance& inst, std::uint64_t guard) {
  inst.validate();
  const int n = inst.n();
  const int m = inst.m();
  BruteForceResult result;
  if (n == 0) {
    result.schedule.assignment.resize(m);
    return result;
  }

  std::uint64_t space = checked_pow(m, n, guard);
  if (space > guard)
    throw std::length_error("brute_optimum: m^n = " + std::to_string(m) + "^" +
                            std::to_string(n) + " exceeds the enumeration guard " +
                            std::to_string(guard));

  std::vector<int> order = smith_order(inst.tasks);

  bool equal_contacts = true;
  for (int j = 1; j < m; ++j)
    if (inst.workers[j].contact != inst.workers[0].contact) equal_contacts = false;

  if (equal_contacts && m > 1) {
    std::vector<int> digit(n);
    std::vector<int> winner(n, 0);
    std::vector<double> clock(m);
    double best_wct = std::numeric_limits<double>::infinity();
    scan_rgs(inst, order, digit, 0, 0, best_wct, winner, clock);
    result.schedule = schedule_from_digits(inst, order, winner);
    result.wct = best_wct;
    return result;
  }

  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  std::uint64_t chunk = std::max<std::uint64_t>(1, space / (hw * 4));
  std::vector<std::future<SearchBest>> futures;
  for (std::uint64_t lo = 0; lo < space; lo += chunk) {
    std::uint64_t hi = std::min(space, lo + chunk);
    futures.push_back(std::async(std::launch::async,
                                 [&, lo, hi] { return scan_range(inst, order, lo, hi); }));
  }
  SearchBest best;
  for (auto& f : futures) {
    SearchBest b = f.get();
    if (b.wct < best.wct - 1e-15 || (b.wct < best.wct + 1e-15 && b.index < best.index))
      best = b;
  }
  std::vector<int> digit(n);
  decode_base_m(best.index, m, digit);
  result.schedule = schedule_from_digits(inst, order, digit);
  result.wct = best.wct;
  return result;
}

BruteForceResult brute_optimum_all_orders(const Instance& inst, std::uint64_t guard) {
  inst.validate();
  const int n = inst.n();
  const int m = inst.m();
  BruteForceResult result;
  if (n == 0) {
    result.schedule.assignment.resize(m);
    return result;
  }
  std::uint64_t space = checked_pow(m, n, guard);
  if (space > guard || n > 10)
    throw std::length_error("brute_optimum_all_orders: search space too large");

  std::vector<int> ids(n);
  std::iota(ids.begin(), ids.end(), 0);

  double best_total = std::numeric_limits<double>::infinity();
  Schedule best_schedule;

  std::vector<int> digit(n);
  for (std::uint64_t idx = 0; idx < space; ++idx) {
    decode_base_m(idx, m, digit);
    double total = 0.0;
    Schedule sched;
    sched.assignment.resize(m);
    for (int j = 0; j < m; ++j) {
      std::vector<int> mine;
      for (int i = 0; i < n; ++i)
        if (digit[i] == j) mine.push_back(i);
      if (mine.empty()) continue;
      // best order of this worker's set, independent of other workers
      std::sort(mine.begin(), mine.end());
      double best_wct = std::numeric_limits<double>::infinity();
      std::vector<int> best_order;
      std::vector<int> perm = mine;
      do {
        double clock = inst.workers[j].contact;
        double wct = 0.0;
        for (int id : perm) {
          clock += inst.tasks[id].rst;
          wct += inst.tasks[id].weight * clock;
        }
        if (wct < best_wct - 1e-15) {
          best_wct = wct;
          best_order = perm;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      total += best_wct;
      sched.assignment[j] = best_order;
    }
    if (total < best_total - 1e-15) {
      best_total = total;
      best_schedule = sched;
    }
  }
  result.schedule = best_schedule;
  result.wct = best_total;
  return result;
}

EastmanTerms eastman_terms(const Instance& inst, const Schedule& sched, bool ratio_sorted) {
  validate_partition(inst, sched);
  EastmanTerms terms;

  std::vector<int> order;
  if (ratio_sorted) {
    order = smith_order(inst.tasks);
  } else {
    order.resize(inst.n());
    std::iota(order.begin(), order.end(), 0);
  }
  double prefix = 0.0;
  for (int id : order) {
    prefix += inst.tasks[id].rst;
    terms.m1 += inst.tasks[id].weight * prefix;
  }
  for (const Task& t : inst.tasks) terms.mn += t.weight * t.rst;
  for (int j = 0; j < inst.m(); ++j)
    for (int id : sched.assignment[j])
      terms.m_lambda += inst.tasks[id].weight * inst.workers[j].contact;
  return terms;
}

Instance counterexample_instance(double T) {
  if (!(T > 0)) throw std::domain_error("counterexample_instance: T must be positive");
  Instance inst;
  inst.tasks = {{0, 1.0, 1.0}, {1, 1.0, 1.0}, {2, 2.0, 2.0}, {3, T, T}};
  inst.workers = {make_worker(0, 1.0), make_worker(1, 1.0 / 3.0)};  // contacts 2 and 6
  return inst;
}

Theorem1Report verify_theorem1(double T) {
  Theorem1Report rep;
  rep.t = T;
  Instance inst = counterexample_instance(T);
  const int m = inst.m();

  // list assignment under the equal-ratio order with the big task sent
  // to the slow worker; this is the schedule whose M_Lambda the
  // published bound substitutes
  Schedule lrf = lrf_schedule(inst, TieRule::LargestContact);
  EastmanTerms terms = eastman_terms(inst, lrf, true);
  rep.m1 = terms.m1;
  rep.mn = terms.mn;
  rep.m_lambda = terms.m_lambda;
  rep.rhs = terms.m1 / m + (m - 1) / (2.0 * m) * terms.mn + terms.m_lambda;

  rep.wct_opt = brute_optimum(inst).wct;

  Schedule big_first;
  big_first.assignment = {{3}, {0, 1, 2}};
  rep.wct_list_opt = weighted_completion(inst, big_first);

  rep.violated = rep.wct_list_opt < rep.rhs - kValueTol;
  rep.violated_brute = rep.wct_opt < rep.rhs - kValueTol;
  return rep;
}

double lrf_alpha(const Instance& inst) {
  double spread = (inst.weight_max() * inst.lambda_max()) /
                  (inst.weight_min() * inst.lambda_min());
  return std::max(1.5, spread);
}

double dis_alpha(double eta) { return std::max(2.5, 1.0 + eta); }

double competitive_ceiling(const Instance& inst, double alpha_offline) {
  double total = inst.total_rst();
  if (total <= 0.0) return alpha_offline;
  double overhead = inst.n() * inst.weight_max() * (2.0 / inst.lambda_min()) /
                    (inst.weight_min() * total);
  return alpha_offline * (1.0 + overhead);
}

std::vector<BoundReport> audit_bounds(const Instance& inst, const AuditInput& in) {
  std::vector<BoundReport> reports;
  const int m = inst.m();
  const bool two_m_hypothesis =
      inst.n() >= m && inst.tau_min() > 2.0 / inst.lambda_max();
  const bool large_hypothesis =
      2.0 * inst.contact_min() + inst.tau_min() >= (1.0 - in.eta) / in.eta;

  auto offline_denominator = [&](BoundReport& r) {
    if (in.brute_opt) {
      r.denominator = *in.brute_opt;
    } else {
      r.denominator = in.lp_objective;
      r.note = "denominator is the LP lower bound; an excess ratio is inconclusive";
    }
  };

  if (in.lrf) {
    BoundReport r;
    r.name = "ratio-order list bound";
    r.algorithm = "lrf";
    r.wct_alg = *in.lrf;
    offline_denominator(r);
    r.alpha = lrf_alpha(inst);
    r.ratio = r.wct_alg / r.denominator;
    r.pass = r.ratio <= r.alpha + kValueTol;
    reports.push_back(r);

    BoundReport r2;
    r2.name = "2 - 1/m bound (long tasks)";
    r2.algorithm = "lrf";
    r2.wct_alg = *in.lrf;
    offline_denominator(r2);
    r2.alpha = 2.0 - 1.0 / m;
    r2.ratio = r2.wct_alg / r2.denominator;
    r2.hypothesis_ok = two_m_hypothesis;
    r2.pass = !two_m_hypothesis || r2.ratio <= r2.alpha + kValueTol;
    if (!two_m_hypothesis) r2.note = "hypothesis tau_min > 2/lambda_max and n >= m not met";
    reports.push_back(r2);
  }

  if (in.ris_mean) {
    BoundReport r;
    r.name = "randomized rounding expectation";
    r.algorithm = "ris";
    r.wct_alg = *in.ris_mean;
    r.denominator = in.lp_objective;
    r.alpha = 1.5 + in.eta / 2.0;
    r.ratio = r.wct_alg / r.denominator;
    r.pass = r.ratio <= r.alpha * 1.05;  // sampling headroom on the mean
    r.note = "mean over seeds vs LP objective";
    reports.push_back(r);
  }

  if (in.dis) {
    BoundReport r;
    r.name = "derandomized rounding bound";
    r.algorithm = "dis";
    r.wct_alg = *in.dis;
    r.denominator = in.lp_objective;
    r.alpha = dis_alpha(in.eta);
    r.ratio = r.wct_alg / r.denominator;
    r.pass = r.ratio <= r.alpha + kValueTol;
    reports.push_back(r);

    BoundReport r2;
    r2.name = "derandomized rounding bound (large contacts/tasks)";
    r2.algorithm = "dis";
    r2.wct_alg = *in.dis;
    r2.denominator = in.lp_objective;
    r2.alpha = 1.5 + in.eta;
    r2.ratio = r2.wct_alg / r2.denominator;
    r2.hypothesis_ok = large_hypothesis;
    r2.pass = !large_hypothesis || r2.ratio <= r2.alpha + kValueTol;
    if (!large_hypothesis) r2.note = "hypothesis 2 e_min + tau_min >= (1-eta)/eta not met";
    reports.push_back(r2);
  }

  if (in.cosmos && in.clairvoyant_opt) {
    BoundReport r;
    r.name = "online list competitive ceiling";
    r.algorithm = "cosmos";
    r.wct_alg = *in.cosmos;
    r.denominator = *in.clairvoyant_opt;
    double alpha_off = two_m_hypothesis ? 2.0 - 1.0 / m : lrf_alpha(inst);
    r.alpha = competitive_ceiling(inst, alpha_off);
    r.ratio = r.wct_alg / r.denominator;
    r.pass = r.ratio <= r.alpha + kValueTol;
    reports.push_back(r);
  }

  if (in.odis && in.clairvoyant_opt) {
    BoundReport r;
    r.name = "online derandomized competitive ceiling";
    r.algorithm = "odis";
    r.wct_alg = *in.odis;
    r.denominator = *in.clairvoyant_opt;
    double alpha_off = large_hypothesis ? 1.5 + in.eta : std::max(2.0, 1.0 + in.eta) + 0.5;
    r.alpha = competitive_ceiling(inst, alpha_off);
    r.ratio = r.wct_alg / r.denominator;
    r.pass = r.ratio <= r.alpha + kValueTol;
    reports.push_back(r);
  }

  return reports;
}

}  // namespace msn
