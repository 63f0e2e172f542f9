#include "msn/bench.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <thread>

#include "msn/greedy.hpp"
#include "msn/lp.hpp"
#include "msn/oracle.hpp"
#include "msn/rng.hpp"
#include "msn/rounding.hpp"

namespace msn {

std::string sweep_param_name(SweepParam p) {
  switch (p) {
    case SweepParam::P: return "p";
    case SweepParam::RatioNM: return "ratio";
    case SweepParam::Workers: return "workers";
    case SweepParam::RstMean: return "rst-mean";
    case SweepParam::RstStd: return "rst-std";
  }
  return "?";
}

std::optional<SweepParam> sweep_param_from_name(const std::string& name) {
  if (name == "p") return SweepParam::P;
  if (name == "ratio") return SweepParam::RatioNM;
  if (name == "workers") return SweepParam::Workers;
  if (name == "rst-mean") return SweepParam::RstMean;
  if (name == "rst-std") return SweepParam::RstStd;
  return std::nullopt;
}

std::vector<double> default_sweep_values(SweepParam p) {
  switch (p) {
    case SweepParam::P: return {0.2, 0.4, 0.6, 0.8, 1.0};
    case SweepParam::RatioNM: return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    case SweepParam::Workers: return {5, 10, 15, 20, 25};
    case SweepParam::RstMean: return {5, 10, 15, 20, 25, 30, 35, 40, 45, 50};
    case SweepParam::RstStd: return {20, 22, 24, 26, 28, 30, 32, 34, 36, 38};
  }
  return {};
}

namespace {

struct InstanceOutcome {
  bool failed = false;
  std::string failure;
  double lp = 0.0;
  double denominator = 0.0;
  std::map<std::string, double> wct;
  std::map<std::string, double> runtime_ms;
  std::vector<std::string> violations;
};

double now_ms() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

InstanceOutcome evaluate_instance(const Instance& inst,
                                  const std::vector<std::string>& algorithms, double eta,
                                  bool brute_denominator, std::uint64_t ris_seed,
                                  const std::string& tag) {
  InstanceOutcome out;
  try {
    IntervalGrid grid;
    LpSolution sol = solve_instance_lp(inst, eta, &grid);
    LpModel model = build_lp(inst, grid);
    out.lp = sol.objective;
    double ratio_floor_tol = 1e-6;
    if (brute_denominator) {
      out.denominator = brute_optimum(inst).wct;
      ratio_floor_tol = 1e-9;
    } else {
      out.denominator = sol.objective;
    }

    for (const std::string& alg : algorithms) {
      double t0 = now_ms();
      Schedule sched;
      if (alg == "lrf") {
        sched = lrf_schedule(inst);
      } else if (alg == "mdis") {
        sched = mdis_schedule(inst, sol);
      } else if (alg == "ris") {
        Rng rng(ris_seed);
        sched = ris_round(inst, model, sol, rng);
      } else if (alg == "dis") {
        sched = dis_schedule(inst, model, sol).schedule;
      } else {
        throw std::invalid_argument("unknown algorithm '" + alg + "'");
      }
      double wct = weighted_completion(inst, sched);
      out.runtime_ms[alg] = now_ms() - t0;
      out.wct[alg] = wct;
      double ratio = wct / out.denominator;
      if (ratio < 1.0 - ratio_floor_tol)
        out.violations.push_back(tag + " " + alg + ": ratio " + std::to_string(ratio) +
                                 " below 1 against the " +
                                 (brute_denominator ? "optimum" : "LP lower bound"));
    }
  } catch (const SolverError& e) {
    out.failed = true;
    out.failure = tag + ": " + e.what();
  } catch (const std::length_error& e) {
    out.failed = true;
    out.failure = tag + ": " + e.what();
  }
  return out;
}

// run `count` instance evaluations across threads; `make` builds the
// k-th instance, results land in index order so aggregation is
// deterministic regardless of scheduling
template <typename Make>
std::vector<InstanceOutcome> run_parallel(int count, int threads, Make make) {
  std::vector<InstanceOutcome> results(count);
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, std::min(threads, count == 0 ? 1 : count));

  std::atomic<int> next{0};
  auto worker = [&] {
    for (;;) {
      int k = next.fetch_add(1);
      if (k >= count) return;
      results[k] = make(k);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return results;
}

void aggregate_point(SweepResult& result, const std::string& param_name, double value,
                     const std::vector<std::string>& algorithms, std::uint64_t seed_base,
                     const std::vector<InstanceOutcome>& outcomes) {
  for (const auto& o : outcomes) {
    if (o.failed) result.warnings.push_back(o.failure);
    for (const auto& v : o.violations) result.hard_violations.push_back(v);
  }
  for (const std::string& alg : algorithms) {
    SweepRow row;
    row.param = param_name;
    row.value = value;
    row.algorithm = alg;
    row.seed_base = seed_base;
    double sum = 0.0, sumsq = 0.0, wct = 0.0, lp = 0.0, rt = 0.0;
    int k = 0;
    for (const auto& o : outcomes) {
      if (o.failed) {
        ++row.failures;
        continue;
      }
      double ratio = o.wct.at(alg) / o.denominator;
      sum += ratio;
      sumsq += ratio * ratio;
      wct += o.wct.at(alg);
      lp += o.lp;
      rt += o.runtime_ms.at(alg);
      ++k;
    }
    row.instances = k;
    if (k > 0) {
      row.mean_ratio = sum / k;
      row.mean_wct = wct / k;
      row.mean_lp = lp / k;
      row.mean_runtime_ms = rt / k;
      if (k > 1) {
        double var = (sumsq - sum * sum / k) / (k - 1);
        row.stderr_ratio = std::sqrt(std::max(0.0, var) / k);
      }
    }
    result.rows.push_back(row);
  }
}

}  // namespace

SweepResult run_sweep(const SweepConfig& cfg) {
  SweepResult result;
  std::vector<double> values = cfg.values.empty() ? default_sweep_values(cfg.param) : cfg.values;
  const std::string param_name = sweep_param_name(cfg.param);

  for (std::size_t vi = 0; vi < values.size(); ++vi) {
    double value = values[vi];
    SyntheticConfig base = cfg.base;
    switch (cfg.param) {
      case SweepParam::P: base.p = value; break;
      case SweepParam::RatioNM: base.ratio_nm = static_cast<int>(std::lround(value)); break;
      case SweepParam::Workers: base.m = static_cast<int>(std::lround(value)); break;
      case SweepParam::RstMean: base.rst_mean = value; break;
      case SweepParam::RstStd: base.rst_std = value; break;
    }

    auto outcomes = run_parallel(cfg.instances_per_point, cfg.threads, [&](int k) {
      SyntheticConfig icfg = base;
      icfg.seed = mix_seed(cfg.seed_base, vi + 1, static_cast<std::uint64_t>(k));
      Instance inst = gen_synthetic(icfg);
      std::string tag = param_name + "=" + std::to_string(value) + " instance " + std::to_string(k);
      return evaluate_instance(inst, cfg.algorithms, cfg.eta, cfg.brute_denominator,
                               mix_seed(icfg.seed, 0x715), tag);
    });
    aggregate_point(result, param_name, value, cfg.algorithms, cfg.seed_base, outcomes);
  }
  return result;
}

SweepResult run_trace_sweep(const ContactLog& log, const std::vector<std::string>& requesters,
                            const TraceSweepConfig& cfg) {
  SweepResult result;

  struct PerRequester {
    std::vector<Worker> workers;
    std::string name;
  };
  std::vector<PerRequester> usable;
  for (const std::string& req : requesters) {
    std::vector<std::string> warnings;
    std::vector<Worker> workers = estimate_lambdas(log, req, cfg.top_k, cfg.baseline, &warnings);
    for (auto& w : warnings) result.warnings.push_back(req + ": " + w);
    if (workers.size() < 2) {
      result.warnings.push_back("requester '" + req + "' skipped: fewer than 2 usable workers");
      continue;
    }
    usable.push_back({std::move(workers), req});
  }

  for (int ratio : cfg.ratios) {
    // per-requester means first, then the cross-requester average
    std::map<std::string, std::vector<double>> per_req_mean;
    std::map<std::string, std::vector<double>> per_req_wct, per_req_lp, per_req_rt;
    int failures = 0;
    for (std::size_t ri = 0; ri < usable.size(); ++ri) {
      const auto& pr = usable[ri];
      auto outcomes = run_parallel(cfg.instances_per_point, cfg.threads, [&](int k) {
        SyntheticConfig icfg = cfg.task_base;
        icfg.m = static_cast<int>(pr.workers.size());
        icfg.ratio_nm = ratio;
        icfg.seed = mix_seed(cfg.seed_base, (ri + 1) * 131 + ratio, static_cast<std::uint64_t>(k));
        Instance inst = gen_synthetic(icfg);
        inst.workers = pr.workers;
        std::string tag = "trace " + pr.name + " ratio=" + std::to_string(ratio) +
                          " instance " + std::to_string(k);
        return evaluate_instance(inst, cfg.algorithms, cfg.eta, false,
                                 mix_seed(icfg.seed, 0x715), tag);
      });
      for (const auto& o : outcomes) {
        if (o.failed) {
          result.warnings.push_back(o.failure);
          ++failures;
        }
        for (const auto& v : o.violations) result.hard_violations.push_back(v);
      }
      for (const std::string& alg : cfg.algorithms) {
        double sum = 0.0, wct = 0.0, lp = 0.0, rt = 0.0;
        int k = 0;
        for (const auto& o : outcomes) {
          if (o.failed) continue;
          sum += o.wct.at(alg) / o.denominator;
          wct += o.wct.at(alg);
          lp += o.lp;
          rt += o.runtime_ms.at(alg);
          ++k;
        }
        if (k > 0) {
          per_req_mean[alg].push_back(sum / k);
          per_req_wct[alg].push_back(wct / k);
          per_req_lp[alg].push_back(lp / k);
          per_req_rt[alg].push_back(rt / k);
        }
      }
    }
    for (const std::string& alg : cfg.algorithms) {
      SweepRow row;
      row.param = "trace-ratio";
      row.value = ratio;
      row.algorithm = alg;
      row.seed_base = cfg.seed_base;
      row.failures = failures;
      const auto& means = per_req_mean[alg];
      row.instances = static_cast<int>(means.size());
      if (!means.empty()) {
        double sum = 0.0, sumsq = 0.0;
        for (double v : means) {
          sum += v;
          sumsq += v * v;
        }
        int k = static_cast<int>(means.size());
        row.mean_ratio = sum / k;
        if (k > 1) {
          double var = (sumsq - sum * sum / k) / (k - 1);
          row.stderr_ratio = std::sqrt(std::max(0.0, var) / k);
        }
        auto avg = [&](const std::vector<double>& v) {
          double s = 0.0;
          for (double x : v) s += x;
          return s / v.size();
        };
        row.mean_wct = avg(per_req_wct[alg]);
        row.mean_lp = avg(per_req_lp[alg]);
        row.mean_runtime_ms = avg(per_req_rt[alg]);
      }
      result.rows.push_back(row);
    }
  }
  return result;
}

void write_csv(const SweepResult& result, std::ostream& out) {
  out << "param,value,algorithm,mean_ratio,stderr,mean_wct,mean_lp,seed_base\n";
  char buf[512];
  for (const SweepRow& r : result.rows) {
    std::snprintf(buf, sizeof(buf), "%s,%.10g,%s,%.10g,%.10g,%.10g,%.10g,%llu\n",
                  r.param.c_str(), r.value, r.algorithm.c_str(), r.mean_ratio, r.stderr_ratio,
                  r.mean_wct, r.mean_lp, static_cast<unsigned long long>(r.seed_base));
    out << buf;
  }
}

}  // namespace msn
