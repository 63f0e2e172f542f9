#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "msn/data.hpp"

namespace msn {

enum class SweepParam { P, RatioNM, Workers, RstMean, RstStd };

std::string sweep_param_name(SweepParam p);
std::optional<SweepParam> sweep_param_from_name(const std::string& name);
std::vector<double> default_sweep_values(SweepParam p);

// One experiment axis: generate `instances_per_point` instances per
// value, solve the LP once per instance, run every algorithm, and
// average the ratios against the configured denominator.
struct SweepConfig {
  SweepParam param = SweepParam::P;
  std::vector<double> values;
  int instances_per_point = 100;
  std::vector<std::string> algorithms = {"lrf", "mdis", "ris"};
  double eta = 0.5;
  std::uint64_t seed_base = 1;
  bool brute_denominator = false;  // default: LP objective
  SyntheticConfig base;
  int threads = 0;  // 0: hardware concurrency
};

struct SweepRow {
  std::string param;
  double value = 0.0;
  std::string algorithm;
  double mean_ratio = 0.0;
  double stderr_ratio = 0.0;
  double mean_wct = 0.0;
  double mean_lp = 0.0;
  double mean_runtime_ms = 0.0;
  std::uint64_t seed_base = 0;
  int instances = 0;
  int failures = 0;  // instances flagged on solver failure
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::vector<std::string> warnings;
  std::vector<std::string> hard_violations;  // any entry fails the run
};

SweepResult run_sweep(const SweepConfig& cfg);

// Real-trace protocol: per requester, estimate the top-k contact rates,
// sweep the task/worker ratio, and average each point across requesters.
struct TraceSweepConfig {
  std::vector<int> ratios = {2, 4, 6, 8, 10};
  int top_k = 128;
  int instances_per_point = 100;
  std::vector<std::string> algorithms = {"lrf", "mdis", "ris"};
  double eta = 0.5;
  std::uint64_t seed_base = 1;
  SyntheticConfig task_base;  // task-generation parameters; workers come from the trace
  int threads = 0;
  GapBaseline baseline = GapBaseline::TraceStart;
};

SweepResult run_trace_sweep(const ContactLog& log, const std::vector<std::string>& requesters,
                            const TraceSweepConfig& cfg);

// param,value,algorithm,mean_ratio,stderr,mean_wct,mean_lp,seed_base
void write_csv(const SweepResult& result, std::ostream& out);

}  // namespace msn
