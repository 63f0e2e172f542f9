#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "msn/core.hpp"

namespace msn {

// Synthetic protocol: n = m * ratio_nm tasks; RSTs are positive
// Gaussian draws (rejection); with probability p a task's weight equals
// its RST, otherwise uniform on weight range; rates uniform.
struct SyntheticConfig {
  int m = 10;
  int ratio_nm = 5;
  double lambda_lo = 1.0;
  double lambda_hi = 30.0;
  double rst_mean = 30.0;
  double rst_std = 30.0;
  double p = 1.0;
  double weight_lo = 1.0;
  double weight_hi = 10.0;
  std::uint64_t seed = 1;
};

Instance gen_synthetic(const SyntheticConfig& cfg);

struct ContactRecord {
  std::string device_a;
  std::string device_b;
  double start = 0.0;
  double end = 0.0;
};

// Normalized contact trace: whitespace-separated
// `device_a device_b start end` lines, '#' starts a comment.
// Timestamps are assumed relative to the trace origin (trace_start 0).
struct ContactLog {
  std::vector<ContactRecord> records;
  double trace_start = 0.0;
  double trace_end = 0.0;
  std::vector<std::string> malformed;  // rejected lines, for reporting
};

// Throws std::runtime_error when the file is unreadable, or (with
// strict) when any line is malformed.
ContactLog parse_trace(const std::filesystem::path& path, bool strict = false);
ContactLog parse_trace(std::istream& in, bool strict = false);
void write_trace(const ContactLog& log, std::ostream& out);

// Where the first inter-contact gap is measured from: the trace origin
// (the estimator then has exactly l_j terms) or the first contact
// (l_j - 1 gaps).
enum class GapBaseline { TraceStart, FirstContact };

struct PeerRate {
  std::string device;
  double lambda = 0.0;
  int contacts = 0;
};

// lambda_j = l_j / sum of inter-contact gaps against the requester.
// Peers whose gap sum is zero are excluded (reported via warnings).
// Throws std::domain_error when the requester appears in no record.
std::vector<PeerRate> estimate_peer_rates(const ContactLog& log, const std::string& requester,
                                          GapBaseline baseline = GapBaseline::TraceStart,
                                          std::vector<std::string>* warnings = nullptr);

// Top-k peers by descending rate, converted to workers (contact 2/rate).
std::vector<Worker> estimate_lambdas(const ContactLog& log, const std::string& requester,
                                     int top_k,
                                     GapBaseline baseline = GapBaseline::TraceStart,
                                     std::vector<std::string>* warnings = nullptr);

}  // namespace msn
