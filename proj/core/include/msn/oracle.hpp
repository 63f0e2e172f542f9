#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "msn/core.hpp"

namespace msn {

struct BruteForceResult {
  Schedule schedule;
  double wct = 0.0;
};

// Exact minimum WCT over all task-to-worker assignments, each worker
// processing its set in Smith order (order-optimal given the assignment
// because the contact offsets do not depend on position). Enumeration
// is base-m counting, restricted-growth strings when all contacts are
// equal (interchangeable workers), split across threads.
// Throws std::length_error when m^n exceeds `guard`.
BruteForceResult brute_optimum(const Instance& inst, std::uint64_t guard = 10'000'000);

// Full search over assignments AND per-worker orders; validates the
// Smith-order shortcut on small instances.
BruteForceResult brute_optimum_all_orders(const Instance& inst, std::uint64_t guard = 2'000'000);

struct EastmanTerms {
  double m1 = 0.0;       // sum_j w_(j) * prefix tau over ratio-sorted indices
  double mn = 0.0;       // sum_i w_i tau_i
  double m_lambda = 0.0; // sum over workers of batch weight * contact
};

// `ratio_sorted` selects whether M1 runs over Smith-sorted indices
// (the definition) or the raw id order (for exploration).
EastmanTerms eastman_terms(const Instance& inst, const Schedule& sched, bool ratio_sorted = true);

// The equal-ratio instance: tau = w = (1, 1, 2, T), contacts (2, 6).
Instance counterexample_instance(double T);

struct Theorem1Report {
  double t = 0.0;
  double m1 = 0.0, mn = 0.0, m_lambda = 0.0;
  double rhs = 0.0;            // M1/m + (m-1)/(2m) Mn + M_Lambda
  double wct_opt = 0.0;        // brute-force optimum
  double wct_list_opt = 0.0;   // the big-task-first schedule the closed form uses
  bool violated = false;       // closed form < RHS (the published substitution)
  bool violated_brute = false; // brute optimum < RHS
};

// Checks the claimed lower bound on the equal-ratio instance. The
// violation flag reproduces the published substitution, whose OPT value
// is the big-task-first schedule; below T = 8 the true optimum is
// smaller still, which only strengthens the violation (reported
// separately as violated_brute).
Theorem1Report verify_theorem1(double T);

struct BoundReport {
  std::string name;
  std::string algorithm;
  double wct_alg = 0.0;
  double denominator = 0.0;  // true OPT when tractable, LP objective otherwise
  double ratio = 0.0;
  double alpha = 0.0;        // the guaranteed bound
  bool hypothesis_ok = true; // theorem preconditions on this instance
  bool pass = true;          // ratio <= alpha (+ tolerance) or hypothesis not applicable
  std::string note;
};

struct AuditInput {
  double lp_objective = 0.0;
  double eta = 0.5;
  std::optional<double> brute_opt;
  std::optional<double> lrf;
  std::optional<double> ris_mean;  // mean over seeds; audited with 5% headroom
  std::optional<double> dis;
  std::optional<double> mdis;
  std::optional<double> cosmos;
  std::optional<double> odis;
  std::optional<double> clairvoyant_opt;  // denominator for the online bounds
};

// One report per applicable published bound, with hypothesis checks.
std::vector<BoundReport> audit_bounds(const Instance& inst, const AuditInput& in);

// alpha * (1 + n * w_max * (2/lambda_min) / (w_min * sum tau))
double competitive_ceiling(const Instance& inst, double alpha_offline);

// Offline guarantee for ratio-order list scheduling on this instance:
// max{1.5, (w_max lambda_max)/(w_min lambda_min)}.
double lrf_alpha(const Instance& inst);

// Guarantee of the derandomized rounding at a given eta: max{2.5, 1+eta}.
double dis_alpha(double eta);

}  // namespace msn
