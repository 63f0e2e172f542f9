#include "msn/data.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "msn/rng.hpp"

namespace msn {

Instance gen_synthetic(const SyntheticConfig& cfg) {
  if (cfg.m < 1) throw std::invalid_argument("gen_synthetic: m must be at least 1");
  if (cfg.ratio_nm < 0) throw std::invalid_argument("gen_synthetic: ratio must be nonnegative");
  if (!(cfg.lambda_lo > 0.0)) throw std::invalid_argument("gen_synthetic: lambda range must be positive");
  if (!(cfg.rst_mean > 0.0)) throw std::invalid_argument("gen_synthetic: rst mean must be positive");
  if (cfg.p < 0.0 || cfg.p > 1.0) throw std::invalid_argument("gen_synthetic: p must be in [0,1]");

  Rng rng(cfg.seed);
  const int n = cfg.m * cfg.ratio_nm;

  Instance inst;
  inst.tasks.reserve(n);
  for (int i = 0; i < n; ++i) {
    double tau = rng.gaussian_positive(cfg.rst_mean, cfg.rst_std);
    inst.tasks.push_back({i, tau, tau});
  }
  for (int i = 0; i < n; ++i) {
    if (rng.uniform01() >= cfg.p)
      inst.tasks[i].weight = rng.uniform(cfg.weight_lo, cfg.weight_hi);
  }
  inst.workers.reserve(cfg.m);
  for (int j = 0; j < cfg.m; ++j)
    inst.workers.push_back(make_worker(j, rng.uniform(cfg.lambda_lo, cfg.lambda_hi)));
  inst.validate();
  return inst;
}

ContactLog parse_trace(std::istream& in, bool strict) {
  ContactLog log;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string a, b;
    double start = 0.0, end = 0.0;
    if (!(ls >> a)) continue;  // blank
    std::string rest;
    if (!(ls >> b >> start >> end) || (ls >> rest) || end < start || start < 0.0) {
      log.malformed.push_back("line " + std::to_string(lineno) + ": " + line);
      continue;
    }
    log.records.push_back({a, b, start, end});
    log.trace_end = std::max(log.trace_end, end);
  }
  if (strict && !log.malformed.empty())
    throw std::runtime_error("parse_trace: " + std::to_string(log.malformed.size()) +
                             " malformed line(s), first: " + log.malformed.front());
  return log;
}

ContactLog parse_trace(const std::filesystem::path& path, bool strict) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("parse_trace: cannot open " + path.string());
  return parse_trace(in, strict);
}

void write_trace(const ContactLog& log, std::ostream& out) {
  out.precision(17);
  for (const ContactRecord& r : log.records)
    out << r.device_a << ' ' << r.device_b << ' ' << r.start << ' ' << r.end << '\n';
}

std::vector<PeerRate> estimate_peer_rates(const ContactLog& log, const std::string& requester,
                                          GapBaseline baseline,
                                          std::vector<std::string>* warnings) {
  std::map<std::string, std::vector<double>> starts;
  bool requester_seen = false;
  for (const ContactRecord& r : log.records) {
    if (r.device_a == requester) {
      requester_seen = true;
      starts[r.device_b].push_back(r.start);
    } else if (r.device_b == requester) {
      requester_seen = true;
      starts[r.device_a].push_back(r.start);
    }
  }
  if (!requester_seen)
    throw std::domain_error("estimate_peer_rates: requester '" + requester +
                            "' appears in no record");

  std::vector<PeerRate> rates;
  for (auto& [device, ts] : starts) {
    std::sort(ts.begin(), ts.end());
    double sum = 0.0;
    int gaps = 0;
    double prev = log.trace_start;
    for (std::size_t k = 0; k < ts.size(); ++k) {
      if (k == 0 && baseline == GapBaseline::FirstContact) {
        prev = ts[0];
        continue;
      }
      sum += ts[k] - prev;
      prev = ts[k];
      ++gaps;
    }
    if (gaps == 0 || sum <= 0.0) {
      if (warnings)
        warnings->push_back("peer '" + device + "' excluded: zero inter-contact time over " +
                            std::to_string(ts.size()) + " contact(s)");
      continue;
    }
    rates.push_back({device, static_cast<double>(gaps) / sum, static_cast<int>(ts.size())});
  }
  std::sort(rates.begin(), rates.end(), [](const PeerRate& a, const PeerRate& b) {
    if (a.lambda != b.lambda) return a.lambda > b.lambda;
    return a.device < b.device;
  });
  return rates;
}

std::vector<Worker> estimate_lambdas(const ContactLog& log, const std::string& requester,
                                     int top_k, GapBaseline baseline,
                                     std::vector<std::string>* warnings) {
  std::vector<PeerRate> rates = estimate_peer_rates(log, requester, baseline, warnings);
  if (static_cast<int>(rates.size()) > top_k) rates.resize(top_k);
  std::vector<Worker> workers;
  workers.reserve(rates.size());
  for (std::size_t j = 0; j < rates.size(); ++j)
    workers.push_back(make_worker(static_cast<int>(j), rates[j].lambda));
  return workers;
}

}  // namespace msn
