#pragma once

#include "msn/core.hpp"
#include "msn/rng.hpp"

namespace msn::test {

inline Instance random_instance(Rng& rng, int n, int m, double lambda_lo = 0.5,
                                double lambda_hi = 5.0) {
  Instance inst;
  for (int i = 0; i < n; ++i) {
    double tau = rng.uniform(0.5, 10.0);
    double w = rng.uniform(0.5, 10.0);
    inst.tasks.push_back({i, tau, w});
  }
  for (int j = 0; j < m; ++j)
    inst.workers.push_back(make_worker(j, rng.uniform(lambda_lo, lambda_hi)));
  return inst;
}

// equal-ratio heavy: weight == rst with probability p
inline Instance random_equal_ratio_instance(Rng& rng, int n, int m, double p) {
  Instance inst = random_instance(rng, n, m);
  for (auto& t : inst.tasks)
    if (rng.uniform01() < p) t.weight = t.rst;
  return inst;
}

}  // namespace msn::test
