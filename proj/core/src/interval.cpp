#include "msn/interval.hpp"

#include <cmath>
#include <stdexcept>

namespace msn {

IntervalGrid build_grid(double total_rst, double eta) {
  if (!(total_rst > 0.0)) throw std::domain_error("build_grid: total RST must be positive");
  if (!(eta > 0.0)) throw std::domain_error("build_grid: eta must be positive");

  int levels = 0;
  if (total_rst > 1.0) {
    double raw = std::log(total_rst) / std::log1p(eta);
    levels = static_cast<int>(std::ceil(raw - 1e-12));
    if (levels < 0) levels = 0;
    // log rounding must never leave the grid short of the total RST
    while (std::pow(1.0 + eta, levels) < total_rst * (1.0 - 1e-12)) ++levels;
  }

  IntervalGrid g;
  g.eta = eta;
  g.levels = levels;
  g.left.resize(levels + 1);
  g.right.resize(levels + 1);
  g.length.resize(levels + 1);
  g.left[0] = 0.0;
  g.right[0] = 1.0;
  g.length[0] = 1.0;
  for (int l = 1; l <= levels; ++l) {
    double lo = std::pow(1.0 + eta, l - 1);
    g.left[l] = lo;
    g.right[l] = lo * (1.0 + eta);
    g.length[l] = eta * lo;
  }
  return g;
}

}  // namespace msn
