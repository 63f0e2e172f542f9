#pragma once

#include <vector>

namespace msn {

// Geometric time grid I_0..I_L with I_0 = [0,1] and
// I_l = ((1+eta)^(l-1), (1+eta)^l] for l >= 1. Lengths are |I_0| = 1 and
// |I_l| = eta*(1+eta)^(l-1); total coverage (1+eta)^L is at least the
// instance's total RST.
struct IntervalGrid {
  double eta = 0.0;
  int levels = 0;  // L
  std::vector<double> left;    // left endpoint, size L+1
  std::vector<double> right;   // right endpoint
  std::vector<double> length;  // |I_l|

  int count() const { return levels + 1; }

  // Reference point used in the completion-time lower bound: (1+eta)^(l-1),
  // with the l = 0 case defined as 1/2.
  double lower_ref(int l) const { return l == 0 ? 0.5 : left[l]; }

  // Placement key t_i: left endpoint, 0 for l = 0.
  double start_key(int l) const { return left[l]; }

  double coverage() const { return right.back(); }
};

// L = ceil(log_{1+eta}(total_rst)), clamped to >= 0.
// Throws std::domain_error unless total_rst > 0 and eta > 0.
IntervalGrid build_grid(double total_rst, double eta);

}  // namespace msn
