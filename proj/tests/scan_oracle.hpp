#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

// Brute-force inverse used as an independent check on the library solver:
// tabulate H over p in [0, 1/2] once, bracket a query by binary search in
// the table, then refine with plain interval halving. Shares no code with
// the solver under test.
namespace scan_oracle {

constexpr double step = 1e-7;
constexpr int points = 5'000'000;  // covers [0, 0.5] at step resolution

inline double entropy_nats(double p) {
  double acc = 0.0;
  if (p > 0.0) acc -= p * std::log(p);
  const double q = 1.0 - p;
  if (q > 0.0) acc -= q * std::log(q);
  return acc;
}

inline const std::vector<double>& table() {
  static const std::vector<double> values = [] {
    std::vector<double> v(points + 1);
    for (int i = 0; i <= points; ++i) v[i] = entropy_nats(i * step);
    return v;
  }();
  return values;
}

// Lower-branch preimage of h nats, refined until the interval collapses.
inline double invert_lower(double h) {
  const std::vector<double>& t = table();
  auto it = std::lower_bound(t.begin(), t.end(), h);  // first H >= h
  if (it == t.begin()) return 0.0;
  if (it == t.end()) return 0.5;
  double hi = static_cast<double>(it - t.begin()) * step;
  double lo = hi - step;
  for (;;) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (entropy_nats(mid) < h) lo = mid;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace scan_oracle
