#include "binent/inverse.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>

namespace binent {
namespace {

constexpr double bracket_target = 1e-6;     // bisection hands over at this width
constexpr double residual_tol = 1e-13;      // |H(p) - h| accepted at the root
constexpr double derivative_floor = 1e-12;  // Newton disabled below this |dH/dp|
constexpr double noise_floor = 4e-16;       // H evaluation noise near p = 1/2

std::string describe(const char* what, double value) {
  char buffer[128];
  std::snprintf(buffer, sizeof buffer, "%s, got %.17g", what, value);
  return buffer;
}

void validate(const SolverConfig& cfg) {
  if (!(cfg.abs_tol_p > 0.0) || !std::isfinite(cfg.abs_tol_p))
    throw std::invalid_argument(
        describe("solver tolerance must be positive and finite", cfg.abs_tol_p));
  if (cfg.max_bisection_iters < 1 || cfg.max_newton_iters < 1)
    throw std::invalid_argument("solver iteration caps must be at least 1");
}

// Lower-branch root of H(p) = h on [0, 1/2]. h is in nats and already
// clamped to [0, ln 2]. Bisection narrows the bracket, Newton finishes;
// any Newton step that leaves the bracket, or a vanishing derivative,
// falls back to halving. Convergence additionally accepts the point where
// the residual reaches the evaluation noise floor: near p = 1/2 the curve
// is flat to machine precision and no tighter p is observable.
double solve_lower(double h, const SolverConfig& cfg) {
  if (h == 0.0) return 0.0;
  if (h == std::numbers::ln2) return 0.5;

  double lo = 0.0;  // H(lo) < h
  double hi = 0.5;  // H(hi) > h
  int used = 0;
  while (hi - lo > bracket_target) {
    if (++used > cfg.max_bisection_iters)
      throw convergence_error(h, describe("bisection budget exhausted at h", h));
    const double mid = 0.5 * (lo + hi);
    const double fm = detail::binary_entropy_nats(mid) - h;
    if (fm == 0.0) return mid;
    if (fm < 0.0) lo = mid;
    else hi = mid;
  }

  double p = 0.5 * (lo + hi);
  double f = detail::binary_entropy_nats(p) - h;
  for (int it = 0; it < cfg.max_newton_iters; ++it) {
    if (f == 0.0) return p;
    if (f < 0.0) lo = p;
    else hi = p;

    const double slope = std::log((1.0 - p) / p);
    double next;
    if (std::abs(slope) < derivative_floor) {
      next = 0.5 * (lo + hi);
    } else {
      next = p - f / slope;
      if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    }
    const double step = std::abs(next - p);
    p = next;
    f = detail::binary_entropy_nats(p) - h;

    const bool located = step <= cfg.abs_tol_p || hi - lo <= cfg.abs_tol_p ||
                         std::abs(f) <= noise_floor;
    if (std::abs(f) <= residual_tol && located) return p;
  }
  throw convergence_error(h, describe("Newton budget exhausted at h", h));
}

}  // namespace

InversionResult InversionResult::from_lower(double lower_branch) {
  return InversionResult{Probability(lower_branch), Probability(1.0 - lower_branch)};
}

Probability InversionResult::branch(Branch which) const {
  switch (which) {
    case Branch::lower:
      return lower;
    case Branch::upper:
      return upper;
    default:
      throw std::invalid_argument("branch selection needs lower or upper");
  }
}

namespace detail {
double clamp_entropy_nats(double h_nats) noexcept {
  if (h_nats > std::numbers::ln2 && h_nats <= std::numbers::ln2 + entropy_clamp_eps)
    return std::numbers::ln2;
  return h_nats;
}
}  // namespace detail

InversionResult invert_exact(const EntropyValue& h, const SolverConfig& cfg) {
  validate(cfg);
  const double nats = detail::clamp_entropy_nats(h.in_nats());
  if (nats > std::numbers::ln2)
    throw std::domain_error(describe("binary entropy cannot exceed ln 2 nats", nats));
  return InversionResult::from_lower(solve_lower(nats, cfg));
}

}  // namespace binent
