#pragma once

#include <stdexcept>
#include <string>

#include "binent/entropy.hpp"

namespace binent {

enum class Branch { lower, upper, both };

// Entropy inputs up to this far above ln 2 (in nats) are treated as exactly
// ln 2. Absorbs the 1-ulp overshoot of e^H round-trips in callers.
inline constexpr double entropy_clamp_eps = 4e-16;

// The two preimages of a binary entropy value: lower <= 1/2 <= upper, with
// upper = 1 - lower by construction.
struct InversionResult {
  Probability lower;
  Probability upper;

  static InversionResult from_lower(double lower_branch);
  Probability branch(Branch which) const;  // lower or upper only
};

struct SolverConfig {
  double abs_tol_p = 1e-14;
  int max_bisection_iters = 200;
  int max_newton_iters = 50;
};

// Root finder ran out of iterations. Carries the offending entropy value;
// the solver never silently returns a best-effort result.
class convergence_error : public std::runtime_error {
 public:
  convergence_error(double h_nats, const std::string& message)
      : std::runtime_error(message), h_nats_(h_nats) {}
  double h_nats() const noexcept { return h_nats_; }

 private:
  double h_nats_;
};

// Ground-truth inversion of binary entropy: bisection on [0, 1/2] down to a
// 1e-6 bracket, then Newton with dH/dp = ln((1-p)/p), falling back to
// bisection whenever a step leaves the bracket or the derivative vanishes.
InversionResult invert_exact(const EntropyValue& h, const SolverConfig& cfg = {});

namespace detail {
// Applies the ln 2 clamp window to a nats value; out-of-window inputs pass
// through unchanged for the caller to reject.
double clamp_entropy_nats(double h_nats) noexcept;
}  // namespace detail

}  // namespace binent
