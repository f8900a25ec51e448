#include "binent/approx.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace binent {
namespace {

// 1/2 - (1/2)sqrt(radicand), with the documented clamp window for radicands
// that floating point pushed just below zero.
double lower_from_radicand(double radicand, double h_nats) {
  if (radicand < 0.0) {
    if (radicand < -radicand_clamp_eps) {
      char buffer[128];
      std::snprintf(buffer, sizeof buffer,
                    "entropy exceeds ln 2 nats, no inverse exists, got %.17g", h_nats);
      throw std::domain_error(buffer);
    }
    radicand = 0.0;
  }
  return 0.5 - 0.5 * std::sqrt(radicand);
}

Branch require_single(Branch which) {
  if (which == Branch::both)
    throw std::invalid_argument("single-branch overload needs lower or upper");
  return which;
}

}  // namespace

double effective_alleles(Probability p) noexcept {
  const double q = 1.0 - p.value();
  return 1.0 / (p.value() * p.value() + q * q);
}

double heterozygosity(Probability p) noexcept {
  return 2.0 * p.value() * (1.0 - p.value());
}

double effective_symbols_modified(Probability p) noexcept {
  return 1.0 + 4.0 * p.value() * (1.0 - p.value());
}

InversionResult invert_kimura_crow(const EntropyValue& h) {
  const double nats = detail::clamp_entropy_nats(h.in_nats());
  return InversionResult::from_lower(
      lower_from_radicand(2.0 * std::exp(-nats) - 1.0, nats));
}

Probability invert_kimura_crow(const EntropyValue& h, Branch branch) {
  return invert_kimura_crow(h).branch(require_single(branch));
}

InversionResult invert_improved(const EntropyValue& h) {
  const double nats = detail::clamp_entropy_nats(h.in_nats());
  return InversionResult::from_lower(lower_from_radicand(2.0 - std::exp(nats), nats));
}

Probability invert_improved(const EntropyValue& h, Branch branch) {
  return invert_improved(h).branch(require_single(branch));
}

}  // namespace binent
