#include "binent/entropy.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>

namespace binent {
namespace {

std::string describe(const char* what, double value) {
  char buffer[128];
  std::snprintf(buffer, sizeof buffer, "%s, got %.17g", what, value);
  return buffer;
}

double plogp(double p) { return p > 0.0 ? p * std::log(p) : 0.0; }

double from_nats(double nats, Unit unit) {
  return unit == Unit::bits ? nats / std::numbers::ln2 : nats;
}

// Largest exponent exp() can take without overflowing a double.
constexpr double max_exponent = 709.78;

}  // namespace

Probability::Probability(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 1.0))
    throw std::domain_error(describe("probability must lie in [0, 1]", value));
}

EntropyValue::EntropyValue(double value, Unit unit) : value_(value), unit_(unit) {
  if (!(std::isfinite(value) && value >= 0.0))
    throw std::domain_error(describe("entropy must be finite and nonnegative", value));
}

double EntropyValue::in_nats() const noexcept {
  return unit_ == Unit::nats ? value_ : value_ * std::numbers::ln2;
}

Distribution::Distribution(std::vector<double> probabilities)
    : probs_(std::move(probabilities)) {
  if (probs_.empty())
    throw std::domain_error("distribution needs at least one symbol");
  double sum = 0.0;
  for (const double p : probs_) {
    if (!(p >= 0.0 && p <= 1.0))
      throw std::domain_error(describe("distribution element must lie in [0, 1]", p));
    sum += p;
  }
  if (std::abs(sum - 1.0) > sum_tolerance)
    throw std::domain_error(describe("distribution must sum to 1 within 1e-9", sum));
  for (double& p : probs_) p /= sum;
}

EntropyValue convert(const EntropyValue& h, Unit target) {
  if (h.unit() == target) return h;
  const double value = target == Unit::nats ? h.value() * std::numbers::ln2
                                            : h.value() / std::numbers::ln2;
  return EntropyValue(value, target);
}

EntropyValue binary_entropy(Probability p, Unit unit) {
  return EntropyValue(from_nats(detail::binary_entropy_nats(p.value()), unit), unit);
}

EntropyValue entropy_general(const Distribution& d, Unit unit) {
  double sum = 0.0;
  for (const double p : d.probabilities()) sum += plogp(p);
  const double nats = sum == 0.0 ? 0.0 : -sum;
  return EntropyValue(from_nats(nats, unit), unit);
}

double sequence_count(const EntropyValue& h, int length) {
  if (length < 1)
    throw std::domain_error(describe("sequence length must be at least 1", length));
  const double exponent = static_cast<double>(length) * h.in_nats();
  if (exponent > max_exponent)
    throw std::overflow_error(describe("sequence count exceeds double range, L*H", exponent));
  return std::exp(exponent);
}

namespace detail {
double binary_entropy_nats(double p) noexcept {
  const double sum = plogp(p) + plogp(1.0 - p);
  return sum == 0.0 ? 0.0 : -sum;
}
}  // namespace detail

}  // namespace binent
