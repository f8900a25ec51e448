#pragma once

#include <span>
#include <vector>

namespace binent {

enum class Unit { nats, bits };

// Dimensionless probability, validated to lie in [0, 1].
class Probability {
 public:
  explicit Probability(double value);
  double value() const noexcept { return value_; }

 private:
  double value_;
};

// Entropy magnitude tagged with its unit. Finite and nonnegative.
class EntropyValue {
 public:
  EntropyValue(double value, Unit unit);
  static EntropyValue nats(double value) { return EntropyValue(value, Unit::nats); }
  static EntropyValue bits(double value) { return EntropyValue(value, Unit::bits); }

  double value() const noexcept { return value_; }
  Unit unit() const noexcept { return unit_; }
  double in_nats() const noexcept;

 private:
  double value_;
  Unit unit_;
};

// Discrete distribution over M >= 1 symbols. Elements must lie in [0, 1]
// and sum to 1 within sum_tolerance; accepted inputs are renormalized.
class Distribution {
 public:
  static constexpr double sum_tolerance = 1e-9;

  explicit Distribution(std::vector<double> probabilities);
  std::span<const double> probabilities() const noexcept { return probs_; }

 private:
  std::vector<double> probs_;
};

EntropyValue convert(const EntropyValue& h, Unit target);

// H(p) = -p log p - (1-p) log(1-p), with 0 log 0 = 0.
EntropyValue binary_entropy(Probability p, Unit unit = Unit::nats);

// -sum p_k log p_k over the distribution.
EntropyValue entropy_general(const Distribution& d, Unit unit = Unit::nats);

// Expected number of typical length-L sequences, e^(L * H_nats).
double sequence_count(const EntropyValue& h, int length);

namespace detail {
// H(p) in nats. Assumes p in [0, 1]; never returns -0.0.
double binary_entropy_nats(double p) noexcept;
}  // namespace detail

}  // namespace binent
