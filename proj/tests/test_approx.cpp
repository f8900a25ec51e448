#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "doctest.h"

#include "binent/approx.hpp"

using namespace binent;

namespace {
constexpr double ln2 = std::numbers::ln2;
using InvertFn = InversionResult (*)(const EntropyValue&);
constexpr InvertFn closed_forms[] = {invert_kimura_crow, invert_improved};
}

TEST_SUITE("approx") {

TEST_CASE("effective alleles anchors and range") {
  CHECK(effective_alleles(Probability(0.5)) == 2.0);
  CHECK(effective_alleles(Probability(0.0)) == 1.0);
  CHECK(effective_alleles(Probability(1.0)) == 1.0);
  // 1 / (0.04 + 0.64)
  CHECK(std::abs(effective_alleles(Probability(0.2)) - 1.4705882352941176) <= 1e-12);

  std::mt19937 rng(11);
  std::uniform_real_distribution<double> probs(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const double n = effective_alleles(Probability(probs(rng)));
    CHECK(n >= 1.0);
    CHECK(n <= 2.0);
  }
}

TEST_CASE("heterozygosity anchors") {
  CHECK(heterozygosity(Probability(0.5)) == 0.5);
  CHECK(heterozygosity(Probability(0.0)) == 0.0);
  CHECK(heterozygosity(Probability(1.0)) == 0.0);
  CHECK(std::abs(heterozygosity(Probability(0.2)) - 0.32) <= 1e-15);
}

TEST_CASE("modified symbol count matches its unsimplified form") {
  CHECK(effective_symbols_modified(Probability(0.5)) == 2.0);
  CHECK(effective_symbols_modified(Probability(1.0)) == 1.0);
  CHECK(effective_symbols_modified(Probability(0.0)) == 1.0);
  // 2 - 0.04 - 0.64 + 0.32
  CHECK(std::abs(effective_symbols_modified(Probability(0.2)) - 1.64) <= 1e-12);

  std::mt19937 rng(13);
  std::uniform_real_distribution<double> probs(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double p = probs(rng);
    const double q = 1.0 - p;
    const double literal = 2.0 - p * p - q * q + 2.0 * p * q;
    CHECK(std::abs(effective_symbols_modified(Probability(p)) - literal) <= 1e-15);
  }
}

TEST_CASE("closed forms are exact at the boundaries") {
  for (const InvertFn invert : closed_forms) {
    const InversionResult zero = invert(EntropyValue::nats(0.0));
    CHECK(zero.lower.value() == 0.0);
    CHECK(zero.upper.value() == 1.0);
    const InversionResult top = invert(EntropyValue::nats(ln2));
    CHECK(top.lower.value() == 0.5);
    CHECK(top.upper.value() == 0.5);
    const InversionResult one_bit = invert(EntropyValue::bits(1.0));
    CHECK(one_bit.lower.value() == 0.5);
  }
}

TEST_CASE("anchor values at h = 0.5 nats") {
  // 1/2 - (1/2)sqrt(2 e^-0.5 - 1), computed independently at 50 digits.
  CHECK(std::abs(invert_kimura_crow(EntropyValue::nats(0.5)).lower.value() -
                 0.26920717113325052) <= 1e-12);
  // 1/2 - (1/2)sqrt(2 - e^0.5), computed independently at 50 digits.
  CHECK(std::abs(invert_improved(EntropyValue::nats(0.5)).lower.value() -
                 0.20365614174582939) <= 1e-12);
}

TEST_CASE("radicand clamp absorbs ulp overshoot, rejects real overshoot") {
  for (const InvertFn invert : closed_forms) {
    CHECK(invert(EntropyValue::nats(ln2 + 2e-16)).lower.value() == 0.5);
    CHECK_THROWS_AS(invert(EntropyValue::nats(0.70)), std::domain_error);
    CHECK_THROWS_AS(invert(EntropyValue::nats(5.0)), std::domain_error);
  }
}

TEST_CASE("single-branch overloads select correctly") {
  const EntropyValue h = EntropyValue::nats(0.3);
  const InversionResult kc = invert_kimura_crow(h);
  CHECK(invert_kimura_crow(h, Branch::lower).value() == kc.lower.value());
  CHECK(invert_kimura_crow(h, Branch::upper).value() == kc.upper.value());
  CHECK_THROWS_AS(invert_kimura_crow(h, Branch::both), std::invalid_argument);

  const InversionResult imp = invert_improved(h);
  CHECK(invert_improved(h, Branch::lower).value() == imp.lower.value());
  CHECK(invert_improved(h, Branch::upper).value() == imp.upper.value());
  CHECK_THROWS_AS(invert_improved(h, Branch::both), std::invalid_argument);
}

TEST_CASE("each form inverts the quantity it was derived from") {
  for (int j = 1; j <= 999; ++j) {
    const Probability p(j / 1000.0);
    const Branch side = p.value() <= 0.5 ? Branch::lower : Branch::upper;

    const double via_alleles = std::log(effective_alleles(p));
    const double kc = invert_kimura_crow(EntropyValue::nats(via_alleles), side).value();
    CHECK(std::abs(kc - p.value()) <= 1e-12);

    const double via_symbols = std::log(effective_symbols_modified(p));
    const double imp = invert_improved(EntropyValue::nats(via_symbols), side).value();
    CHECK(std::abs(imp - p.value()) <= 1e-12);
  }
}

TEST_CASE("branches always sum to one") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> entropies(0.0, ln2);
  for (int i = 0; i < 500; ++i) {
    const EntropyValue h = EntropyValue::nats(entropies(rng));
    const InversionResult kc = invert_kimura_crow(h);
    CHECK(std::abs(kc.lower.value() + kc.upper.value() - 1.0) <= 1e-15);
    const InversionResult imp = invert_improved(h);
    CHECK(std::abs(imp.lower.value() + imp.upper.value() - 1.0) <= 1e-15);
  }
}

}  // TEST_SUITE
