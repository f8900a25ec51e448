#pragma once

#include "binent/entropy.hpp"
#include "binent/inverse.hpp"

namespace binent {

enum class Method { exact, kimura_crow, improved };

// Negative radicands within this window of 0 are clamped to 0. The
// mathematical radicand is exactly 0 at h = ln 2; floating-point e^H can
// miss it by 1 ulp.
inline constexpr double radicand_clamp_eps = 4e-16;

// Effective number of alleles N_a = 1 / (p^2 + q^2), in [1, 2].
double effective_alleles(Probability p) noexcept;

// Expected heterozygosity 2pq, in [0, 1/2].
double heterozygosity(Probability p) noexcept;

// Modified effective symbol count 2 - p^2 - q^2 + 2pq = 1 + 4pq, in [1, 2].
double effective_symbols_modified(Probability p) noexcept;

// Closed-form estimate p = 1/2 -+ (1/2)sqrt(2e^-H - 1), from equating the
// sequence-count estimate at L = 1 with the effective allele count.
InversionResult invert_kimura_crow(const EntropyValue& h);
Probability invert_kimura_crow(const EntropyValue& h, Branch branch);

// Closed-form estimate p = 1/2 -+ (1/2)sqrt(2 - e^H), from the modified
// symbol count. Tighter than the allele-count form across the whole domain.
InversionResult invert_improved(const EntropyValue& h);
Probability invert_improved(const EntropyValue& h, Branch branch);

}  // namespace binent
