#pragma once

#include <cstdint>
#include <span>
#include <string_view>

namespace ctiq::kernels {

// The Monte Carlo inner loops are organized as scalar reference kernels plus
// SIMD variants selected at runtime. Every variant is required to produce
// byte-identical output for identical inputs: per-element arithmetic uses the
// same IEEE-exact operation sequence in each lane, and reductions never happen
// inside a kernel. The equivalence tests enforce this bit-for-bit.

enum class Variant { scalar, avx2 };

std::string_view variant_name(Variant v);

// Compiled in and supported by the running CPU.
bool variant_available(Variant v);

// Variant the dispatcher currently uses. Defaults to the best available;
// the CTIQ_KERNELS environment variable ("scalar" or "avx2") overrides.
Variant active_variant();

// Force a specific variant (throws validation_error if unavailable).
void force_variant(Variant v);

// out[i] = u01(key, start_index + i)
void fill_u01(std::uint64_t key, std::uint64_t start_index, std::span<double> out);

// Inverse-CDF transform of uniforms to triangular(min, mode, max) samples.
void triangular_from_u01(std::span<const double> u, double min, double mode,
                         double max, std::span<double> out);

// out[i] = in[i] * factor
void scale(std::span<const double> in, double factor, std::span<double> out);

// ale0[i]    = lef0[i] * lm[i]
// ale_cti[i] = lef_cti[i] * lm[i]
// delta[i]   = ale0[i] - ale_cti[i]
// This is the exact expression the point-mode scenario evaluator uses, so a
// degenerate Monte Carlo run reproduces it bit-for-bit.
void delta_ale(std::span<const double> lef0, std::span<const double> lef_cti,
               std::span<const double> lm, std::span<double> ale0,
               std::span<double> ale_cti, std::span<double> delta);

} // namespace ctiq::kernels
