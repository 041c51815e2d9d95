#pragma once

#include <cstdint>

namespace ctiq::rng {

// Counter-mode generator built on the SplitMix64 finalizer (Steele/Lea/Flood).
// Every draw is a pure function of (seed, stream, index): draws can be produced
// in any order, in chunks, or in parallel lanes and the bits never change.
// All arithmetic is 64-bit unsigned with wraparound, so the sequence is
// bit-identical on every platform.

inline constexpr std::uint64_t golden_gamma = 0x9E3779B97F4A7C15ULL;

inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Key of one named substream of a seed (e.g. stream 0 = LEF draws,
// stream 1 = LM draws). Streams are decorrelated by construction.
inline constexpr std::uint64_t substream_key(std::uint64_t seed, std::uint32_t stream) {
  return mix64(seed ^ (golden_gamma * (static_cast<std::uint64_t>(stream) + 1)));
}

inline constexpr std::uint64_t draw_bits(std::uint64_t key, std::uint64_t index) {
  return mix64(key + (index + 1) * golden_gamma);
}

// 52-bit uniform on [0, 1). The (bits >> 12) * 2^-52 form is chosen so the
// vector kernels can reproduce it bit-exactly with integer ops alone.
inline constexpr double u01_from_bits(std::uint64_t bits) {
  return static_cast<double>(bits >> 12) * 0x1.0p-52;
}

inline constexpr double u01(std::uint64_t key, std::uint64_t index) {
  return u01_from_bits(draw_bits(key, index));
}

} // namespace ctiq::rng
