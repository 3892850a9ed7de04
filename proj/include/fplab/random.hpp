#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>
#include <vector>

namespace fplab {

inline constexpr std::string_view kPrngName = "mt19937_64 (splitmix64 seed derivation, rejection-sampled ranges)";

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Mixes a base seed with a sequence of discriminators (prime, trial index, ...).
std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> parts) noexcept;

/// Seeded generator whose outputs are identical on every platform: the engine
/// is fully specified by the standard, and ranges are drawn by rejection rather
/// than through implementation-defined distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  /// Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

inline constexpr std::uint64_t kFisherYatesLimit = 1U << 20;

/// n distinct values from [0, universe), sorted. Partial Fisher-Yates when the
/// universe is at most 2^20, dart throwing with a retry cap otherwise.
std::vector<std::uint64_t> sample_without_replacement(Rng& rng, std::uint64_t universe, std::uint64_t n);

}  // namespace fplab
