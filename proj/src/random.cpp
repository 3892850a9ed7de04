#include "fplab/random.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "fplab/error.hpp"

namespace fplab {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> parts) noexcept {
  std::uint64_t h = splitmix64(base);
  for (const auto part : parts) h = splitmix64(h ^ splitmix64(part + 0x632be59bd9b4e019ULL));
  return h;
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "Rng::below(0)");
  // Largest multiple of n that fits, to avoid modulo bias.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % n;
}

std::vector<std::uint64_t> sample_without_replacement(Rng& rng, std::uint64_t universe, std::uint64_t n) {
  if (n > universe) {
    throw Error(ErrorCode::TooLarge,
                "cannot draw " + std::to_string(n) + " distinct values from " + std::to_string(universe));
  }
  std::vector<std::uint64_t> out;
  if (universe <= kFisherYatesLimit) {
    std::vector<std::uint64_t> pool(universe);
    std::iota(pool.begin(), pool.end(), 0);
    for (std::uint64_t i = 0; i < n; ++i) std::swap(pool[i], pool[i + rng.below(universe - i)]);
    out.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(n));
  } else {
    std::unordered_set<std::uint64_t> taken;
    const std::uint64_t cap = 64 * n + 1024;
    std::uint64_t attempts = 0;
    while (taken.size() < n) {
      if (++attempts > cap) throw Error(ErrorCode::TooLarge, "dart throwing exceeded its retry cap");
      const auto x = rng.below(universe);
      if (taken.insert(x).second) out.push_back(x);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fplab
