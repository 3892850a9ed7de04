#pragma once

#include <cstdint>
#include <span>

#include "fplab/point_set.hpp"

namespace fplab {

inline constexpr std::size_t kMaxEnergySetSize = 4096;
inline constexpr std::size_t kMaxEightTupleSetSize = 64;

/// E+(C) = #{(c1, c2, c3, c4) in C^4 : c1 + c2 = c3 + c4}, via sum multiplicities.
std::uint64_t additive_energy(const Field& f, std::span<const Elem> c);

/// E+(C, D) = #{(c1, d1, c2, d2) : c1 + d1 = c2 + d2}.
std::uint64_t cross_energy(const Field& f, std::span<const Elem> c, std::span<const Elem> d);

/// {y c : c in C}
ElemSet dilate(const Field& f, std::span<const Elem> c, Elem y);

struct DilateEnergySum {
  std::uint64_t sum = 0;
  /// |C|^4 |Y| / q + q |C|^2
  double rhs = 0.0;
  /// Exact form of sum <= rhs: q * sum <= |C|^4 |Y| + q^2 |C|^2.
  bool within_rhs = false;
};

/// sum over y in Y of E+(C, yC). Throws ZeroDilate if 0 is in Y.
DilateEnergySum dilate_energy_sum(const Field& f, std::span<const Elem> c, std::span<const Elem> ys);

/// #{(c1..c8) in C^8 : (c1 - c2)(c3 - c4) = (c5 - c6)(c7 - c8)}.
std::uint64_t eight_tuple_count(const Field& f, std::span<const Elem> c);

}  // namespace fplab
