#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "fplab/point_set.hpp"

namespace fplab {

enum class Comparison { Strict, NonStrict };

/// Number of cosets x + V^perp meeting E. Two points share a coset iff their
/// dot products against the RREF basis of V agree.
std::size_t projection_size(const PointSet& e, const Subspace& v);

struct ExceptionalMember {
  Subspace subspace;
  std::size_t projection_size = 0;
};

struct ExceptionalSetReport {
  std::uint64_t threshold = 1;
  Comparison comparison = Comparison::Strict;
  /// log_q(threshold), the exponent the threshold stands for.
  double s = 0.0;
  std::size_t grassmannian_size = 0;
  /// Sorted by canonical subspace order.
  std::vector<ExceptionalMember> members;
  /// Pencil concentration of the members; 0 when there are none.
  std::size_t concentration = 0;

  std::size_t size() const noexcept { return members.size(); }
};

/// Subspaces V in G(k, F_q^d) with #pi_V(E) < t (Strict) or <= t (NonStrict).
/// The empty set makes every subspace exceptional.
ExceptionalSetReport exceptional_set(const PointSet& e, std::uint64_t t, int k,
                                     Comparison comparison = Comparison::Strict);

/// max over nonzero xi of the number of members containing xi. Throws EmptyInput.
std::size_t concentration(const Field& f, std::span<const Subspace> members);

struct ProjectionValues {
  /// y -> #{a y + b : (a, b) in E}, ordered by y.
  std::map<Elem, std::size_t> counts;
  std::size_t max = 0;
  std::size_t min = 0;
};

/// Image sizes of E under (a, b) -> a y + b for each y in Y.
ProjectionValues projection_values(std::span<const Elem> ys, const PointSet& e);

}  // namespace fplab
