#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fplab/point_set.hpp"

/// Exhaustive reference computations. Each routine follows the defining
/// formula directly and shares nothing with the optimized kernels beyond field
/// arithmetic, so agreement between the two is meaningful.
namespace fplab::oracle {

/// Directions of F_q^d: nonzero vectors with first nonzero coordinate 1.
std::vector<Vec> directions(const Field& f, int d);

/// #pi_V(E) for V = span{v}, by grouping E into explicit cosets x + V^perp.
std::size_t projection_size_by_cosets(const PointSet& e, const Vec& v);

struct DirectionScan {
  std::size_t count = 0;
  std::size_t min_size = 0;
  std::size_t max_size = 0;
};

/// Directions whose coset count is < t (strict) or <= t, with the size range of
/// those directions.
DirectionScan exceptional_directions(const PointSet& e, std::uint64_t t, bool strict);

std::uint64_t additive_energy(const Field& f, std::span<const Elem> c);
std::uint64_t cross_energy(const Field& f, std::span<const Elem> c, std::span<const Elem> d);
std::uint64_t dilate_energy_sum(const Field& f, std::span<const Elem> c, std::span<const Elem> ys);
std::uint64_t eight_tuple_count(const Field& f, std::span<const Elem> c);
std::uint64_t collinear_triples(const PointSet& e);
std::uint64_t incidences(const PointSet& points, std::span<const ProjLine> lines);
std::uint64_t coincidences(const PointSet& e, std::span<const Elem> ys);

/// Distinct lines spanned by pairs of points of F_q^2.
std::size_t lines_spanned_by_pairs(const Field& f);
/// Lines through the origin of F_q^2 with v . v = 0.
std::size_t self_orthogonal_directions(const Field& f);
/// Largest multiplicative order of a nonzero element.
std::uint64_t max_multiplicative_order(const Field& f);

}  // namespace fplab::oracle
