#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "fplab/point_set.hpp"

namespace fplab {

enum class IncidenceBackend { Naive, Indexed };

/// Number of incident (point, line) pairs. The indexed backend groups lines by
/// direction [a : b : *] and histograms the points' evaluation a x + b y.
std::uint64_t count_incidences(const PointSet& points, const LineSet& lines,
                               IncidenceBackend backend = IncidenceBackend::Indexed);
std::uint64_t count_incidences(const Field& f, std::span<const ProjPoint> points, std::span<const ProjLine> lines,
                               IncidenceBackend backend = IncidenceBackend::Indexed);

/// For each point of `points` (in order), the number of lines through it.
std::vector<std::size_t> lines_through_each(const PointSet& points, const LineSet& lines);

/// Points of Z lying on at least r lines of L.
PointSet rich_points(const PointSet& z, const LineSet& lines, std::size_t r);

inline constexpr std::size_t kMaxCollinearTriplePoints = 1U << 15;

/// Ordered triples of distinct points of E on a common line.
std::uint64_t collinear_triples(const PointSet& e);

struct SlopeMultiplicities {
  /// lambda -> #{(c, d) != base : (d - b) / (c - a) = lambda}
  std::map<Elem, std::size_t> by_slope;
  /// Points sharing the base's first coordinate.
  std::size_t vertical = 0;
};

/// Throws BaseNotInSet.
SlopeMultiplicities slope_multiplicities(const PointSet& e, const Point& base);

struct CoincidenceResult {
  /// |R|, R = {((a,b), (a',b'), y) : a y + b = a' y + b'}.
  std::uint64_t r = 0;
  /// Members of R with a = a'.
  std::uint64_t same_first = 0;
  /// Largest image size max_y #{a y + b}.
  std::size_t max_image = 0;
  /// |Y| |E|^2, the numerator of the convexity lower bound |Y| |E|^2 / max_image.
  std::uint64_t lower_bound_numerator = 0;
  double lower_bound = 0.0;

  /// Exact check r * max_image >= |Y| |E|^2.
  bool meets_lower_bound() const noexcept {
    return static_cast<unsigned __int128>(r) * max_image >= lower_bound_numerator;
  }
};

CoincidenceResult coincidence_count(const PointSet& e, std::span<const Elem> ys);

}  // namespace fplab
