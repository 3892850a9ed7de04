#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fplab/field.hpp"

namespace fplab {

inline constexpr int kMaxDim = 4;

using Vec = std::array<Elem, kMaxDim>;

/// A point of F_q^d. Coordinates past `dim` are kept at zero so that dot
/// products and comparisons can ignore `dim`.
struct Point {
  Vec coords{};
  std::uint8_t dim = 2;

  Elem x() const noexcept { return coords[0]; }
  Elem y() const noexcept { return coords[1]; }

  friend auto operator<=>(const Point&, const Point&) = default;
};

Point make_point(std::initializer_list<Elem> coords);

Elem dot(const Field& f, const Vec& u, const Vec& v, int dim) noexcept;

/// Line {(x, y) : a x + b y + c z = 0} of the projective plane. The stored
/// triple is canonical: its first nonzero coefficient is 1.
struct ProjLine {
  Elem a = 0, b = 0, c = 1;

  bool is_affine() const noexcept { return a != 0 || b != 0; }

  friend auto operator<=>(const ProjLine&, const ProjLine&) = default;
};

/// Point (x : y : z) of the projective plane, canonical with its last nonzero
/// coordinate equal to 1, so affine points read (x : y : 1).
struct ProjPoint {
  Elem x = 0, y = 0, z = 1;

  bool is_affine() const noexcept { return z != 0; }

  friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;
};

/// Throws InvalidArgument for the zero triple.
ProjLine make_line(const Field& f, Elem a, Elem b, Elem c);
ProjPoint make_proj_point(const Field& f, Elem x, Elem y, Elem z);
/// The non-vertical line y = slope * x + intercept.
ProjLine line_from_slope(const Field& f, Elem slope, Elem intercept);
ProjLine vertical_line(const Field& f, Elem x0);
ProjLine line_at_infinity();
/// Line through two distinct affine points.
ProjLine line_through(const Field& f, const Point& p1, const Point& p2);

bool incident(const Field& f, const Point& pt, const ProjLine& ln);
bool incident(const Field& f, const ProjPoint& pt, const ProjLine& ln);

/// Standard duality of PG(2, q): the point (x : y : z) corresponds to the
/// line [x : y : z] and back. It preserves incidence.
ProjLine dualize_point(const Field& f, const Point& pt);
ProjLine dualize_point(const Field& f, const ProjPoint& pt);
ProjPoint dualize_line(const Field& f, const ProjLine& ln);

ProjPoint to_projective(const Point& pt);
/// Requires an affine projective point.
Point to_affine(const Field& f, const ProjPoint& pt);

/// A finite family of distinct lines over a common field.
class LineSet {
 public:
  explicit LineSet(Field field) : field_(field) {}
  LineSet(Field field, std::vector<ProjLine> lines);

  const Field& field() const noexcept { return field_; }
  std::span<const ProjLine> lines() const noexcept { return lines_; }
  std::size_t size() const noexcept { return lines_.size(); }
  bool empty() const noexcept { return lines_.empty(); }
  bool contains(const ProjLine& ln) const;

 private:
  Field field_;
  std::vector<ProjLine> lines_;  // sorted, unique
};

inline constexpr Elem kMaxEnumeratedLinesOrder = 128;

/// All q^2 + q affine lines, plus the line at infinity unless `affine_only`.
LineSet enumerate_lines(const Field& f, bool affine_only);

/// A k-dimensional subspace of F_q^d stored by its reduced row echelon basis.
struct Subspace {
  std::uint8_t k = 0;
  std::uint8_t d = 0;
  std::array<Vec, kMaxDim> rows{};

  std::span<const Vec> basis() const noexcept { return {rows.data(), k}; }
  bool contains(const Field& f, const Vec& v) const;
  /// All q^k vectors of the subspace.
  std::vector<Vec> vectors(const Field& f) const;

  friend auto operator<=>(const Subspace&, const Subspace&) = default;
};

/// Row-reduces `rows` (each with `d` meaningful columns) in place and drops
/// zero rows; returns the rank.
int rref(const Field& f, std::vector<Vec>& rows, int d);

/// Throws DimensionMismatch if the vectors are dependent or d is out of range.
Subspace make_subspace(const Field& f, std::vector<Vec> spanning, int d);
/// Like make_subspace but accepts dependent generators.
Subspace span_of(const Field& f, std::vector<Vec> spanning, int d);

Subspace orthogonal_complement(const Field& f, const Subspace& v);

/// Number of k-subspaces of F_q^d, saturating at UINT64_MAX.
std::uint64_t gaussian_binomial(int d, int k, std::uint64_t q);

inline constexpr std::uint64_t kMaxGrassmannianSize = 1'000'000;

/// G(k, F_q^d) in canonical order. Requires 0 < k < d <= 4.
std::vector<Subspace> enumerate_grassmannian(int k, int d, const Field& f);

std::string to_string(const Subspace& v);
std::string to_string(const ProjLine& ln);
std::string to_string(const Point& pt);

}  // namespace fplab
