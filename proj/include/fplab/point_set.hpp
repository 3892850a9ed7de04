#pragma once

#include <span>
#include <string>
#include <vector>

#include "fplab/geometry.hpp"

namespace fplab {

/// Finite subset of F_q^d. Points are kept sorted and deduplicated.
class PointSet {
 public:
  PointSet(Field field, int dim, std::string provenance = {});
  /// Throws DimensionMismatch when a point's dimension differs from `dim`.
  PointSet(Field field, int dim, std::vector<Point> points, std::string provenance = {});

  const Field& field() const noexcept { return field_; }
  int dim() const noexcept { return dim_; }
  std::span<const Point> points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  bool contains(const Point& pt) const;
  const std::string& provenance() const noexcept { return provenance_; }
  void set_provenance(std::string p) { provenance_ = std::move(p); }

  /// The set translated by `shift`.
  PointSet translated(const Vec& shift) const;

  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }

 private:
  Field field_;
  int dim_;
  std::vector<Point> points_;
  std::string provenance_;
};

/// Sorted, deduplicated set of field elements.
using ElemSet = std::vector<Elem>;
ElemSet make_elem_set(std::vector<Elem> values);

}  // namespace fplab
