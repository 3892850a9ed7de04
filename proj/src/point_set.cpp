#include "fplab/point_set.hpp"

#include <algorithm>

namespace fplab {

PointSet::PointSet(Field field, int dim, std::string provenance)
    : field_(field), dim_(dim), provenance_(std::move(provenance)) {
  if (dim < 1 || dim > kMaxDim) throw Error(ErrorCode::DimensionMismatch, "dimension must be in [1, 4]");
}

PointSet::PointSet(Field field, int dim, std::vector<Point> points, std::string provenance)
    : PointSet(field, dim, std::move(provenance)) {
  for (const auto& pt : points) {
    if (pt.dim != dim) throw Error(ErrorCode::DimensionMismatch, "point " + to_string(pt) + " not in dimension " + std::to_string(dim));
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  points_ = std::move(points);
}

bool PointSet::contains(const Point& pt) const { return std::binary_search(points_.begin(), points_.end(), pt); }

PointSet PointSet::translated(const Vec& shift) const {
  std::vector<Point> moved;
  moved.reserve(points_.size());
  for (auto pt : points_) {
    for (int j = 0; j < dim_; ++j) pt.coords[j] = field_.add(pt.coords[j], shift[j]);
    moved.push_back(pt);
  }
  return PointSet(field_, dim_, std::move(moved), provenance_ + "+shift");
}

ElemSet make_elem_set(std::vector<Elem> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

}  // namespace fplab
