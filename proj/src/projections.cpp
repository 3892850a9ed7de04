#include "fplab/projections.hpp"

#include <algorithm>
#include <cmath>

namespace fplab {

std::size_t projection_size(const PointSet& e, const Subspace& v) {
  if (e.dim() != v.d) {
    throw Error(ErrorCode::DimensionMismatch,
                "point set in dimension " + std::to_string(e.dim()) + ", subspace in " + std::to_string(v.d));
  }
  const Field& f = e.field();
  const int d = v.d;
  if (v.k == 1) {
    std::vector<char> seen(f.order(), 0);
    std::size_t count = 0;
    for (const auto& pt : e) {
      const Elem label = dot(f, pt.coords, v.rows[0], d);
      if (!seen[label]) {
        seen[label] = 1;
        ++count;
      }
    }
    return count;
  }
  std::vector<Vec> labels;
  labels.reserve(e.size());
  for (const auto& pt : e) {
    Vec label{};
    for (int i = 0; i < v.k; ++i) label[i] = dot(f, pt.coords, v.rows[i], d);
    labels.push_back(label);
  }
  std::sort(labels.begin(), labels.end());
  return static_cast<std::size_t>(std::unique(labels.begin(), labels.end()) - labels.begin());
}

ExceptionalSetReport exceptional_set(const PointSet& e, std::uint64_t t, int k, Comparison comparison) {
  if (t < 1) throw Error(ErrorCode::InvalidArgument, "threshold must be at least 1");
  const Field& f = e.field();
  const auto grass = enumerate_grassmannian(k, e.dim(), f);

  ExceptionalSetReport report;
  report.threshold = t;
  report.comparison = comparison;
  report.s = std::log(static_cast<double>(t)) / std::log(static_cast<double>(f.order()));
  report.grassmannian_size = grass.size();
  for (const auto& v : grass) {
    const std::size_t size = projection_size(e, v);
    const bool small = comparison == Comparison::Strict ? size < t : size <= t;
    if (small) report.members.push_back({v, size});
  }
  if (!report.members.empty()) {
    std::vector<Subspace> subs;
    subs.reserve(report.members.size());
    for (const auto& m : report.members) subs.push_back(m.subspace);
    report.concentration = concentration(f, subs);
  }
  return report;
}

std::size_t concentration(const Field& f, std::span<const Subspace> members) {
  if (members.empty()) throw Error(ErrorCode::EmptyInput, "concentration of an empty family");
  const int d = members.front().d;
  std::map<Vec, std::size_t> hits;
  std::size_t best = 0;
  for (const auto& v : members) {
    if (v.d != d) throw Error(ErrorCode::DimensionMismatch, "members live in different ambient spaces");
    for (const auto& xi : v.vectors(f)) {
      if (std::all_of(xi.begin(), xi.end(), [](Elem c) { return c == 0; })) continue;
      best = std::max(best, ++hits[xi]);
    }
  }
  return best;
}

ProjectionValues projection_values(std::span<const Elem> ys, const PointSet& e) {
  if (e.dim() != 2) throw Error(ErrorCode::DimensionMismatch, "projection_values needs a planar set");
  const Field& f = e.field();
  ProjectionValues out;
  std::vector<char> seen(f.order(), 0);
  std::vector<Elem> touched;
  for (const Elem y : ys) {
    if (out.counts.count(y)) continue;
    std::size_t count = 0;
    for (const auto& pt : e) {
      const Elem value = f.add(f.mul(pt.x(), y), pt.y());
      if (!seen[value]) {
        seen[value] = 1;
        touched.push_back(value);
        ++count;
      }
    }
    for (const Elem v : touched) seen[v] = 0;
    touched.clear();
    out.counts.emplace(y, count);
  }
  if (!out.counts.empty()) {
    out.max = 0;
    out.min = SIZE_MAX;
    for (const auto& [y, c] : out.counts) {
      out.max = std::max(out.max, c);
      out.min = std::min(out.min, c);
    }
  }
  return out;
}

}  // namespace fplab
