#include "fplab/incidence.hpp"

#include <algorithm>

namespace fplab {

namespace {

void require_planar(const PointSet& e, const char* where) {
  if (e.dim() != 2) throw Error(ErrorCode::DimensionMismatch, std::string(where) + " needs a planar point set");
}

struct DirectionClass {
  Elem a = 0, b = 0;
  std::vector<Elem> offsets;  // c values of the lines in this class
};

std::vector<DirectionClass> group_by_direction(std::span<const ProjLine> lines) {
  std::vector<ProjLine> sorted(lines.begin(), lines.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<DirectionClass> classes;
  for (const auto& ln : sorted) {
    if (classes.empty() || classes.back().a != ln.a || classes.back().b != ln.b) {
      classes.push_back({ln.a, ln.b, {}});
    }
    classes.back().offsets.push_back(ln.c);
  }
  return classes;
}

}  // namespace

std::uint64_t count_incidences(const Field& f, std::span<const ProjPoint> points, std::span<const ProjLine> lines,
                               IncidenceBackend backend) {
  std::uint64_t total = 0;
  if (backend == IncidenceBackend::Naive) {
    for (const auto& pt : points) {
      for (const auto& ln : lines) total += incident(f, pt, ln) ? 1 : 0;
    }
    return total;
  }
  // Within a direction class [a : b : c], an affine point (x : y : 1) lies on
  // exactly the line with c = -(a x + b y); an ideal point (x : y : 0) lies on
  // every line of the class when a x + b y = 0 and on none otherwise.
  std::vector<std::uint32_t> hist(f.order(), 0);
  for (const auto& cls : group_by_direction(lines)) {
    std::uint64_t ideal_hits = 0;
    std::vector<Elem> touched;
    for (const auto& pt : points) {
      const Elem eval = f.add(f.mul(cls.a, pt.x), f.mul(cls.b, pt.y));
      if (pt.z == 0) {
        if (eval == 0) ++ideal_hits;
        continue;
      }
      const Elem key = f.neg(eval);  // canonical points have z = 1
      if (hist[key]++ == 0) touched.push_back(key);
    }
    for (const Elem c : cls.offsets) total += hist[c] + ideal_hits;
    for (const Elem key : touched) hist[key] = 0;
  }
  return total;
}

std::uint64_t count_incidences(const PointSet& points, const LineSet& lines, IncidenceBackend backend) {
  require_planar(points, "count_incidences");
  require_same_field(points.field(), lines.field(), "count_incidences");
  std::vector<ProjPoint> proj;
  proj.reserve(points.size());
  for (const auto& pt : points) proj.push_back(to_projective(pt));
  return count_incidences(points.field(), proj, lines.lines(), backend);
}

std::vector<std::size_t> lines_through_each(const PointSet& points, const LineSet& lines) {
  require_planar(points, "lines_through_each");
  require_same_field(points.field(), lines.field(), "lines_through_each");
  const Field& f = points.field();
  std::vector<std::size_t> counts(points.size(), 0);
  std::vector<char> present(f.order(), 0);
  for (const auto& cls : group_by_direction(lines.lines())) {
    if (cls.a == 0 && cls.b == 0) continue;  // line at infinity
    for (const Elem c : cls.offsets) present[c] = 1;
    std::size_t i = 0;
    for (const auto& pt : points) {
      const Elem key = f.neg(f.add(f.mul(cls.a, pt.x()), f.mul(cls.b, pt.y())));
      counts[i++] += present[key];
    }
    for (const Elem c : cls.offsets) present[c] = 0;
  }
  return counts;
}

PointSet rich_points(const PointSet& z, const LineSet& lines, std::size_t r) {
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "richness must be at least 1");
  const auto counts = lines_through_each(z, lines);
  std::vector<Point> rich;
  std::size_t i = 0;
  for (const auto& pt : z) {
    if (counts[i++] >= r) rich.push_back(pt);
  }
  return PointSet(z.field(), z.dim(), std::move(rich), z.provenance() + "|rich" + std::to_string(r));
}

std::uint64_t collinear_triples(const PointSet& e) {
  require_planar(e, "collinear_triples");
  if (e.size() > kMaxCollinearTriplePoints) {
    throw Error(ErrorCode::ScaleExceeded, "collinear_triples capped at 2^15 points");
  }
  // For each first point, bucket the others by the direction of the joining
  // line; a bucket of n points contributes n (n - 1) ordered completions.
  const Field& f = e.field();
  const Elem q = f.order();
  std::vector<std::uint32_t> bucket(std::size_t{q} + 1, 0);
  std::uint64_t total = 0;
  for (const auto& base : e) {
    for (const auto& other : e) {
      if (other == base) continue;
      const Elem dx = f.sub(other.x(), base.x());
      const Elem dy = f.sub(other.y(), base.y());
      const std::size_t slot = dx == 0 ? q : f.div(dy, dx);
      ++bucket[slot];
    }
    for (auto& n : bucket) {
      total += std::uint64_t{n} * (n >= 1 ? n - 1 : 0);
      n = 0;
    }
  }
  return total;
}

SlopeMultiplicities slope_multiplicities(const PointSet& e, const Point& base) {
  require_planar(e, "slope_multiplicities");
  if (!e.contains(base)) throw Error(ErrorCode::BaseNotInSet, "base " + to_string(base) + " not in E");
  const Field& f = e.field();
  SlopeMultiplicities out;
  for (const auto& pt : e) {
    if (pt == base) continue;
    const Elem dx = f.sub(pt.x(), base.x());
    if (dx == 0) {
      ++out.vertical;
      continue;
    }
    ++out.by_slope[f.div(f.sub(pt.y(), base.y()), dx)];
  }
  return out;
}

CoincidenceResult coincidence_count(const PointSet& e, std::span<const Elem> ys_in) {
  require_planar(e, "coincidence_count");
  const Field& f = e.field();
  const ElemSet ys = make_elem_set({ys_in.begin(), ys_in.end()});
  CoincidenceResult out;
  std::vector<std::uint32_t> hist(f.order(), 0);
  std::vector<Elem> touched;
  for (const Elem y : ys) {
    for (const auto& pt : e) {
      const Elem value = f.add(f.mul(pt.x(), y), pt.y());
      if (hist[value]++ == 0) touched.push_back(value);
    }
    for (const Elem v : touched) {
      out.r += std::uint64_t{hist[v]} * hist[v];
      hist[v] = 0;
    }
    out.max_image = std::max(out.max_image, touched.size());
    touched.clear();
  }
  // Members with a = a', counted by grouping on (a, a y + b) per y.
  std::vector<std::pair<Elem, Elem>> keyed;
  keyed.reserve(e.size());
  for (const Elem y : ys) {
    keyed.clear();
    for (const auto& pt : e) keyed.emplace_back(pt.x(), f.add(f.mul(pt.x(), y), pt.y()));
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t i = 0; i < keyed.size();) {
      std::size_t j = i;
      while (j < keyed.size() && keyed[j] == keyed[i]) ++j;
      out.same_first += std::uint64_t{j - i} * (j - i);
      i = j;
    }
  }
  out.lower_bound_numerator = std::uint64_t{ys.size()} * e.size() * e.size();
  out.lower_bound = out.max_image == 0 ? 0.0
                                       : static_cast<double>(out.lower_bound_numerator) / static_cast<double>(out.max_image);
  return out;
}

}  // namespace fplab
