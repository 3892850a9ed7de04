#include "fplab/oracle/brute_force.hpp"

#include <algorithm>
#include <set>

namespace fplab::oracle {

std::vector<Vec> directions(const Field& f, int d) {
  const Elem q = f.order();
  std::set<Vec> seen;
  Vec v{};
  while (true) {
    int lead = -1;
    for (int j = 0; j < d; ++j) {
      if (v[j] != 0) {
        lead = j;
        break;
      }
    }
    if (lead >= 0) {
      const Elem s = f.inv(v[lead]);
      Vec n{};
      for (int j = 0; j < d; ++j) n[j] = f.mul(v[j], s);
      seen.insert(n);
    }
    int j = 0;
    while (j < d && ++v[j] == q) v[j++] = 0;
    if (j == d) break;
  }
  return {seen.begin(), seen.end()};
}

std::size_t projection_size_by_cosets(const PointSet& e, const Vec& v) {
  const Field& f = e.field();
  const int d = e.dim();
  const Elem q = f.order();
  // V^perp = all w with w . v = 0, listed exhaustively.
  std::vector<Vec> perp;
  Vec w{};
  while (true) {
    Elem acc = 0;
    for (int j = 0; j < d; ++j) acc = f.add(acc, f.mul(w[j], v[j]));
    if (acc == 0) perp.push_back(w);
    int j = 0;
    while (j < d && ++w[j] == q) w[j++] = 0;
    if (j == d) break;
  }
  std::set<Vec> reps;
  for (const auto& pt : e) {
    Vec best{};
    bool first = true;
    for (const auto& u : perp) {
      Vec m{};
      for (int j = 0; j < d; ++j) m[j] = f.add(pt.coords[j], u[j]);
      if (first || m < best) best = m;
      first = false;
    }
    reps.insert(best);
  }
  return reps.size();
}

DirectionScan exceptional_directions(const PointSet& e, std::uint64_t t, bool strict) {
  DirectionScan scan;
  bool any = false;
  for (const auto& v : directions(e.field(), e.dim())) {
    const auto size = projection_size_by_cosets(e, v);
    if (strict ? size < t : size <= t) {
      ++scan.count;
      scan.min_size = any ? std::min(scan.min_size, size) : size;
      scan.max_size = any ? std::max(scan.max_size, size) : size;
      any = true;
    }
  }
  return scan;
}

namespace {

std::vector<Elem> unique_sorted(std::span<const Elem> c) {
  std::vector<Elem> v(c.begin(), c.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

std::uint64_t additive_energy(const Field& f, std::span<const Elem> c_in) {
  return cross_energy(f, c_in, c_in);
}

std::uint64_t cross_energy(const Field& f, std::span<const Elem> c_in, std::span<const Elem> d_in) {
  const auto c = unique_sorted(c_in);
  const auto d = unique_sorted(d_in);
  std::uint64_t n = 0;
  for (const Elem c1 : c)
    for (const Elem d1 : d)
      for (const Elem c2 : c)
        for (const Elem d2 : d) n += f.add(c1, d1) == f.add(c2, d2);
  return n;
}

std::uint64_t dilate_energy_sum(const Field& f, std::span<const Elem> c_in, std::span<const Elem> ys) {
  const auto c = unique_sorted(c_in);
  std::uint64_t total = 0;
  for (const Elem y : unique_sorted(ys)) {
    std::vector<Elem> yc;
    for (const Elem x : c) yc.push_back(f.mul(y, x));
    total += cross_energy(f, c, yc);
  }
  return total;
}

std::uint64_t eight_tuple_count(const Field& f, std::span<const Elem> c_in) {
  const auto c = unique_sorted(c_in);
  const std::size_t n = c.size();
  std::uint64_t count = 0;
  std::array<std::size_t, 8> i{};
  // Odometer over C^8.
  while (true) {
    const Elem lhs = f.mul(f.sub(c[i[0]], c[i[1]]), f.sub(c[i[2]], c[i[3]]));
    const Elem rhs = f.mul(f.sub(c[i[4]], c[i[5]]), f.sub(c[i[6]], c[i[7]]));
    count += lhs == rhs;
    int j = 0;
    while (j < 8 && ++i[j] == n) i[j++] = 0;
    if (j == 8 || n == 0) break;
  }
  return n == 0 ? 0 : count;
}

std::uint64_t collinear_triples(const PointSet& e) {
  const Field& f = e.field();
  const auto pts = e.points();
  std::uint64_t n = 0;
  for (const auto& p1 : pts)
    for (const auto& p2 : pts)
      for (const auto& p3 : pts) {
        if (p1 == p2 || p1 == p3 || p2 == p3) continue;
        // det [p2 - p1, p3 - p1] = 0
        const Elem det = f.sub(f.mul(f.sub(p2.x(), p1.x()), f.sub(p3.y(), p1.y())),
                               f.mul(f.sub(p2.y(), p1.y()), f.sub(p3.x(), p1.x())));
        n += det == 0;
      }
  return n;
}

std::uint64_t incidences(const PointSet& points, std::span<const ProjLine> lines) {
  const Field& f = points.field();
  std::uint64_t n = 0;
  for (const auto& pt : points)
    for (const auto& ln : lines) {
      n += f.add(f.add(f.mul(ln.a, pt.x()), f.mul(ln.b, pt.y())), ln.c) == 0;
    }
  return n;
}

std::uint64_t coincidences(const PointSet& e, std::span<const Elem> ys) {
  const Field& f = e.field();
  std::uint64_t n = 0;
  for (const auto& u : e)
    for (const auto& w : e)
      for (const Elem y : unique_sorted(ys)) {
        n += f.add(f.mul(u.x(), y), u.y()) == f.add(f.mul(w.x(), y), w.y());
      }
  return n;
}

std::size_t lines_spanned_by_pairs(const Field& f) {
  const Elem q = f.order();
  // A line is identified by the set of points on it.
  std::set<std::vector<std::pair<Elem, Elem>>> lines;
  for (Elem x1 = 0; x1 < q; ++x1)
    for (Elem y1 = 0; y1 < q; ++y1)
      for (Elem x2 = 0; x2 < q; ++x2)
        for (Elem y2 = 0; y2 < q; ++y2) {
          if (x1 == x2 && y1 == y2) continue;
          std::vector<std::pair<Elem, Elem>> members;
          for (Elem t = 0; t < q; ++t) {
            members.emplace_back(f.add(x1, f.mul(t, f.sub(x2, x1))), f.add(y1, f.mul(t, f.sub(y2, y1))));
          }
          std::sort(members.begin(), members.end());
          lines.insert(members);
        }
  return lines.size();
}

std::size_t self_orthogonal_directions(const Field& f) {
  std::size_t n = 0;
  for (const auto& v : directions(f, 2)) n += f.add(f.mul(v[0], v[0]), f.mul(v[1], v[1])) == 0;
  return n;
}

std::uint64_t max_multiplicative_order(const Field& f) {
  std::uint64_t best = 0;
  for (Elem x = 1; x < f.order(); ++x) {
    std::uint64_t order = 1;
    Elem acc = x;
    while (acc != 1) {
      acc = f.mul(acc, x);
      ++order;
    }
    best = std::max(best, order);
  }
  return best;
}

}  // namespace fplab::oracle
