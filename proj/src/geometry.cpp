#include "fplab/geometry.hpp"

#include <algorithm>
#include <limits>

namespace fplab {

Point make_point(std::initializer_list<Elem> coords) {
  if (coords.size() < 1 || coords.size() > kMaxDim) {
    throw Error(ErrorCode::DimensionMismatch, "point dimension must be in [1, 4]");
  }
  Point pt;
  pt.dim = static_cast<std::uint8_t>(coords.size());
  std::copy(coords.begin(), coords.end(), pt.coords.begin());
  return pt;
}

Elem dot(const Field& f, const Vec& u, const Vec& v, int dim) noexcept {
  Elem acc = 0;
  for (int i = 0; i < dim; ++i) acc = f.add(acc, f.mul(u[i], v[i]));
  return acc;
}

namespace {

// Scales the triple so that the coordinate at `lead` becomes 1.
std::array<Elem, 3> scale_to_one(const Field& f, std::array<Elem, 3> t, int lead) {
  const Elem s = f.inv(t[lead]);
  for (auto& v : t) v = f.mul(v, s);
  return t;
}

}  // namespace

ProjLine make_line(const Field& f, Elem a, Elem b, Elem c) {
  const std::array<Elem, 3> t{a, b, c};
  for (int i = 0; i < 3; ++i) {
    if (t[i] != 0) {
      const auto n = scale_to_one(f, t, i);
      return {n[0], n[1], n[2]};
    }
  }
  throw Error(ErrorCode::InvalidArgument, "line coefficients are all zero");
}

ProjPoint make_proj_point(const Field& f, Elem x, Elem y, Elem z) {
  const std::array<Elem, 3> t{x, y, z};
  for (int i = 2; i >= 0; --i) {
    if (t[i] != 0) {
      const auto n = scale_to_one(f, t, i);
      return {n[0], n[1], n[2]};
    }
  }
  throw Error(ErrorCode::InvalidArgument, "projective point coordinates are all zero");
}

ProjLine line_from_slope(const Field& f, Elem slope, Elem intercept) {
  // slope * x - y + intercept = 0
  return make_line(f, slope, f.neg(1), intercept);
}

ProjLine vertical_line(const Field& f, Elem x0) { return make_line(f, 1, 0, f.neg(x0)); }

ProjLine line_at_infinity() { return {0, 0, 1}; }

ProjLine line_through(const Field& f, const Point& p1, const Point& p2) {
  if (p1 == p2) throw Error(ErrorCode::InvalidArgument, "line_through needs distinct points");
  // Cross product of (x1, y1, 1) and (x2, y2, 1).
  const Elem a = f.sub(p1.y(), p2.y());
  const Elem b = f.sub(p2.x(), p1.x());
  const Elem c = f.sub(f.mul(p1.x(), p2.y()), f.mul(p2.x(), p1.y()));
  return make_line(f, a, b, c);
}

bool incident(const Field& f, const Point& pt, const ProjLine& ln) {
  if (pt.dim != 2) throw Error(ErrorCode::DimensionMismatch, "incidence needs planar points");
  return f.add(f.add(f.mul(ln.a, pt.x()), f.mul(ln.b, pt.y())), ln.c) == 0;
}

bool incident(const Field& f, const ProjPoint& pt, const ProjLine& ln) {
  return f.add(f.add(f.mul(ln.a, pt.x), f.mul(ln.b, pt.y)), f.mul(ln.c, pt.z)) == 0;
}

ProjLine dualize_point(const Field& f, const Point& pt) {
  if (pt.dim != 2) throw Error(ErrorCode::DimensionMismatch, "duality is planar");
  return make_line(f, pt.x(), pt.y(), 1);
}

ProjLine dualize_point(const Field& f, const ProjPoint& pt) { return make_line(f, pt.x, pt.y, pt.z); }

ProjPoint dualize_line(const Field& f, const ProjLine& ln) { return make_proj_point(f, ln.a, ln.b, ln.c); }

ProjPoint to_projective(const Point& pt) { return {pt.x(), pt.y(), 1}; }

Point to_affine(const Field& f, const ProjPoint& pt) {
  if (pt.z == 0) throw Error(ErrorCode::InvalidArgument, "ideal point has no affine image");
  const Elem zi = f.inv(pt.z);
  return make_point({f.mul(pt.x, zi), f.mul(pt.y, zi)});
}

LineSet::LineSet(Field field, std::vector<ProjLine> lines) : field_(field), lines_(std::move(lines)) {
  std::sort(lines_.begin(), lines_.end());
  lines_.erase(std::unique(lines_.begin(), lines_.end()), lines_.end());
}

bool LineSet::contains(const ProjLine& ln) const {
  return std::binary_search(lines_.begin(), lines_.end(), ln);
}

LineSet enumerate_lines(const Field& f, bool affine_only) {
  const Elem q = f.order();
  if (q > kMaxEnumeratedLinesOrder) {
    throw Error(ErrorCode::ScaleExceeded, "enumerate_lines is capped at q = 128");
  }
  std::vector<ProjLine> lines;
  lines.reserve(std::size_t{q} * q + q + 1);
  for (Elem b = 0; b < q; ++b) {
    for (Elem c = 0; c < q; ++c) lines.push_back({1, b, c});
  }
  for (Elem c = 0; c < q; ++c) lines.push_back({0, 1, c});
  if (!affine_only) lines.push_back(line_at_infinity());
  return LineSet(f, std::move(lines));
}

int rref(const Field& f, std::vector<Vec>& rows, int d) {
  int rank = 0;
  for (int col = 0; col < d && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    const Elem s = f.inv(rows[rank][col]);
    for (int j = 0; j < d; ++j) rows[rank][j] = f.mul(rows[rank][j], s);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Elem factor = rows[r][col];
      for (int j = 0; j < d; ++j) rows[r][j] = f.sub(rows[r][j], f.mul(factor, rows[rank][j]));
    }
    ++rank;
  }
  rows.resize(rank);
  return rank;
}

namespace {

int leading_column(const Vec& row, int d) {
  for (int j = 0; j < d; ++j) {
    if (row[j] != 0) return j;
  }
  return -1;
}

Subspace from_rref(const std::vector<Vec>& rows, int d) {
  Subspace s;
  s.k = static_cast<std::uint8_t>(rows.size());
  s.d = static_cast<std::uint8_t>(d);
  std::copy(rows.begin(), rows.end(), s.rows.begin());
  return s;
}

void check_dim(int d) {
  if (d < 1 || d > kMaxDim) throw Error(ErrorCode::DimensionMismatch, "ambient dimension must be in [1, 4]");
}

}  // namespace

Subspace span_of(const Field& f, std::vector<Vec> spanning, int d) {
  check_dim(d);
  rref(f, spanning, d);
  return from_rref(spanning, d);
}

Subspace make_subspace(const Field& f, std::vector<Vec> spanning, int d) {
  const auto n = spanning.size();
  Subspace s = span_of(f, std::move(spanning), d);
  if (s.k != n) throw Error(ErrorCode::DimensionMismatch, "spanning vectors are dependent");
  return s;
}

bool Subspace::contains(const Field& f, const Vec& v) const {
  Vec r = v;
  for (int i = 0; i < k; ++i) {
    const int lead = leading_column(rows[i], d);
    const Elem factor = r[lead];
    if (factor == 0) continue;
    for (int j = 0; j < d; ++j) r[j] = f.sub(r[j], f.mul(factor, rows[i][j]));
  }
  return std::all_of(r.begin(), r.begin() + d, [](Elem e) { return e == 0; });
}

std::vector<Vec> Subspace::vectors(const Field& f) const {
  const Elem q = f.order();
  std::vector<Vec> out;
  std::array<Elem, kMaxDim> coeff{};
  while (true) {
    Vec v{};
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < d; ++j) v[j] = f.add(v[j], f.mul(coeff[i], rows[i][j]));
    }
    out.push_back(v);
    int i = 0;
    while (i < k && ++coeff[i] == q) coeff[i++] = 0;
    if (i == k) break;
  }
  return out;
}

Subspace orthogonal_complement(const Field& f, const Subspace& v) {
  const int d = v.d;
  std::array<bool, kMaxDim> is_pivot{};
  std::array<int, kMaxDim> pivot_col{};
  for (int i = 0; i < v.k; ++i) {
    pivot_col[i] = leading_column(v.rows[i], d);
    is_pivot[pivot_col[i]] = true;
  }
  // Null space of the basis matrix: one generator per free column.
  std::vector<Vec> gens;
  for (int free = 0; free < d; ++free) {
    if (is_pivot[free]) continue;
    Vec y{};
    y[free] = 1;
    for (int i = 0; i < v.k; ++i) y[pivot_col[i]] = f.neg(v.rows[i][free]);
    gens.push_back(y);
  }
  return span_of(f, std::move(gens), d);
}

std::uint64_t gaussian_binomial(int d, int k, std::uint64_t q) {
  if (k < 0 || k > d) return 0;
  constexpr auto kSat = std::numeric_limits<std::uint64_t>::max();
  const auto sat_add = [](std::uint64_t x, std::uint64_t y) { return x > kSat - y ? kSat : x + y; };
  const auto sat_mul = [](std::uint64_t x, std::uint64_t y) {
    return (y != 0 && x > kSat / y) ? kSat : x * y;
  };
  // Pascal-type recurrence [n, j] = [n-1, j-1] + q^j [n-1, j].
  std::vector<std::uint64_t> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;
  for (int n = 1; n <= d; ++n) {
    for (int j = std::min(n, k); j >= 1; --j) {
      std::uint64_t qj = 1;
      for (int e = 0; e < j; ++e) qj = sat_mul(qj, q);
      row[j] = sat_add(row[j - 1], sat_mul(qj, row[j]));
    }
  }
  return row[k];
}

std::vector<Subspace> enumerate_grassmannian(int k, int d, const Field& f) {
  if (!(0 < k && k < d && d <= kMaxDim)) {
    throw Error(ErrorCode::DimensionMismatch, "need 0 < k < d <= 4");
  }
  const Elem q = f.order();
  if (gaussian_binomial(d, k, q) > kMaxGrassmannianSize) {
    throw Error(ErrorCode::ScaleExceeded, "Grassmannian larger than 10^6 subspaces");
  }
  std::vector<Subspace> out;
  std::vector<int> pivots(k);
  for (int i = 0; i < k; ++i) pivots[i] = i;
  while (true) {
    // Free slots: row i, column j > pivots[i] with j not a pivot column.
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < k; ++i) {
      for (int j = pivots[i] + 1; j < d; ++j) {
        if (std::find(pivots.begin(), pivots.end(), j) == pivots.end()) slots.emplace_back(i, j);
      }
    }
    std::vector<Elem> vals(slots.size(), 0);
    while (true) {
      Subspace s;
      s.k = static_cast<std::uint8_t>(k);
      s.d = static_cast<std::uint8_t>(d);
      for (int i = 0; i < k; ++i) s.rows[i][pivots[i]] = 1;
      for (std::size_t t = 0; t < slots.size(); ++t) s.rows[slots[t].first][slots[t].second] = vals[t];
      out.push_back(s);
      std::size_t t = 0;
      while (t < vals.size() && ++vals[t] == q) vals[t++] = 0;
      if (t == vals.size()) break;
    }
    int i = k - 1;
    while (i >= 0 && pivots[i] == d - k + i) --i;
    if (i < 0) break;
    ++pivots[i];
    for (int j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const Subspace& v) {
  std::string s = "span{";
  for (int i = 0; i < v.k; ++i) {
    if (i) s += ",";
    s += "(";
    for (int j = 0; j < v.d; ++j) {
      if (j) s += " ";
      s += std::to_string(v.rows[i][j]);
    }
    s += ")";
  }
  return s + "}";
}

std::string to_string(const ProjLine& ln) {
  return "[" + std::to_string(ln.a) + ":" + std::to_string(ln.b) + ":" + std::to_string(ln.c) + "]";
}

std::string to_string(const Point& pt) {
  std::string s = "(";
  for (int j = 0; j < pt.dim; ++j) {
    if (j) s += ",";
    s += std::to_string(pt.coords[j]);
  }
  return s + ")";
}

}  // namespace fplab
