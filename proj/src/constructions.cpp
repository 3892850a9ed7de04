#include "fplab/constructions.hpp"

#include <algorithm>
#include <cmath>

#include "fplab/random.hpp"

namespace fplab {

PointSet subplane_set(std::uint64_t p) {
  const Field f = Field::quadratic(p);
  std::vector<Point> pts;
  pts.reserve(p * p);
  for (Elem a = 0; a < p; ++a) {
    for (Elem b = 0; b < p; ++b) pts.push_back(make_point({f.make(a, 0), f.make(b, 0)}));
  }
  return PointSet(f, 2, std::move(pts), "subplane(p=" + std::to_string(p) + ")");
}

PointSet grid_set(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
  std::vector<Point> pts;
  pts.reserve(a.size() * b.size());
  for (const Elem x : a) {
    for (const Elem y : b) pts.push_back(make_point({x, y}));
  }
  return PointSet(f, 2, std::move(pts), "grid");
}

PointSet horizontal_line_set(const Field& f) {
  std::vector<Point> pts;
  for (Elem x = 0; x < f.order(); ++x) pts.push_back(make_point({x, 0}));
  return PointSet(f, 2, std::move(pts), "horizontal-line");
}

PencilSet pencil_point_set(const Field& f, const std::map<Elem, ElemSet>& rows) {
  std::vector<Point> pts;
  PencilSet out{PointSet(f, 2), {}, 0};
  for (const auto& [y, xs] : rows) {
    if (xs.empty()) throw Error(ErrorCode::InvalidArgument, "row y = " + std::to_string(y) + " is empty");
    out.rows.push_back(y);
    out.max_row = std::max(out.max_row, make_elem_set(xs).size());
    for (const Elem x : xs) pts.push_back(make_point({x, y}));
  }
  out.points = PointSet(f, 2, std::move(pts), "pencil");
  return out;
}

LineSet line_family_from_grid(const Field& f, std::span<const Elem> c) {
  if (c.empty()) throw Error(ErrorCode::InvalidArgument, "C must be nonempty");
  std::vector<ProjLine> lines;
  for (const Elem slope : c) {
    for (const Elem intercept : c) lines.push_back(line_from_slope(f, slope, intercept));
  }
  return LineSet(f, std::move(lines));
}

namespace {

std::uint64_t space_size(const Field& f, int d) {
  std::uint64_t n = 1;
  for (int i = 0; i < d; ++i) {
    if (n > UINT64_MAX / f.order()) return UINT64_MAX;
    n *= f.order();
  }
  return n;
}

}  // namespace

PointSet random_point_set(const Field& f, int d, std::uint64_t n, std::uint64_t seed) {
  if (d < 1 || d > kMaxDim) throw Error(ErrorCode::DimensionMismatch, "dimension must be in [1, 4]");
  Rng rng(seed);
  const auto idx = sample_without_replacement(rng, space_size(f, d), n);
  std::vector<Point> pts;
  pts.reserve(idx.size());
  for (auto code : idx) {
    Point pt;
    pt.dim = static_cast<std::uint8_t>(d);
    for (int j = 0; j < d; ++j) {
      pt.coords[j] = static_cast<Elem>(code % f.order());
      code /= f.order();
    }
    pts.push_back(pt);
  }
  return PointSet(f, d, std::move(pts), "random(n=" + std::to_string(n) + ",seed=" + std::to_string(seed) + ")");
}

ElemSet random_subset(const Field& f, std::uint64_t n, std::uint64_t seed) {
  Rng rng(seed);
  const auto idx = sample_without_replacement(rng, f.order(), n);
  return ElemSet(idx.begin(), idx.end());
}

ElemSet random_nonzero_subset(const Field& f, std::uint64_t n, std::uint64_t seed) {
  Rng rng(seed);
  const auto idx = sample_without_replacement(rng, f.order() - 1, n);
  ElemSet out;
  for (const auto i : idx) out.push_back(static_cast<Elem>(i + 1));
  return out;
}

LineSet random_lines(const Field& f, std::uint64_t n, std::uint64_t seed) {
  const std::uint64_t q = f.order();
  Rng rng(seed);
  const auto idx = sample_without_replacement(rng, q * q + q, n);
  std::vector<ProjLine> lines;
  lines.reserve(idx.size());
  // Index i < q^2 is [1 : b : c] with (b, c) = (i / q, i % q); the rest are [0 : 1 : c].
  for (const auto i : idx) {
    if (i < q * q) {
      lines.push_back({1, static_cast<Elem>(i / q), static_cast<Elem>(i % q)});
    } else {
      lines.push_back({0, 1, static_cast<Elem>(i - q * q)});
    }
  }
  return LineSet(f, std::move(lines));
}

ElemSet interval_set(const Field& f, std::uint64_t n) {
  ElemSet out;
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(f.from_int(static_cast<std::int64_t>(i)));
  return make_elem_set(std::move(out));
}

const std::vector<FamilyInfo>& point_families() {
  static const std::vector<FamilyInfo> families = {
      {"empty", "the empty set in F_p^2", true},
      {"horizontal-line", "all p points (x, 0)", true},
      {"subplane", "F_p^2 inside F_{p^2}^2 (field order p^2)", true},
      {"random", "uniform random set, |E| = n or round(p^a) (params n, a)", true},
      {"grid", "A x B with |A| = A, |B| = B (params A, B, kind=interval|random)", true},
      {"pencil", "union of X_y x {y} over |Y| random rows, |X_y| = X (params Y, X)", true},
      // Extremal set attaining p^{2s-a}; no explicit construction is available yet.
      {"bright-gan", "extremal exceptional-set construction (not available)", false},
  };
  return families;
}

double param_double(const FamilyParams& params, const std::string& key, double fallback) {
  const auto it = params.find(key);
  if (it == params.end()) return fallback;
  try {
    std::size_t used = 0;
    const double v = std::stod(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidArgument, "parameter " + key + "=" + it->second + " is not a number");
  }
}

std::uint64_t param_uint(const FamilyParams& params, const std::string& key, std::uint64_t fallback) {
  const auto it = params.find(key);
  if (it == params.end()) return fallback;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(it->second, &used);
    if (used != it->second.size() || it->second.front() == '-') throw std::invalid_argument(key);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidArgument, "parameter " + key + "=" + it->second + " is not a count");
  }
}

std::string param_string(const FamilyParams& params, const std::string& key, const std::string& fallback) {
  const auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

PointSet make_family(std::string_view name, std::uint64_t p, const FamilyParams& params, std::uint64_t seed) {
  const auto& families = point_families();
  const auto it = std::find_if(families.begin(), families.end(), [&](const FamilyInfo& fi) { return fi.name == name; });
  if (it == families.end()) throw Error(ErrorCode::InvalidArgument, "unknown family '" + std::string(name) + "'");
  if (!it->implemented) {
    throw Error(ErrorCode::InvalidArgument, "family '" + std::string(name) + "' has no construction");
  }
  if (name == "subplane") return subplane_set(p);

  const Field f = Field::prime(p);
  const auto pd = static_cast<double>(p);
  PointSet out(f, 2);
  if (name == "empty") {
    out = PointSet(f, 2, {}, "empty");
  } else if (name == "horizontal-line") {
    out = horizontal_line_set(f);
  } else if (name == "random") {
    const auto n = params.count("n") ? param_uint(params, "n", 0)
                                     : static_cast<std::uint64_t>(std::llround(std::pow(pd, param_double(params, "a", 1.0))));
    out = random_point_set(f, 2, n, seed);
  } else if (name == "grid") {
    const auto na = param_uint(params, "A", static_cast<std::uint64_t>(std::ceil(std::sqrt(pd))));
    const auto nb = param_uint(params, "B", na);
    const auto kind = param_string(params, "kind", "interval");
    ElemSet a, b;
    if (kind == "interval") {
      a = interval_set(f, na);
      b = interval_set(f, nb);
    } else if (kind == "random") {
      a = random_subset(f, na, derive_seed(seed, {1}));
      b = random_subset(f, nb, derive_seed(seed, {2}));
    } else {
      throw Error(ErrorCode::InvalidArgument, "grid kind must be interval or random");
    }
    out = grid_set(f, a, b);
  } else if (name == "pencil") {
    const auto ny = param_uint(params, "Y", static_cast<std::uint64_t>(std::ceil(std::sqrt(pd))));
    const auto nx = param_uint(params, "X", static_cast<std::uint64_t>(std::ceil(std::sqrt(pd))));
    const auto ys = random_subset(f, ny, derive_seed(seed, {1}));
    std::map<Elem, ElemSet> rows;
    for (const Elem y : ys) rows[y] = random_subset(f, nx, derive_seed(seed, {2, y}));
    out = pencil_point_set(f, rows).points;
  }
  std::string tag(name);
  for (const auto& [k, v] : params) tag += "," + k + "=" + v;
  out.set_provenance(tag + ",p=" + std::to_string(p) + ",seed=" + std::to_string(seed));
  return out;
}

}  // namespace fplab
