#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fplab/point_set.hpp"

namespace fplab {

/// The copy of F_p^2 inside F_{p^2}^2: {(a, b) : a, b in F_p}.
PointSet subplane_set(std::uint64_t p);

PointSet grid_set(const Field& f, std::span<const Elem> a, std::span<const Elem> b);

/// The full horizontal line {(x, 0)}.
PointSet horizontal_line_set(const Field& f);

struct PencilSet {
  PointSet points;
  /// The occupied rows Y.
  ElemSet rows;
  /// X = max over rows of |X_y|.
  std::size_t max_row = 0;
};

/// Z = union over y of X_y x {y}. Throws InvalidArgument on an empty X_y.
PencilSet pencil_point_set(const Field& f, const std::map<Elem, ElemSet>& rows);

/// Lines y = a x + b with a, b in C. Throws InvalidArgument on empty C.
LineSet line_family_from_grid(const Field& f, std::span<const Elem> c);

/// Uniform n-subset of F_q^d, deterministic per seed. Throws TooLarge if n > q^d.
PointSet random_point_set(const Field& f, int d, std::uint64_t n, std::uint64_t seed);
/// Uniform n-subset of F_q.
ElemSet random_subset(const Field& f, std::uint64_t n, std::uint64_t seed);
/// Uniform n-subset of F_q \ {0}.
ElemSet random_nonzero_subset(const Field& f, std::uint64_t n, std::uint64_t seed);
/// Uniform n-subset of the q^2 + q affine lines.
LineSet random_lines(const Field& f, std::uint64_t n, std::uint64_t seed);

/// {0, 1, ..., n - 1} reduced into F_q.
ElemSet interval_set(const Field& f, std::uint64_t n);

using FamilyParams = std::map<std::string, std::string>;

struct FamilyInfo {
  std::string name;
  std::string summary;
  bool implemented = true;
};

/// Named point-set families usable by the experiment runner.
const std::vector<FamilyInfo>& point_families();

/// Builds family `name` for prime p. Throws InvalidArgument for unknown or
/// unimplemented families and malformed parameters.
PointSet make_family(std::string_view name, std::uint64_t p, const FamilyParams& params, std::uint64_t seed);

double param_double(const FamilyParams& params, const std::string& key, double fallback);
std::uint64_t param_uint(const FamilyParams& params, const std::string& key, std::uint64_t fallback);
std::string param_string(const FamilyParams& params, const std::string& key, const std::string& fallback);

}  // namespace fplab
