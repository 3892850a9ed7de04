#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fplab {

/// Catalog of bound expressions. The string names are part of the CSV schema.
enum class TheoremId {
  Chen1,        // CHEN_1
  Chen2,        // CHEN_2
  BgM,          // BG_M
  BgLarge,      // BG_LARGE
  TwoDimQ,      // TWO_DIM_Q
  Main,         // MAIN
  HalfProduct,  // HALF_PRODUCT
  Rich,         // RICH
  AA,           // AA
  SDZ,          // SDZ
  GenProj,      // GEN_PROJ
  CQSE,         // CQSE
  CPSE,         // CPSE
  RudProj,      // RUD_PROJ
  Lm28Rhs,      // LM28_RHS
  Bkt6Rhs,      // BKT6_RHS
  SiamRhs,      // SIAM_RHS
  CsProp,       // CS_PROP
  DualCor,      // DUAL_COR
  Thm24NM,      // THM24_NM
  RLower,       // R_LOWER
};

std::string_view theorem_name(TheoremId id);
std::optional<TheoremId> parse_theorem(std::string_view name);
const std::vector<TheoremId>& all_theorems();

/// Upper: observed should not exceed rhs (up to constants). Lower: observed
/// should be at least rhs. Value: the record only carries a derived quantity.
enum class BoundKind { Upper, Lower, Value };

/// Exact statements carry explicit constants and must never be violated;
/// asymptotic ones hide a constant (<<), subpolynomial ones a q^eps factor.
enum class Exactness { Exact, Asymptotic, Subpolynomial };

BoundKind bound_kind(TheoremId id);
Exactness exactness(TheoremId id);

/// Parameter names: p or q (field order), a, s, k, d, tau, and the sizes
/// A, B, C, L, Y, X, Z, E, M, N, EC (= E+(C)), K (defaults to 1).
using BoundParams = std::map<std::string, double>;

inline constexpr double kDefaultAlertLevel = 10.0;

struct BoundRecord {
  TheoremId id = TheoremId::Main;
  BoundParams params;
  double rhs = 0.0;
  bool hypotheses_ok = false;
  /// Some term carries a negative exponent of the field order (value < 1).
  bool negative_exponent = false;
  /// The record depends on the unknown constant K, evaluated at the given K.
  bool constant_free = false;

  std::optional<std::uint64_t> observed;
  std::optional<double> ratio;
  /// compare() was given rhs <= 0, so no ratio exists.
  bool ratio_undefined = false;
  /// For subpolynomial entries: the exponent eps with q^eps closing the gap.
  std::optional<double> epsilon_needed;

  BoundKind kind() const { return bound_kind(id); }
  Exactness exactness() const { return fplab::exactness(id); }
  /// Ratio outside [1/level, level] in the direction that matters.
  bool alert(double level = kDefaultAlertLevel) const;
  /// Only meaningful for exact entries: the observed value breaks the bound.
  bool violated() const;
};

/// Evaluates a catalog entry. Throws MissingParam when a referenced
/// parameter is absent.
BoundRecord eval_bound(TheoremId id, const BoundParams& params);

/// Attaches an observation and its ratio to a record.
BoundRecord compare(std::uint64_t observed, BoundRecord record);

/// Exponents of p in the three terms p^{5s/2-a}, p^{6s-3a}, p^s.
std::array<double, 3> main_exponents(double a, double s);
/// Index of the smallest exponent; ties resolve to the lower index.
int main_argmin(double a, double s);

}  // namespace fplab
