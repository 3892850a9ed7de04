#include "fplab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <utility>

#include "fplab/error.hpp"

namespace fplab {

namespace {

struct CatalogEntry {
  TheoremId id;
  std::string_view name;
  BoundKind kind;
  Exactness exactness;
};

constexpr std::array<CatalogEntry, 21> kCatalog = {{
    {TheoremId::Chen1, "CHEN_1", BoundKind::Upper, Exactness::Asymptotic},
    {TheoremId::Chen2, "CHEN_2", BoundKind::Upper, Exactness::Asymptotic},
    {TheoremId::BgM, "BG_M", BoundKind::Upper, Exactness::Subpolynomial},
    {TheoremId::BgLarge, "BG_LARGE", BoundKind::Upper, Exactness::Subpolynomial},
    {TheoremId::TwoDimQ, "TWO_DIM_Q", BoundKind::Upper, Exactness::Asymptotic},
    {TheoremId::Main, "MAIN", BoundKind::Upper, Exactness::Asymptotic},
    {TheoremId::HalfProduct, "HALF_PRODUCT", BoundKind::Upper, Exactness::Asymptotic},
    {TheoremId::Rich, "RICH", BoundKind::Lower, Exactness::Asymptotic},
    {TheoremId::AA, "AA", BoundKind::Upper, Exactness::Asymptotic},
    {TheoremId::SDZ, "SDZ", BoundKind::Upper, Exactness::Asymptotic},
    {TheoremId::GenProj, "GEN_PROJ", BoundKind::Lower, Exactness::Asymptotic},
    {TheoremId::CQSE, "CQSE", BoundKind::Lower, Exactness::Asymptotic},
    {TheoremId::CPSE, "CPSE", BoundKind::Lower, Exactness::Subpolynomial},
    {TheoremId::RudProj, "RUD_PROJ", BoundKind::Lower, Exactness::Asymptotic},
    {TheoremId::Lm28Rhs, "LM28_RHS", BoundKind::Upper, Exactness::Asymptotic},
    {TheoremId::Bkt6Rhs, "BKT6_RHS", BoundKind::Upper, Exactness::Exact},
    {TheoremId::SiamRhs, "SIAM_RHS", BoundKind::Upper, Exactness::Subpolynomial},
    {TheoremId::CsProp, "CS_PROP", BoundKind::Upper, Exactness::Exact},
    {TheoremId::DualCor, "DUAL_COR", BoundKind::Upper, Exactness::Asymptotic},
    {TheoremId::Thm24NM, "THM24_NM", BoundKind::Value, Exactness::Asymptotic},
    {TheoremId::RLower, "R_LOWER", BoundKind::Lower, Exactness::Exact},
}};

const CatalogEntry& entry(TheoremId id) {
  return *std::find_if(kCatalog.begin(), kCatalog.end(), [&](const CatalogEntry& e) { return e.id == id; });
}

class ParamReader {
 public:
  ParamReader(TheoremId id, const BoundParams& params) : id_(id), params_(params) {}

  double get(const std::string& key) const {
    const auto it = params_.find(key);
    if (it == params_.end()) {
      throw Error(ErrorCode::MissingParam, std::string(theorem_name(id_)) + " needs parameter '" + key + "'");
    }
    return it->second;
  }
  double get_or(const std::string& key, double fallback) const {
    const auto it = params_.find(key);
    return it == params_.end() ? fallback : it->second;
  }
  bool has(const std::string& key) const { return params_.count(key) != 0; }
  /// The field order, accepted under either name.
  double order() const {
    if (has("p")) return get("p");
    if (has("q")) return get("q");
    throw Error(ErrorCode::MissingParam, std::string(theorem_name(id_)) + " needs parameter 'p' (or 'q')");
  }

 private:
  TheoremId id_;
  const BoundParams& params_;
};

/// prod base_i^exp_i in log space; a zero base with positive exponent gives 0.
double power_term(std::initializer_list<std::pair<double, double>> factors) {
  double log_sum = 0.0;
  for (const auto& [base, e] : factors) {
    if (e == 0.0) continue;
    if (base <= 0.0) {
      if (e > 0.0) return 0.0;
      return std::numeric_limits<double>::infinity();
    }
    log_sum += e * std::log(base);
  }
  return std::exp(log_sum);
}

/// q^e with e given directly.
double order_power(double q, double e) { return std::exp(e * std::log(q)); }

}  // namespace

std::string_view theorem_name(TheoremId id) { return entry(id).name; }

std::optional<TheoremId> parse_theorem(std::string_view name) {
  for (const auto& e : kCatalog) {
    if (e.name == name) return e.id;
  }
  return std::nullopt;
}

const std::vector<TheoremId>& all_theorems() {
  static const std::vector<TheoremId> ids = [] {
    std::vector<TheoremId> v;
    for (const auto& e : kCatalog) v.push_back(e.id);
    return v;
  }();
  return ids;
}

BoundKind bound_kind(TheoremId id) { return entry(id).kind; }
Exactness exactness(TheoremId id) { return entry(id).exactness; }

std::array<double, 3> main_exponents(double a, double s) { return {2.5 * s - a, 6.0 * s - 3.0 * a, s}; }

int main_argmin(double a, double s) {
  const auto e = main_exponents(a, s);
  return static_cast<int>(std::min_element(e.begin(), e.end()) - e.begin());
}

bool BoundRecord::alert(double level) const {
  if (!ratio) return false;
  switch (kind()) {
    case BoundKind::Upper: return *ratio > level;
    case BoundKind::Lower: return *ratio < 1.0 / level;
    case BoundKind::Value: return false;
  }
  return false;
}

bool BoundRecord::violated() const {
  if (exactness() != Exactness::Exact || !observed) return false;
  const auto obs = static_cast<double>(*observed);
  return kind() == BoundKind::Upper ? obs > rhs : obs < rhs;
}

BoundRecord eval_bound(TheoremId id, const BoundParams& params) {
  const ParamReader in(id, params);
  BoundRecord rec;
  rec.id = id;
  rec.params = params;

  switch (id) {
    case TheoremId::Chen1: {
      const double q = in.order(), k = in.get("k"), d = in.get("d"), s = in.get("s"), a = in.get("a");
      const double e = std::max(k * (d - k) + s - a, 0.0);
      rec.rhs = order_power(q, e);
      rec.hypotheses_ok = 0 < s && s < k && k < a;
      break;
    }
    case TheoremId::Chen2: {
      const double q = in.order(), k = in.get("k"), d = in.get("d"), s = in.get("s"), a = in.get("a");
      const double e = k * (d - k) + s - k;
      rec.rhs = order_power(q, e);
      rec.negative_exponent = e < 0;
      rec.hypotheses_ok = 0 < s && s < a && a < k;
      break;
    }
    case TheoremId::BgM: {
      const double q = in.order(), k = in.get("k"), d = in.get("d"), s = in.get("s"), a = in.get("a");
      const double m = in.get("M");
      const double e = d - k + s - a;
      rec.rhs = m * order_power(q, e);
      rec.negative_exponent = e < 0;
      rec.hypotheses_ok = 0 < a && a < d && 0 < s && s < a;
      break;
    }
    case TheoremId::BgLarge: {
      const double q = in.order(), k = in.get("k"), d = in.get("d"), s = in.get("s"), a = in.get("a");
      const double e = std::max(k * (d - k) + 2 * (s - a), (k - 1) * (d - k));
      rec.rhs = order_power(q, e);
      rec.negative_exponent = e < 0;
      rec.hypotheses_ok = 0 < s && s < a && s < (a + 2 * k - d) / 2;
      break;
    }
    case TheoremId::TwoDimQ: {
      const double q = in.order(), s = in.get("s"), a = in.get("a");
      rec.rhs = std::min(order_power(q, 1 + s - a), order_power(q, s));
      rec.negative_exponent = 1 + s - a < 0;
      rec.hypotheses_ok = 0 < a && a <= 2 && a / 2 <= s && s < std::min(1.0, a);
      break;
    }
    case TheoremId::Main: {
      const double p = in.order(), s = in.get("s"), a = in.get("a");
      const auto e = main_exponents(a, s);
      rec.rhs = order_power(p, *std::min_element(e.begin(), e.end()));
      rec.negative_exponent = std::any_of(e.begin(), e.end(), [](double x) { return x < 0; });
      rec.hypotheses_ok = a / 2 <= s && s <= a && a <= 1;
      break;
    }
    case TheoremId::HalfProduct: {
      const double p = in.order(), y = in.get("Y"), x = in.get("X"), l = in.get("L"), z = in.get("Z");
      const double inner = std::min(power_term({{y, 0.9}, {x, 0.6}, {l, 0.7}}),
                                    power_term({{y, 7.0 / 9}, {x, 5.0 / 9}, {l, 7.0 / 9}}));
      rec.rhs = inner + power_term({{y, 1.0}, {x, 0.5}, {l, 0.5}}) + power_term({{z, 2.0 / 3}, {l, 2.0 / 3}}) + l + z;
      rec.hypotheses_ok = x >= 1 && y * l <= p * p;
      break;
    }
    case TheoremId::Rich: {
      const double q = in.order(), s = in.get("s"), tau = in.get("tau");
      rec.rhs = order_power(q, 2 * s + tau / 7);
      rec.hypotheses_ok = 0 < s && s < 1 && tau > 0;
      break;
    }
    case TheoremId::AA: {
      const double p = in.order(), a = in.get("A"), b = in.get("B"), l = in.get("L"), ec = in.get("EC");
      const double c = in.get("C");
      rec.rhs = power_term({{a, 7.0 / 8}, {b, 0.5}, {l, 3.0 / 8}, {ec, 0.25}});
      rec.hypotheses_ok = a <= b && c * b * b <= ec && a * c * c <= p * p;
      break;
    }
    case TheoremId::SDZ: {
      const double p = in.order(), a = in.get("A"), b = in.get("B"), l = in.get("L");
      rec.rhs = power_term({{a, 0.75}, {b, 0.5}, {l, 0.75}}) + a * b + l;
      rec.hypotheses_ok = a <= b && a * l <= p * p;
      break;
    }
    case TheoremId::GenProj: {
      const double q = in.order(), y = in.get("Y"), e = in.get("E");
      rec.rhs = std::min({power_term({{y, 0.5}, {q, 0.5}}), power_term({{y, 0.5}, {e, 1.0}, {q, -1.0}}), e});
      rec.hypotheses_ok = y >= 1;
      break;
    }
    case TheoremId::CQSE: {
      const double q = in.order(), y = in.get("Y"), e = in.get("E");
      rec.rhs = std::min(q, y * e / q);
      rec.hypotheses_ok = y >= 1;
      break;
    }
    case TheoremId::CPSE: {
      const double p = in.order(), y = in.get("Y"), c = in.get("C");
      const double e = in.get_or("E", c * c);
      rec.rhs = std::min(power_term({{y, 0.5}, {c, 10.0 / 13}}), e);
      rec.hypotheses_ok = y >= 1 && c * c <= p;
      break;
    }
    case TheoremId::RudProj: {
      const double p = in.order(), y = in.get("Y"), c = in.get("C"), ec = in.get("EC");
      const double e = in.get_or("E", c * c);
      rec.rhs = std::min(power_term({{y, 0.25}, {c, 2.5}, {ec, -0.5}}), e);
      rec.hypotheses_ok = y >= 1 && y <= c * c && c * c * y <= p * p;
      break;
    }
    case TheoremId::Lm28Rhs: {
      const double p = in.order(), y = in.get("Y"), c = in.get("C"), ec = in.get("EC");
      const double k = in.get_or("K", 1.0);
      rec.rhs = k * power_term({{ec, 0.5}, {c, 1.5}, {y, 0.75}});
      rec.constant_free = !in.has("K");
      rec.hypotheses_ok = y <= c * c && c * c * y <= p * p;
      break;
    }
    case TheoremId::Bkt6Rhs: {
      const double q = in.order(), c = in.get("C"), y = in.get("Y");
      rec.rhs = c * c * c * c * y / q + q * c * c;
      rec.hypotheses_ok = true;
      break;
    }
    case TheoremId::SiamRhs: {
      const double p = in.order(), c = in.get("C");
      rec.rhs = power_term({{c, 84.0 / 13}});
      rec.hypotheses_ok = c * c <= p;
      break;
    }
    case TheoremId::CsProp: {
      const double p = in.order(), s = in.get("s"), e = in.get("E");
      rec.rhs = 2 * order_power(p, s);
      rec.hypotheses_ok = rec.rhs <= e;
      break;
    }
    case TheoremId::DualCor: {
      const double p = in.order(), s = in.get("s"), e = in.get("E");
      rec.rhs = std::min(order_power(p, 2.5 * s) / e, order_power(p, 6 * s) / (e * e * e));
      const double ps = order_power(p, s);
      rec.hypotheses_ok = ps <= e && e * ps <= p * p;
      break;
    }
    case TheoremId::Thm24NM: {
      const double p = in.order(), y = in.get("Y"), c = in.get("C"), ec = in.get("EC"), n = in.get("N");
      const double k = in.get_or("K", 1.0);
      // M = |Y|^{1/4} |C|^{5/2} / (2 K N^2 E+(C)^{1/2})
      rec.rhs = power_term({{y, 0.25}, {c, 2.5}, {ec, -0.5}, {n, -2.0}}) / (2 * k);
      rec.constant_free = !in.has("K");
      rec.hypotheses_ok = n > 0 && y <= c * c && c * c * y <= p * p;
      break;
    }
    case TheoremId::RLower: {
      const double y = in.get("Y"), e = in.get("E"), m = in.get("M");
      rec.rhs = m > 0 ? y * e * e / m : 0.0;
      rec.hypotheses_ok = m >= 1;
      break;
    }
  }
  return rec;
}

BoundRecord compare(std::uint64_t observed, BoundRecord record) {
  record.observed = observed;
  record.ratio.reset();
  record.epsilon_needed.reset();
  record.ratio_undefined = !(record.rhs > 0.0) || !std::isfinite(record.rhs);
  if (record.ratio_undefined) return record;
  record.ratio = static_cast<double>(observed) / record.rhs;
  if (record.exactness() == Exactness::Subpolynomial && observed > 0) {
    const double q = record.params.count("p") ? record.params.at("p") : record.params.count("q") ? record.params.at("q") : 0.0;
    if (q > 1) {
      const double gap = record.kind() == BoundKind::Lower ? -std::log(*record.ratio) : std::log(*record.ratio);
      record.epsilon_needed = std::max(0.0, gap / std::log(q));
    }
  }
  return record;
}

}  // namespace fplab
