#include "fplab/oracle/golden.hpp"

#include <algorithm>
#include <fstream>
#include <map>

#include <json.hpp>

#include "fplab/constructions.hpp"
#include "fplab/error.hpp"
#include "fplab/oracle/brute_force.hpp"
#include "fplab/random.hpp"
#include "fplab/version.hpp"

namespace fplab::oracle {

namespace {

constexpr int kGoldenFormat = 1;

GoldenEntry entry(std::string name, std::uint64_t value, std::string oracle, std::string params) {
  return {std::move(name), static_cast<std::int64_t>(value), std::move(oracle), std::move(params)};
}

}  // namespace

std::vector<GoldenEntry> compute_goldens() {
  std::vector<GoldenEntry> out;

  for (const std::uint64_t p : {3ULL, 5ULL}) {
    const auto e = subplane_set(p);
    const std::uint64_t q = p * p;
    const auto scan = exceptional_directions(e, q, true);
    const std::string tag = "subplane.p" + std::to_string(p);
    const std::string params = "E = F_" + std::to_string(p) + "^2 in F_" + std::to_string(q) + "^2, t = " +
                               std::to_string(q) + ", strict";
    out.push_back(entry(tag + ".exceptional_count", scan.count, "exhaustive direction scan over coset enumeration", params));
    out.push_back(entry(tag + ".exceptional_min_size", scan.min_size, "exhaustive direction scan over coset enumeration", params));
    out.push_back(entry(tag + ".exceptional_max_size", scan.max_size, "exhaustive direction scan over coset enumeration", params));
  }
  {
    const Field f5 = Field::prime(5);
    const auto line = horizontal_line_set(f5);
    out.push_back(entry("projection.horizontal_line.p5.t2.strict_count", exceptional_directions(line, 2, true).count,
                        "exhaustive direction scan over coset enumeration", "E = F_5 x {0}, t = 2"));
    out.push_back(entry("geometry.p5.self_orthogonal_lines", self_orthogonal_directions(f5),
                        "exhaustive direction scan", "F_5^2"));
  }
  for (const std::uint64_t q : {2ULL, 3ULL, 5ULL}) {
    out.push_back(entry("geometry.q" + std::to_string(q) + ".lines_spanned_by_pairs",
                        lines_spanned_by_pairs(Field::prime(q)), "point-pair span enumeration",
                        "F_" + std::to_string(q) + "^2"));
  }
  out.push_back(entry("field.q9.max_multiplicative_order", max_multiplicative_order(Field::quadratic(3)),
                      "repeated multiplication", "F_9 = F_3[w]/(w^2 - 2)"));
  {
    const Field f5 = Field::prime(5);
    const std::vector<Elem> c01{0, 1};
    const std::vector<Elem> all_nonzero{1, 2, 3, 4};
    out.push_back(entry("energy.p5.additive.C01", additive_energy(f5, c01), "quartic tuple loop", "C = {0,1} in F_5"));
    out.push_back(entry("energy.p5.eight_tuple.C01", eight_tuple_count(f5, c01), "octic tuple loop", "C = {0,1} in F_5"));
    out.push_back(entry("energy.p5.dilate_sum.C01.Yall", dilate_energy_sum(f5, c01, all_nonzero), "quartic tuple loop per dilate",
                        "C = {0,1}, Y = F_5 \\ {0}"));
    const Field f101 = Field::prime(101);
    const std::vector<Elem> c0123{0, 1, 2, 3};
    out.push_back(entry("energy.p101.eight_tuple.C0123", eight_tuple_count(f101, c0123), "octic tuple loop",
                        "C = {0,1,2,3} in F_101"));
  }
  for (const std::uint64_t q : {2ULL, 3ULL}) {
    const Field f = Field::prime(q);
    const auto plane = random_point_set(f, 2, q * q, 0);
    std::vector<ProjLine> lines;
    for (Elem b = 0; b < q; ++b)
      for (Elem c = 0; c < q; ++c) lines.push_back({1, b, c});
    for (Elem c = 0; c < q; ++c) lines.push_back({0, 1, c});
    out.push_back(entry("incidence.q" + std::to_string(q) + ".full_plane_all_affine_lines", incidences(plane, lines),
                        "pairwise evaluation", "all of F_" + std::to_string(q) + "^2 against its q^2+q affine lines"));
  }
  {
    const Field f5 = Field::prime(5);
    const PointSet diag(f5, 2, {make_point({0, 0}), make_point({1, 1}), make_point({2, 2})});
    out.push_back(entry("collinear.p5.diagonal3", collinear_triples(diag), "cubic triple loop",
                        "{(0,0),(1,1),(2,2)} in F_5^2"));
  }
  {
    const Field f7 = Field::prime(7);
    const std::uint64_t seed = derive_seed(7, {20});
    const auto e = random_point_set(f7, 2, 20, seed);
    out.push_back(entry("collinear.p7.random_n20", collinear_triples(e), "cubic triple loop",
                        "random_point_set(F_7, d=2, n=20, seed=" + std::to_string(seed) + ")"));
  }

  std::sort(out.begin(), out.end(), [](const GoldenEntry& a, const GoldenEntry& b) { return a.name < b.name; });
  return out;
}

std::vector<GoldenEntry> read_golden_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open golden file " + path);
  nlohmann::json doc;
  try {
    in >> doc;
    if (doc.at("format").get<int>() != kGoldenFormat) throw Error(ErrorCode::InvalidArgument, "unsupported golden format");
    std::vector<GoldenEntry> out;
    for (const auto& e : doc.at("entries")) {
      out.push_back({e.at("name").get<std::string>(), e.at("value").get<std::int64_t>(),
                     e.value("oracle", std::string{}), e.value("params", std::string{})});
    }
    return out;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::InvalidArgument, "malformed golden file " + path + ": " + ex.what());
  }
}

void write_golden_file(const std::string& path, const std::vector<GoldenEntry>& entries) {
  nlohmann::ordered_json doc;
  doc["format"] = kGoldenFormat;
  doc["generator"] = std::string("fplab golden --regen ") + std::string(kVersion);
  doc["prng"] = std::string(kPrngName);
  doc["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    doc["entries"].push_back({{"name", e.name}, {"value", e.value}, {"oracle", e.oracle}, {"params", e.params}});
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write golden file " + path);
  out << doc.dump(2) << "\n";
}

std::vector<std::string> diff_goldens(const std::vector<GoldenEntry>& computed, const std::vector<GoldenEntry>& stored) {
  std::map<std::string, std::int64_t> want, have;
  for (const auto& e : computed) want[e.name] = e.value;
  for (const auto& e : stored) have[e.name] = e.value;
  std::vector<std::string> diffs;
  for (const auto& [name, value] : want) {
    const auto it = have.find(name);
    if (it == have.end()) {
      diffs.push_back(name + ": missing from golden file (computed " + std::to_string(value) + ")");
    } else if (it->second != value) {
      diffs.push_back(name + ": stored " + std::to_string(it->second) + ", computed " + std::to_string(value));
    }
  }
  for (const auto& [name, value] : have) {
    if (!want.count(name)) diffs.push_back(name + ": stored " + std::to_string(value) + " but no oracle produces it");
  }
  return diffs;
}

std::int64_t golden_value(const std::vector<GoldenEntry>& entries, const std::string& name) {
  const auto it = std::find_if(entries.begin(), entries.end(), [&](const GoldenEntry& e) { return e.name == name; });
  if (it == entries.end()) throw Error(ErrorCode::InvalidArgument, "no golden entry " + name);
  return it->value;
}

}  // namespace fplab::oracle
