#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "fplab/experiments.hpp"
#include "fplab/oracle/golden.hpp"
#include "gen.hpp"

using namespace fplab;

namespace {

std::size_t col(const CsvTable& t, const std::string& name) {
  const auto it = std::find(t.columns.begin(), t.columns.end(), name);
  REQUIRE(it != t.columns.end());
  return static_cast<std::size_t>(it - t.columns.begin());
}

SweepConfig ts_config(std::uint64_t p, const std::string& family, std::vector<std::uint64_t> t) {
  SweepConfig c;
  c.command = "sweep-ts";
  c.primes = {p};
  c.family = family;
  c.thresholds = std::move(t);
  return c;
}

}  // namespace

TEST_CASE("csv formatting") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_field("two\nlines") == "\"two\nlines\"");
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(3) == "3");
  CHECK(format_double(std::nan("")) == kNA);
  CHECK(format_optional(std::nullopt) == kNA);

  SweepConfig c = ts_config(5, "grid", {2});
  c.params = {{"kind", "interval"}};
  const auto text = render_csv(c, {{"x", "y"}, {{"1", "a,b"}}});
  CHECK(text.rfind("# fplab ", 0) == 0);
  CHECK(text.find("# prng: ") != std::string::npos);
  CHECK(text.find("# params: kind=interval") != std::string::npos);
  CHECK(text.find("x,y\r\n1,\"a,b\"\r\n") != std::string::npos);
}

TEST_CASE("threshold from exponent") {
  CHECK(threshold_for_exponent(9, 0.5) == 3);
  CHECK(threshold_for_exponent(9, 1.0) == 9);
  CHECK(threshold_for_exponent(7, 0.5) == 3);
  CHECK(threshold_for_exponent(101, 0.0) == 1);
}

TEST_CASE("sweep-ts examples") {
  {
    const auto t = run_sweep_ts(ts_config(5, "horizontal-line", {2}));
    REQUIRE(t.rows.size() == 1);
    CHECK(t.rows[0][col(t, "T_strict")] == "1");
    CHECK(t.rows[0][col(t, "E")] == "5");
    CHECK(t.rows[0][col(t, "a")] == "1");
  }
  {
    const auto t = run_sweep_ts(ts_config(3, "subplane", {9}));
    REQUIRE(t.rows.size() == 1);
    CHECK(t.rows[0][col(t, "q")] == "9");
    const auto stored = oracle::read_golden_file(FPLAB_GOLDEN_PATH);
    CHECK(t.rows[0][col(t, "T_strict")] == std::to_string(oracle::golden_value(stored, "subplane.p3.exceptional_count")));
  }
  for (const std::uint64_t p : {3, 5, 7}) {
    const auto t = run_sweep_ts(ts_config(p, "empty", {1, 4}));
    REQUIRE(t.rows.size() == 2);
    for (const auto& row : t.rows) {
      CHECK(row[col(t, "T_strict")] == std::to_string(p + 1));
      CHECK(row[col(t, "rhs_MAIN")] == kNA);
    }
  }
  SweepConfig bad = ts_config(5, "random", {});
  CHECK_ERROR_CODE(run_sweep_ts(bad), ErrorCode::InvalidArgument);
}

TEST_CASE("incidence examples") {
  SweepConfig c;
  c.command = "incidence";
  c.primes = {3};
  c.family = "full";
  c.backend = "both";
  auto t = run_incidence(c);
  REQUIRE(t.rows.size() == 1);
  CHECK(t.rows[0][col(t, "I")] == "36");
  CHECK(t.rows[0][col(t, "I_check")] == "36");
  CHECK(t.rows[0][col(t, "Y")] == "3");
  CHECK(t.rows[0][col(t, "X")] == "3");
  CHECK(t.rows[0][col(t, "L")] == "12");
  CHECK(t.rows[0][col(t, "rhs_HALF_PRODUCT")] != kNA);

  c.primes = {5};
  c.family = "grid";
  c.params = {{"A", "2"}, {"B", "2"}, {"C", "2"}};
  t = run_incidence(c);
  CHECK(t.rows[0][col(t, "EC")] == "6");
  CHECK(t.rows[0][col(t, "L")] == "4");
  CHECK(t.rows[0][col(t, "rhs_AA")] != kNA);

  c.family = "pencil";
  c.params = {{"L", "0"}};
  t = run_incidence(c);
  CHECK(t.rows[0][col(t, "I")] == "0");
  CHECK(std::stod(t.rows[0][col(t, "rhs_HALF_PRODUCT")]) >= 0);

  c.family = "mystery";
  CHECK_ERROR_CODE(run_incidence(c), ErrorCode::InvalidArgument);
}

TEST_CASE("sweeps are byte-identical across thread counts") {
  std::vector<SweepConfig> configs;
  SweepConfig ts = ts_config(11, "random", {});
  ts.primes = {11, 13};
  ts.params = {{"a", "0.9"}};
  ts.s_grid = {0.3, 0.6, 0.9};
  ts.trials = 6;
  ts.seed = 5;
  configs.push_back(ts);
  SweepConfig inc;
  inc.command = "incidence";
  inc.primes = {7, 11};
  inc.family = "pencil";
  inc.trials = 5;
  configs.push_back(inc);
  SweepConfig en = inc;
  en.command = "energy";
  en.family.clear();
  configs.push_back(en);
  SweepConfig pr;
  pr.command = "prune";
  pr.trials = 12;
  configs.push_back(pr);
  SweepConfig du = inc;
  du.command = "dual-check";
  configs.push_back(du);

  for (auto c : configs) {
    CAPTURE(c.command);
    auto run = [&](unsigned threads) {
      c.threads = threads;
      if (c.command == "sweep-ts") return render_csv(c, run_sweep_ts(c));
      if (c.command == "incidence") return render_csv(c, run_incidence(c));
      if (c.command == "energy") return render_csv(c, run_energy(c));
      if (c.command == "prune") return render_csv(c, run_prune(c));
      return render_csv(c, run_dual_check(c));
    };
    const auto one = run(1);
    CHECK(one == run(3));
    CHECK(one == run(8));
  }
}

TEST_CASE("verify_exact reports clean runs") {
  SweepConfig c;
  c.primes = {5, 7};
  c.trials = 20;
  c.seed = 1;
  c.threads = 2;
  for (const auto& r : verify_exact(c)) {
    CAPTURE(r.name);
    CHECK(r.ok());
    CHECK(r.instances > 0);
  }
}

TEST_CASE("verify_asymptotic") {
  SweepConfig c;
  c.primes = {31};
  CHECK(asymptotic_supported(TheoremId::Main));
  CHECK_FALSE(asymptotic_supported(TheoremId::CsProp));
  CHECK_ERROR_CODE(verify_asymptotic(c, TheoremId::CsProp), ErrorCode::InvalidArgument);
  for (const auto id : {TheoremId::Main, TheoremId::TwoDimQ, TheoremId::HalfProduct, TheoremId::AA, TheoremId::SDZ}) {
    const auto t = verify_asymptotic(c, id);
    CHECK_FALSE(t.rows.empty());
    for (const auto& row : t.rows) CHECK(row[0] == theorem_name(id));
  }
}

TEST_CASE("golden file round trip and diff") {
  const auto computed = oracle::compute_goldens();
  CHECK(std::is_sorted(computed.begin(), computed.end(),
                       [](const auto& a, const auto& b) { return a.name < b.name; }));
  CHECK(oracle::diff_goldens(computed, oracle::read_golden_file(FPLAB_GOLDEN_PATH)).empty());

  const auto path = (std::filesystem::temp_directory_path() / "fplab_golden_test.json").string();
  oracle::write_golden_file(path, computed);
  auto back = oracle::read_golden_file(path);
  CHECK(oracle::diff_goldens(computed, back).empty());
  back[0].value += 1;
  const auto diffs = oracle::diff_goldens(computed, back);
  REQUIRE(diffs.size() == 1);
  CHECK(diffs[0].find(computed[0].name) != std::string::npos);
  back.pop_back();
  CHECK(oracle::diff_goldens(computed, back).size() == 2);
  std::remove(path.c_str());
  CHECK_ERROR_CODE(oracle::read_golden_file(path), ErrorCode::InvalidArgument);
  CHECK_ERROR_CODE(oracle::golden_value(computed, "missing"), ErrorCode::InvalidArgument);
  CHECK(oracle::golden_value(computed, "energy.p5.eight_tuple.C01") == 152);
  CHECK(oracle::golden_value(computed, "energy.p5.dilate_sum.C01.Yall") == 20);
}
