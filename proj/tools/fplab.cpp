// Experiment runner. Exit codes: 0 ok, 1 violation or golden diff, 2 usage.
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fplab/bounds.hpp"
#include "fplab/error.hpp"
#include "fplab/experiments.hpp"
#include "fplab/oracle/golden.hpp"

#ifndef FPLAB_GOLDEN_PATH
#define FPLAB_GOLDEN_PATH "data/golden.json"
#endif

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::vector<std::uint64_t> primes;
  std::string family;
  std::vector<std::string> params;
  std::vector<std::uint64_t> thresholds;
  std::vector<double> s_grid;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  std::string backend = "indexed";
  std::string out;
  std::string theorem;
  std::string suite;
  bool regen = false;
  std::string golden_file = FPLAB_GOLDEN_PATH;
};

void add_common(CLI::App* cmd, Options& o, std::size_t default_trials) {
  o.trials = default_trials;
  cmd->add_option("--p,--q", o.primes, "field characteristics, comma separated")->delimiter(',');
  cmd->add_option("--family", o.family, "construction name");
  cmd->add_option("--params", o.params, "construction parameters k=v")->delimiter(',');
  cmd->add_option("--t", o.thresholds, "integer thresholds")->delimiter(',');
  cmd->add_option("--s-grid", o.s_grid, "threshold exponents, t = ceil(q^s)")->delimiter(',');
  cmd->add_option("--trials", o.trials, "trials per configuration");
  cmd->add_option("--seed", o.seed, "base seed");
  cmd->add_option("--backend", o.backend, "incidence backend")->check(CLI::IsMember({"naive", "indexed", "both"}));
  cmd->add_option("--out", o.out, "output file (default stdout)");
}

fplab::SweepConfig to_config(const std::string& command, const Options& o, bool need_primes) {
  fplab::SweepConfig c;
  c.command = command;
  c.primes = o.primes;
  if (need_primes && c.primes.empty()) throw fplab::Error(fplab::ErrorCode::InvalidArgument, "--p is required");
  for (const auto p : c.primes) {
    if (!fplab::is_prime(p) || p > fplab::kMaxPrime) {
      throw fplab::Error(fplab::ErrorCode::CompositeModulus, std::to_string(p) + " is not a supported prime");
    }
  }
  c.family = o.family;
  for (const auto& kv : o.params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw fplab::Error(fplab::ErrorCode::InvalidArgument, "--params expects k=v, got '" + kv + "'");
    }
    c.params[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  c.thresholds = o.thresholds;
  c.s_grid = o.s_grid;
  c.trials = o.trials;
  c.seed = o.seed;
  c.backend = o.backend;
  c.theorem = o.theorem;
  c.threads = fplab::thread_count_from_env();
  return c;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw fplab::Error(fplab::ErrorCode::InvalidArgument, "cannot write " + o.out);
  f << text;
}

int cmd_verify(const Options& o) {
  if (o.suite == "exact") {
    const auto config = to_config("verify exact", o, true);
    const auto results = fplab::verify_exact(config);
    std::size_t violations = 0;
    for (const auto& r : results) {
      std::cout << r.name << ": " << r.instances << " instances, " << r.violations.size() << " violations\n";
      violations += r.violations.size();
    }
    for (const auto& r : results)
      for (const auto& v : r.violations) std::cout << "VIOLATION " << v << "\n";
    if (violations) {
      std::cout << "reproduce with: fplab verify exact --p ";
      for (std::size_t i = 0; i < config.primes.size(); ++i) std::cout << (i ? "," : "") << config.primes[i];
      std::cout << " --trials " << config.trials << " --seed " << config.seed << "\n";
      return kExitViolation;
    }
    return 0;
  }
  // asymptotic
  if (o.theorem.empty()) throw fplab::Error(fplab::ErrorCode::MissingParam, "verify asymptotic needs --theorem");
  const auto id = fplab::parse_theorem(o.theorem);
  if (!id) throw fplab::Error(fplab::ErrorCode::InvalidArgument, "unknown theorem '" + o.theorem + "'");
  const auto config = to_config("verify asymptotic", o, true);
  const auto table = fplab::verify_asymptotic(config, *id);
  emit(o, fplab::render_csv(config, table));
  std::size_t alerts = 0;
  for (const auto& row : table.rows) alerts += row.back() == "1";
  std::cerr << o.theorem << ": " << table.rows.size() << " ratios recorded, " << alerts << " above alert level\n";
  return 0;
}

int cmd_golden(const Options& o) {
  const auto computed = fplab::oracle::compute_goldens();
  if (o.regen) {
    fplab::oracle::write_golden_file(o.golden_file, computed);
    std::cout << "wrote " << computed.size() << " golden entries to " << o.golden_file << "\n";
    return 0;
  }
  std::vector<fplab::oracle::GoldenEntry> stored;
  try {
    stored = fplab::oracle::read_golden_file(o.golden_file);
  } catch (const fplab::Error& ex) {
    std::cout << "golden: " << ex.what() << "\n";
    return kExitViolation;
  }
  const auto diffs = fplab::oracle::diff_goldens(computed, stored);
  for (const auto& d : diffs) std::cout << "DIFF " << d << "\n";
  if (!diffs.empty()) return kExitViolation;
  std::cout << "golden: " << computed.size() << " entries match " << o.golden_file << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-field projection and incidence experiments"};
  app.require_subcommand(1);

  Options verify_o, ts_o, inc_o, energy_o, prune_o, dual_o, golden_o;

  auto* verify = app.add_subcommand("verify", "exact-statement suite or asymptotic ratio table");
  add_common(verify, verify_o, 200);
  verify->add_option("suite", verify_o.suite, "exact or asymptotic")
      ->required()
      ->check(CLI::IsMember({"exact", "asymptotic"}));
  verify->add_option("--theorem", verify_o.theorem, "catalog id for the asymptotic suite");

  auto* sweep = app.add_subcommand("sweep-ts", "exceptional-set sweep over directions");
  add_common(sweep, ts_o, 1);
  auto* inc = app.add_subcommand("incidence", "incidence counts against the catalog bounds");
  add_common(inc, inc_o, 1);
  auto* energy = app.add_subcommand("energy", "additive energies and dilate sums");
  add_common(energy, energy_o, 1);
  auto* pr = app.add_subcommand("prune", "bipartite pruning on random graphs");
  add_common(pr, prune_o, 1);
  auto* dual = app.add_subcommand("dual-check", "incidences before and after duality");
  add_common(dual, dual_o, 1);

  auto* golden = app.add_subcommand("golden", "recompute oracle constants and diff them against the stored file");
  golden->add_flag("--regen", golden_o.regen, "rewrite the golden file");
  golden->add_option("--golden-file", golden_o.golden_file, "path of the golden file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(verify_o);
    if (*golden) return cmd_golden(golden_o);
    if (*sweep) {
      const auto c = to_config("sweep-ts", ts_o, true);
      emit(ts_o, fplab::render_csv(c, fplab::run_sweep_ts(c)));
    } else if (*inc) {
      const auto c = to_config("incidence", inc_o, true);
      const auto table = fplab::run_incidence(c);
      emit(inc_o, fplab::render_csv(c, table));
      // With --backend both, I_check holds the naive count.
      const auto ci = static_cast<std::size_t>(
          std::find(table.columns.begin(), table.columns.end(), "I_check") - table.columns.begin());
      for (const auto& row : table.rows) {
        if (row[ci] != fplab::kNA && row[ci] != row[ci - 1]) {
          std::cerr << "backend mismatch: indexed " << row[ci - 1] << ", naive " << row[ci] << "\n";
          return kExitViolation;
        }
      }
    } else if (*energy) {
      const auto c = to_config("energy", energy_o, true);
      emit(energy_o, fplab::render_csv(c, fplab::run_energy(c)));
    } else if (*pr) {
      const auto c = to_config("prune", prune_o, false);
      emit(prune_o, fplab::render_csv(c, fplab::run_prune(c)));
    } else if (*dual) {
      const auto c = to_config("dual-check", dual_o, true);
      const auto table = fplab::run_dual_check(c);
      emit(dual_o, fplab::render_csv(c, table));
      for (const auto& row : table.rows) {
        if (row.back() != "1") return kExitViolation;
      }
    }
    return 0;
  } catch (const fplab::Error& ex) {
    std::cerr << "fplab: " << ex.what() << "\n";
    return kExitUsage;
  }
}
