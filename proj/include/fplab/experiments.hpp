#pragma once

#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>
#include <atomic>

#include "fplab/bounds.hpp"
#include "fplab/constructions.hpp"
#include "fplab/incidence.hpp"
#include "fplab/pruning.hpp"

namespace fplab {

/// Everything that determines a run's output. `threads` is deliberately not
/// echoed: output must not depend on it.
struct SweepConfig {
  std::string command;
  std::vector<std::uint64_t> primes;
  std::string family;
  FamilyParams params;
  std::vector<std::uint64_t> thresholds;
  std::vector<double> s_grid;
  std::uint64_t seed = 0;
  std::size_t trials = 1;
  /// naive, indexed or both (both cross-checks the two and fails on mismatch).
  std::string backend = "indexed";
  std::string theorem;
  unsigned threads = 1;

  std::vector<std::string> echo() const;
};

struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

inline const std::string kNA = "NA";

/// Shortest round-trip decimal form; NA for NaN and infinities.
std::string format_double(double v);
std::string format_optional(const std::optional<double>& v);
/// RFC 4180 quoting: fields with comma, quote, CR or LF are quoted, quotes doubled.
std::string csv_field(const std::string& s);

/// "#"-prefixed header (version, PRNG, config echo), column line, then rows.
std::string render_csv(const SweepConfig& config, const CsvTable& table);

/// FPLAB_THREADS if set to a positive integer, else the machine's parallelism.
unsigned thread_count_from_env();

/// Applies fn to 0..n-1 on up to `threads` workers; results in index order.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, unsigned threads, Fn fn) {
  std::vector<T> out(n);
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        out[i] = fn(i);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const auto count = std::min<std::size_t>(threads, n);
  for (std::size_t t = 0; t < count; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

/// Threshold t for exponent s: ceil(q^s), so "#pi < t" reads "#pi < q^s".
std::uint64_t threshold_for_exponent(std::uint64_t q, double s);

/// Exceptional-set sweep over G(1, F_q^2). Rows ordered by (p, trial, t).
CsvTable run_sweep_ts(const SweepConfig& config);
/// Incidence sweep for families pencil, grid and full. Rows ordered by (p, trial).
CsvTable run_incidence(const SweepConfig& config);
CsvTable run_energy(const SweepConfig& config);
CsvTable run_prune(const SweepConfig& config);
CsvTable run_dual_check(const SweepConfig& config);

/// Random bipartite graph with sides in [1, max_side]; at least one edge.
/// A density outside (0, 1] is drawn uniformly per graph.
BipartiteGraph random_bipartite(std::uint64_t seed, std::size_t max_side, double density);

struct CheckResult {
  std::string name;
  std::size_t instances = 0;
  std::vector<std::string> violations;

  bool ok() const noexcept { return violations.empty(); }
};

/// Non-strict exceptional sets of random E with |E| >= 2 ceil(p^s) never
/// exceed 2 p^s.
CheckResult check_cs_prop(const std::vector<std::uint64_t>& primes, const std::vector<double>& s_values,
                          std::size_t trials, std::uint64_t seed, unsigned threads);
CheckResult check_bkt6(const std::vector<std::uint64_t>& primes, std::size_t trials, std::uint64_t seed,
                       unsigned threads);
CheckResult check_pruning(std::size_t trials, std::size_t max_side, std::uint64_t seed, unsigned threads);
CheckResult check_r_lower(const std::vector<std::uint64_t>& primes, std::size_t trials, std::uint64_t seed,
                          unsigned threads);
CheckResult check_duality(const std::vector<std::uint64_t>& primes, std::size_t trials, std::uint64_t seed,
                          unsigned threads);
CheckResult check_backends(const std::vector<std::uint64_t>& primes, std::size_t trials, std::uint64_t seed,
                           unsigned threads);

/// The whole exact suite with the config's primes, trials and seed.
std::vector<CheckResult> verify_exact(const SweepConfig& config);

/// Theorems with an observed-vs-rhs sweep behind them.
bool asymptotic_supported(TheoremId id);
/// Long-format ratio table: one row per (instance, threshold) for the theorem.
CsvTable verify_asymptotic(const SweepConfig& config, TheoremId id);

}  // namespace fplab
