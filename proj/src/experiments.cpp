#include "fplab/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <tuple>

#include "fplab/energy.hpp"
#include "fplab/error.hpp"
#include "fplab/projections.hpp"
#include "fplab/random.hpp"
#include "fplab/version.hpp"

namespace fplab {

namespace {

// Discriminators mixed into derive_seed so checks never share streams.
enum SeedStream : std::uint64_t {
  kStreamSweep = 1,
  kStreamIncidence,
  kStreamEnergy,
  kStreamPrune,
  kStreamDual,
  kStreamCsProp,
  kStreamBkt6,
  kStreamPruneCheck,
  kStreamRLower,
  kStreamDualCheck,
  kStreamBackend,
};

std::string join_params(const FamilyParams& params) {
  std::string out;
  for (const auto& [k, v] : params) {
    if (!out.empty()) out += ';';
    out += k + "=" + v;
  }
  return out;
}

template <class T>
std::string join(const std::vector<T>& xs) {
  std::string out;
  for (const auto& x : xs) {
    if (!out.empty()) out += ',';
    if constexpr (std::is_floating_point_v<T>) {
      out += format_double(x);
    } else {
      out += std::to_string(x);
    }
  }
  return out;
}

std::string yes_no(bool b) { return b ? "1" : "0"; }

std::string u(std::uint64_t v) { return std::to_string(v); }

double log_base(double q, double x) { return std::log(x) / std::log(q); }

std::uint64_t clamp_count(std::uint64_t n, std::uint64_t hi) { return std::min(n, hi); }

IncidenceBackend primary_backend(const std::string& name) {
  if (name == "naive") return IncidenceBackend::Naive;
  if (name == "indexed" || name == "both") return IncidenceBackend::Indexed;
  throw Error(ErrorCode::InvalidArgument, "backend must be naive, indexed or both");
}

struct FamilySpec {
  std::string name;
  FamilyParams params;
};

std::vector<FamilySpec> families_or(const SweepConfig& config, std::vector<FamilySpec> fallback) {
  if (config.family.empty()) return fallback;
  return {{config.family, config.params}};
}

// ---- sweep-ts ----

struct TsRow {
  std::uint64_t p = 0, q = 0;
  std::string family, params;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::size_t e = 0;
  std::uint64_t t = 0;
  std::size_t strict = 0, nonstrict = 0, m = 0;
  std::optional<BoundRecord> main, chen, two_dim;
};

std::vector<std::uint64_t> thresholds_for(const SweepConfig& config, std::uint64_t q) {
  std::vector<std::uint64_t> ts = config.thresholds;
  for (const double s : config.s_grid) ts.push_back(threshold_for_exponent(q, s));
  if (ts.empty()) throw Error(ErrorCode::InvalidArgument, "sweep needs --t or --s-grid");
  for (const auto t : ts) {
    if (t == 0) throw Error(ErrorCode::InvalidArgument, "thresholds must be positive");
  }
  return ts;
}

std::vector<TsRow> ts_rows_for(const SweepConfig& config, std::uint64_t p, const FamilySpec& fam, std::size_t trial,
                               std::uint64_t seed) {
  const PointSet e = make_family(fam.name, p, fam.params, seed);
  const Field& f = e.field();
  const std::uint64_t q = f.order();
  // Every direction is non-strictly exceptional at t = q^2, so this lists all sizes.
  const auto all = exceptional_set(e, q * q, 1, Comparison::NonStrict);

  std::vector<TsRow> rows;
  for (const auto t : thresholds_for(config, q)) {
    TsRow row;
    row.p = p;
    row.q = q;
    row.family = fam.name;
    row.params = join_params(fam.params);
    row.trial = trial;
    row.seed = seed;
    row.e = e.size();
    row.t = t;
    std::vector<Subspace> strict_members;
    for (const auto& m : all.members) {
      if (m.projection_size < t) {
        ++row.strict;
        strict_members.push_back(m.subspace);
      }
      if (m.projection_size <= t) ++row.nonstrict;
    }
    row.m = strict_members.empty() ? 0 : concentration(f, strict_members);
    if (!e.empty()) {
      const double qd = static_cast<double>(q);
      const double a = log_base(qd, static_cast<double>(e.size()));
      const double s = log_base(qd, static_cast<double>(t));
      auto main = compare(row.strict, eval_bound(TheoremId::Main, {{"p", qd}, {"a", a}, {"s", s}}));
      // The main bound is a prime-field statement.
      main.hypotheses_ok = main.hypotheses_ok && q == p;
      row.main = main;
      const TheoremId chen = a > 1 ? TheoremId::Chen1 : TheoremId::Chen2;
      row.chen = compare(row.strict, eval_bound(chen, {{"q", qd}, {"k", 1}, {"d", 2}, {"a", a}, {"s", s}}));
      row.two_dim = compare(row.strict, eval_bound(TheoremId::TwoDimQ, {{"q", qd}, {"a", a}, {"s", s}}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<TsRow> collect_ts(const SweepConfig& config, const std::vector<FamilySpec>& families) {
  struct Task {
    std::uint64_t p;
    std::size_t fam, trial;
  };
  std::vector<Task> tasks;
  for (const auto p : config.primes)
    for (std::size_t fi = 0; fi < families.size(); ++fi)
      for (std::size_t i = 0; i < config.trials; ++i) tasks.push_back({p, fi, i});
  const auto chunks = parallel_map<std::vector<TsRow>>(tasks.size(), config.threads, [&](std::size_t k) {
    const auto& task = tasks[k];
    const auto seed = derive_seed(config.seed, {kStreamSweep, task.p, task.fam, task.trial});
    return ts_rows_for(config, task.p, families[task.fam], task.trial, seed);
  });
  std::vector<TsRow> rows;
  for (const auto& c : chunks) rows.insert(rows.end(), c.begin(), c.end());
  return rows;
}

std::string rhs_of(const std::optional<BoundRecord>& r) { return r ? format_double(r->rhs) : kNA; }
std::string hyp_of(const std::optional<BoundRecord>& r) { return r ? yes_no(r->hypotheses_ok) : "0"; }
std::string ratio_of(const std::optional<BoundRecord>& r) { return r ? format_optional(r->ratio) : kNA; }

std::vector<FamilySpec> default_ts_families() {
  return {{"horizontal-line", {}},
          {"random", {{"a", "0.6"}}},
          {"random", {{"a", "0.8"}}},
          {"random", {{"a", "1"}}},
          {"grid", {{"kind", "interval"}}},
          {"pencil", {}}};
}

// ---- incidence ----

struct IncRow {
  std::uint64_t p = 0;
  std::string family, params;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::size_t z = 0, l = 0, x = 0, y = 0;
  std::optional<std::size_t> a, b, c;
  std::optional<std::uint64_t> ec;
  std::uint64_t incidences = 0;
  std::optional<std::uint64_t> cross_check;
  std::optional<BoundRecord> half, sdz, aa;
};

IncRow incidence_row(const SweepConfig& config, std::uint64_t p, const FamilySpec& fam, std::size_t trial,
                     std::uint64_t seed) {
  const Field f = Field::prime(p);
  const double pd = static_cast<double>(p);
  const auto root = static_cast<std::uint64_t>(std::ceil(std::sqrt(pd)));
  IncRow row;
  row.p = p;
  row.family = fam.name;
  row.params = join_params(fam.params);
  row.trial = trial;
  row.seed = seed;

  std::optional<PointSet> z;
  std::optional<LineSet> lines;
  std::optional<ElemSet> cset;
  if (fam.name == "pencil") {
    const auto ny = clamp_count(param_uint(fam.params, "Y", root), p);
    const auto nx = clamp_count(param_uint(fam.params, "X", root), p);
    const auto nl = param_uint(fam.params, "L", p);
    std::map<Elem, ElemSet> rows;
    for (const auto yv : random_subset(f, ny, derive_seed(seed, {0}))) {
      rows[yv] = random_subset(f, nx, derive_seed(seed, {1, yv}));
    }
    auto pencil = pencil_point_set(f, rows);
    row.y = pencil.rows.size();
    row.x = pencil.max_row;
    z = std::move(pencil.points);
    lines = random_lines(f, nl, derive_seed(seed, {2}));
  } else if (fam.name == "grid") {
    const auto na = clamp_count(param_uint(fam.params, "A", root), p);
    const auto nb = clamp_count(param_uint(fam.params, "B", na), p);
    const auto nc = clamp_count(param_uint(fam.params, "C", 2), p);
    const auto kind = param_string(fam.params, "kind", "interval");
    ElemSet as, bs, cs;
    if (kind == "interval") {
      as = interval_set(f, na);
      bs = interval_set(f, nb);
      cs = interval_set(f, nc);
    } else if (kind == "random") {
      as = random_subset(f, na, derive_seed(seed, {0}));
      bs = random_subset(f, nb, derive_seed(seed, {1}));
      cs = random_subset(f, nc, derive_seed(seed, {2}));
    } else {
      throw Error(ErrorCode::InvalidArgument, "grid kind must be interval or random");
    }
    z = grid_set(f, as, bs);
    lines = line_family_from_grid(f, cs);
    row.a = as.size();
    row.b = bs.size();
    row.c = cs.size();
    row.y = bs.size();
    row.x = as.size();
    cset = cs;
  } else if (fam.name == "full") {
    const auto all = interval_set(f, p);
    z = grid_set(f, all, all);
    lines = enumerate_lines(f, true);
    row.a = row.b = p;
    row.x = row.y = p;
  } else {
    throw Error(ErrorCode::InvalidArgument, "incidence family must be pencil, grid or full");
  }

  row.z = z->size();
  row.l = lines->size();
  row.incidences = count_incidences(*z, *lines, primary_backend(config.backend));
  if (config.backend == "both") row.cross_check = count_incidences(*z, *lines, IncidenceBackend::Naive);

  const auto ld = static_cast<double>(row.l);
  row.half = compare(row.incidences, eval_bound(TheoremId::HalfProduct, {{"p", pd},
                                                                         {"Y", static_cast<double>(row.y)},
                                                                         {"X", static_cast<double>(row.x)},
                                                                         {"L", ld},
                                                                         {"Z", static_cast<double>(row.z)}}));
  if (row.a) {
    const auto ad = static_cast<double>(*row.a), bd = static_cast<double>(*row.b);
    row.sdz = compare(row.incidences, eval_bound(TheoremId::SDZ, {{"p", pd}, {"A", ad}, {"B", bd}, {"L", ld}}));
    if (cset) {
      row.ec = additive_energy(f, *cset);
      row.aa = compare(row.incidences, eval_bound(TheoremId::AA, {{"p", pd},
                                                                  {"A", ad},
                                                                  {"B", bd},
                                                                  {"L", ld},
                                                                  {"C", static_cast<double>(*row.c)},
                                                                  {"EC", static_cast<double>(*row.ec)}}));
    }
  }
  return row;
}

std::vector<IncRow> collect_incidence(const SweepConfig& config, const std::vector<FamilySpec>& families) {
  struct Task {
    std::uint64_t p;
    std::size_t fam, trial;
  };
  std::vector<Task> tasks;
  for (const auto p : config.primes)
    for (std::size_t fi = 0; fi < families.size(); ++fi)
      for (std::size_t i = 0; i < config.trials; ++i) tasks.push_back({p, fi, i});
  return parallel_map<IncRow>(tasks.size(), config.threads, [&](std::size_t k) {
    const auto& task = tasks[k];
    const auto seed = derive_seed(config.seed, {kStreamIncidence, task.p, task.fam, task.trial});
    return incidence_row(config, task.p, families[task.fam], task.trial, seed);
  });
}

std::vector<FamilySpec> default_incidence_families() {
  return {{"pencil", {}}, {"grid", {{"kind", "interval"}}}, {"grid", {{"kind", "random"}, {"C", "3"}}},
          // small A, B against a wide C: the only default shape meeting the AA hypotheses
          {"grid", {{"kind", "interval"}, {"A", "3"}, {"B", "4"}, {"C", "6"}}},
          {"full", {}}};
}

std::string opt_count(const std::optional<std::size_t>& v) { return v ? u(*v) : kNA; }
std::string opt_u64(const std::optional<std::uint64_t>& v) { return v ? u(*v) : kNA; }

std::vector<ProjPoint> random_proj_points(const Field& f, std::size_t n, std::uint64_t seed) {
  // Index i < q^2 is the affine point (i % q, i / q); the rest are ideal points.
  const std::uint64_t q = f.order();
  Rng rng(seed);
  std::vector<ProjPoint> out;
  for (const auto i : sample_without_replacement(rng, q * q + q + 1, std::min<std::uint64_t>(n, q * q + q + 1))) {
    if (i < q * q) {
      out.push_back({static_cast<Elem>(i % q), static_cast<Elem>(i / q), 1});
    } else if (i < q * q + q) {
      out.push_back({1, static_cast<Elem>(i - q * q), 0});
    } else {
      out.push_back({1, 0, 0});
    }
  }
  return out;
}

std::vector<ProjLine> random_proj_lines(const Field& f, std::size_t n, std::uint64_t seed) {
  std::vector<ProjLine> out;
  for (const auto& pt : random_proj_points(f, n, seed)) out.push_back(dualize_point(f, pt));
  return out;
}

std::string repro(const char* check, std::uint64_t base_seed, const std::string& detail) {
  return std::string(check) + " (base seed " + u(base_seed) + ") " + detail;
}

template <class Fn>
CheckResult run_check(std::string name, std::size_t n, unsigned threads, Fn fn) {
  CheckResult result;
  result.name = std::move(name);
  result.instances = n;
  const auto found = parallel_map<std::optional<std::string>>(n, threads, [&](std::size_t k) -> std::optional<std::string> {
    try {
      return fn(k);
    } catch (const std::exception& ex) {
      return "instance " + u(k) + " threw: " + ex.what();
    }
  });
  for (const auto& v : found) {
    if (v) result.violations.push_back(result.name + ": " + *v);
  }
  return result;
}

}  // namespace

std::vector<std::string> SweepConfig::echo() const {
  std::vector<std::string> out;
  out.push_back("command: " + command);
  out.push_back("p: " + join(primes));
  out.push_back("family: " + (family.empty() ? std::string("(default set)") : family));
  out.push_back("params: " + join_params(params));
  out.push_back("t: " + join(thresholds));
  out.push_back("s-grid: " + join(s_grid));
  out.push_back("seed: " + u(seed));
  out.push_back("trials: " + u(trials));
  out.push_back("backend: " + backend);
  if (!theorem.empty()) out.push_back("theorem: " + theorem);
  return out;
}

std::string format_double(double v) {
  if (!std::isfinite(v)) return kNA;
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string format_optional(const std::optional<double>& v) { return v ? format_double(*v) : kNA; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string render_csv(const SweepConfig& config, const CsvTable& table) {
  std::ostringstream out;
  out << "# fplab " << kVersion << "\n";
  out << "# prng: " << kPrngName << "\n";
  for (const auto& line : config.echo()) out << "# " << line << "\n";
  auto write_row = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << csv_field(row[i]);
    }
    out << "\r\n";
  };
  write_row(table.columns);
  for (const auto& row : table.rows) write_row(row);
  return out.str();
}

unsigned thread_count_from_env() {
  if (const char* env = std::getenv("FPLAB_THREADS")) {
    unsigned n = 0;
    const std::string_view sv(env);
    const auto res = std::from_chars(sv.data(), sv.data() + sv.size(), n);
    if (res.ec == std::errc{} && res.ptr == sv.data() + sv.size() && n > 0) return n;
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::uint64_t threshold_for_exponent(std::uint64_t q, double s) {
  // The epsilon keeps exact powers (q^{1/2} = 3 for q = 9) from rounding up.
  const double v = std::pow(static_cast<double>(q), s);
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(v - 1e-9)));
}

CsvTable run_sweep_ts(const SweepConfig& config) {
  const auto rows = collect_ts(config, families_or(config, {{"random", {{"a", "0.8"}}}}));
  CsvTable table;
  table.columns = {"p", "q", "family", "params", "trial", "seed", "E", "a", "t", "s", "T_strict", "T_nonstrict",
                   "M", "rhs_MAIN", "hyp_MAIN", "ratio_MAIN", "chen_variant", "rhs_CHEN", "hyp_CHEN", "ratio_CHEN",
                   "rhs_TWO_DIM_Q", "hyp_TWO_DIM_Q", "ratio_TWO_DIM_Q"};
  for (const auto& r : rows) {
    const double qd = static_cast<double>(r.q);
    table.rows.push_back({u(r.p), u(r.q), r.family, r.params, u(r.trial), u(r.seed), u(r.e),
                          r.e ? format_double(log_base(qd, static_cast<double>(r.e))) : kNA, u(r.t),
                          format_double(log_base(qd, static_cast<double>(r.t))), u(r.strict), u(r.nonstrict), u(r.m),
                          rhs_of(r.main), hyp_of(r.main), ratio_of(r.main),
                          r.chen ? std::string(theorem_name(r.chen->id)) : kNA, rhs_of(r.chen), hyp_of(r.chen),
                          ratio_of(r.chen), rhs_of(r.two_dim), hyp_of(r.two_dim), ratio_of(r.two_dim)});
  }
  return table;
}

CsvTable run_incidence(const SweepConfig& config) {
  const auto rows = collect_incidence(config, families_or(config, {{"pencil", {}}}));
  CsvTable table;
  table.columns = {"p", "family", "params", "trial", "seed", "Z", "A", "B", "C", "L", "X", "Y", "EC", "I",
                   "I_check", "rhs_HALF_PRODUCT", "hyp_HALF_PRODUCT", "ratio_HALF_PRODUCT", "rhs_SDZ", "hyp_SDZ",
                   "ratio_SDZ", "rhs_AA", "hyp_AA", "ratio_AA"};
  for (const auto& r : rows) {
    table.rows.push_back({u(r.p), r.family, r.params, u(r.trial), u(r.seed), u(r.z), opt_count(r.a), opt_count(r.b),
                          opt_count(r.c), u(r.l), u(r.x), u(r.y), opt_u64(r.ec), u(r.incidences),
                          opt_u64(r.cross_check), rhs_of(r.half), hyp_of(r.half), ratio_of(r.half), rhs_of(r.sdz),
                          hyp_of(r.sdz), ratio_of(r.sdz), rhs_of(r.aa), hyp_of(r.aa), ratio_of(r.aa)});
  }
  return table;
}

CsvTable run_energy(const SweepConfig& config) {
  struct Task {
    std::uint64_t p;
    std::size_t trial;
  };
  std::vector<Task> tasks;
  for (const auto p : config.primes)
    for (std::size_t i = 0; i < config.trials; ++i) tasks.push_back({p, i});
  const auto kind = param_string(config.params, "kind", "random");
  if (kind != "random" && kind != "interval") throw Error(ErrorCode::InvalidArgument, "energy kind must be interval or random");
  const auto rows = parallel_map<std::vector<std::string>>(tasks.size(), config.threads, [&](std::size_t k) {
    const auto [p, trial] = tasks[k];
    const Field f = Field::prime(p);
    const auto seed = derive_seed(config.seed, {kStreamEnergy, p, trial});
    const auto root = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(p))));
    const auto nc = clamp_count(param_uint(config.params, "C", root), p);
    const auto ny = clamp_count(param_uint(config.params, "Y", root), p - 1);
    const ElemSet c = kind == "interval" ? interval_set(f, nc) : random_subset(f, nc, derive_seed(seed, {0}));
    const ElemSet y = random_nonzero_subset(f, ny, derive_seed(seed, {1}));
    const auto ds = dilate_energy_sum(f, c, y);
    const std::string eight = c.size() <= kMaxEightTupleSetSize ? u(eight_tuple_count(f, c)) : kNA;
    return std::vector<std::string>{u(p), kind, u(trial), u(seed), u(c.size()), u(y.size()), u(additive_energy(f, c)),
                                    u(ds.sum), format_double(ds.rhs), yes_no(ds.within_rhs), eight};
  });
  return {{"p", "kind", "trial", "seed", "C", "Y", "EC", "dilate_sum", "rhs_BKT6", "within_BKT6", "eight_tuple"}, rows};
}

BipartiteGraph random_bipartite(std::uint64_t seed, std::size_t max_side, double density) {
  Rng rng(seed);
  const auto left = static_cast<std::size_t>(rng.between(1, max_side));
  const auto right = static_cast<std::size_t>(rng.between(1, max_side));
  const double rho = density > 0 && density <= 1 ? density : rng.unit();
  std::vector<Edge> edges;
  for (std::uint32_t l = 0; l < left; ++l)
    for (std::uint32_t r = 0; r < right; ++r)
      if (rng.unit() < rho) edges.emplace_back(l, r);
  if (edges.empty()) {
    edges.emplace_back(static_cast<std::uint32_t>(rng.below(left)), static_cast<std::uint32_t>(rng.below(right)));
  }
  return BipartiteGraph(left, right, std::move(edges));
}

CsvTable run_prune(const SweepConfig& config) {
  const auto side = static_cast<std::size_t>(param_uint(config.params, "side", 50));
  const double density = param_double(config.params, "density", -1.0);
  if (side == 0) throw Error(ErrorCode::InvalidArgument, "side must be positive");
  const auto rows = parallel_map<std::vector<std::string>>(config.trials, config.threads, [&](std::size_t trial) {
    const auto seed = derive_seed(config.seed, {kStreamPrune, trial});
    const auto g = random_bipartite(seed, side, density);
    const auto res = prune(g);
    const auto chk = check_prune(g, res);
    return std::vector<std::string>{u(trial), u(seed), u(g.left_size()), u(g.right_size()), u(g.edge_count()),
                                    u(res.graph.left_size()), u(res.graph.right_size()), u(res.graph.edge_count()),
                                    u(res.removals), yes_no(chk.min_degree_product), yes_no(chk.density_ratio),
                                    yes_no(chk.induced)};
  });
  return {{"trial", "seed", "L", "R", "E", "L_kept", "R_kept", "E_kept", "removals", "min_degree_product",
           "density_ratio", "induced"},
          rows};
}

CsvTable run_dual_check(const SweepConfig& config) {
  struct Task {
    std::uint64_t p;
    std::size_t trial;
  };
  std::vector<Task> tasks;
  for (const auto p : config.primes)
    for (std::size_t i = 0; i < config.trials; ++i) tasks.push_back({p, i});
  const auto backend = primary_backend(config.backend);
  const auto rows = parallel_map<std::vector<std::string>>(tasks.size(), config.threads, [&](std::size_t k) {
    const auto [p, trial] = tasks[k];
    const Field f = Field::prime(p);
    const auto seed = derive_seed(config.seed, {kStreamDual, p, trial});
    Rng rng(seed);
    const auto total = p * p + p + 1;
    const auto np = param_uint(config.params, "P", rng.between(1, total));
    const auto nl = param_uint(config.params, "L", rng.between(1, total));
    const auto pts = random_proj_points(f, np, derive_seed(seed, {0}));
    const auto lns = random_proj_lines(f, nl, derive_seed(seed, {1}));
    std::vector<ProjPoint> dual_pts;
    std::vector<ProjLine> dual_lns;
    for (const auto& ln : lns) dual_pts.push_back(dualize_line(f, ln));
    for (const auto& pt : pts) dual_lns.push_back(dualize_point(f, pt));
    const auto i1 = count_incidences(f, pts, lns, backend);
    const auto i2 = count_incidences(f, dual_pts, dual_lns, backend);
    return std::vector<std::string>{u(p), u(trial), u(seed), u(pts.size()), u(lns.size()), u(i1), u(i2),
                                    yes_no(i1 == i2)};
  });
  return {{"p", "trial", "seed", "P", "L", "I", "I_dual", "equal"}, rows};
}

CheckResult check_cs_prop(const std::vector<std::uint64_t>& primes, const std::vector<double>& s_values,
                          std::size_t trials, std::uint64_t seed, unsigned threads) {
  struct Task {
    std::uint64_t p;
    double s;
    std::size_t trial;
  };
  std::vector<Task> tasks;
  for (const auto p : primes)
    for (const double s : s_values)
      for (std::size_t i = 0; i < trials; ++i) tasks.push_back({p, s, i});
  return run_check("CS_PROP", tasks.size(), threads, [&](std::size_t k) -> std::optional<std::string> {
    const auto [p, s, trial] = tasks[k];
    const Field f = Field::prime(p);
    const double ps = std::pow(static_cast<double>(p), s);
    // "#pi <= p^s" over the integers is "#pi <= floor(p^s)".
    const auto t = static_cast<std::uint64_t>(std::floor(ps + 1e-12));
    const auto min_e = 2 * static_cast<std::uint64_t>(std::ceil(ps - 1e-12));
    const auto inst_seed = derive_seed(seed, {kStreamCsProp, p, static_cast<std::uint64_t>(s * 1000), trial});
    Rng rng(inst_seed);
    const auto n = rng.between(std::min(min_e, p * p), p * p);
    const auto e = random_point_set(f, 2, n, derive_seed(inst_seed, {0}));
    const auto report = exceptional_set(e, t, 1, Comparison::NonStrict);
    auto rec = compare(report.size(), eval_bound(TheoremId::CsProp, {{"p", static_cast<double>(p)}, {"s", s}, {"E", static_cast<double>(n)}}));
    if (!rec.hypotheses_ok || !rec.violated()) return std::nullopt;
    return repro("CS_PROP", seed, "p=" + u(p) + " s=" + format_double(s) + " trial=" + u(trial) + " |E|=" + u(n) +
                                      " point-set seed=" + u(derive_seed(inst_seed, {0})) + ": |T|=" + u(report.size()) +
                                      " > 2p^s=" + format_double(rec.rhs));
  });
}

CheckResult check_bkt6(const std::vector<std::uint64_t>& primes, std::size_t trials, std::uint64_t seed,
                       unsigned threads) {
  struct Task {
    std::uint64_t p;
    std::size_t trial;
  };
  std::vector<Task> tasks;
  for (const auto p : primes)
    for (std::size_t i = 0; i < trials; ++i) tasks.push_back({p, i});
  return run_check("BKT6_RHS", tasks.size(), threads, [&](std::size_t k) -> std::optional<std::string> {
    const auto [p, trial] = tasks[k];
    const Field f = Field::prime(p);
    const auto inst_seed = derive_seed(seed, {kStreamBkt6, p, trial});
    Rng rng(inst_seed);
    const auto nc = rng.between(1, std::min<std::uint64_t>(p, kMaxEnergySetSize));
    const auto ny = rng.between(1, p - 1);
    const auto c = random_subset(f, nc, derive_seed(inst_seed, {0}));
    const auto y = random_nonzero_subset(f, ny, derive_seed(inst_seed, {1}));
    const auto ds = dilate_energy_sum(f, c, y);
    if (ds.within_rhs) return std::nullopt;
    return repro("BKT6_RHS", seed, "q=" + u(p) + " trial=" + u(trial) + " |C|=" + u(nc) + " |Y|=" + u(ny) +
                                       " instance seed=" + u(inst_seed) + ": sum=" + u(ds.sum) +
                                       " > rhs=" + format_double(ds.rhs));
  });
}

CheckResult check_pruning(std::size_t trials, std::size_t max_side, std::uint64_t seed, unsigned threads) {
  return run_check("PRUNING", trials, threads, [&](std::size_t trial) -> std::optional<std::string> {
    const auto inst_seed = derive_seed(seed, {kStreamPruneCheck, trial});
    const auto g = random_bipartite(inst_seed, max_side, -1.0);
    const auto res = prune(g);
    const auto chk = check_prune(g, res);
    if (chk.ok()) return std::nullopt;
    return repro("PRUNING", seed, "trial=" + u(trial) + " graph seed=" + u(inst_seed) + " (|L|=" + u(g.left_size()) +
                                      " |R|=" + u(g.right_size()) + " |E|=" + u(g.edge_count()) +
                                      "): min_degree_product=" + yes_no(chk.min_degree_product) +
                                      " density_ratio=" + yes_no(chk.density_ratio) + " induced=" + yes_no(chk.induced));
  });
}

CheckResult check_r_lower(const std::vector<std::uint64_t>& primes, std::size_t trials, std::uint64_t seed,
                          unsigned threads) {
  struct Task {
    std::uint64_t p;
    std::size_t trial;
  };
  std::vector<Task> tasks;
  for (const auto p : primes)
    for (std::size_t i = 0; i < trials; ++i) tasks.push_back({p, i});
  return run_check("R_LOWER", tasks.size(), threads, [&](std::size_t k) -> std::optional<std::string> {
    const auto [p, trial] = tasks[k];
    const Field f = Field::prime(p);
    const auto inst_seed = derive_seed(seed, {kStreamRLower, p, trial});
    Rng rng(inst_seed);
    const auto n = rng.between(1, p * p);
    const auto ny = rng.between(1, p);
    const auto e = random_point_set(f, 2, n, derive_seed(inst_seed, {0}));
    const auto ys = random_subset(f, ny, derive_seed(inst_seed, {1}));
    const auto res = coincidence_count(e, ys);
    if (res.meets_lower_bound()) return std::nullopt;
    return repro("R_LOWER", seed, "p=" + u(p) + " trial=" + u(trial) + " |E|=" + u(n) + " |Y|=" + u(ny) +
                                      " instance seed=" + u(inst_seed) + ": |R|=" + u(res.r) +
                                      " < |Y||E|^2/M=" + format_double(res.lower_bound));
  });
}

CheckResult check_duality(const std::vector<std::uint64_t>& primes, std::size_t trials, std::uint64_t seed,
                          unsigned threads) {
  struct Task {
    std::uint64_t p;
    std::size_t trial;
  };
  std::vector<Task> tasks;
  for (const auto p : primes)
    for (std::size_t i = 0; i < trials; ++i) tasks.push_back({p, i});
  return run_check("DUALITY", tasks.size(), threads, [&](std::size_t k) -> std::optional<std::string> {
    const auto [p, trial] = tasks[k];
    const Field f = Field::prime(p);
    const auto inst_seed = derive_seed(seed, {kStreamDualCheck, p, trial});
    Rng rng(inst_seed);
    const auto total = p * p + p + 1;
    const auto pts = random_proj_points(f, rng.between(1, total), derive_seed(inst_seed, {0}));
    const auto lns = random_proj_lines(f, rng.between(1, total), derive_seed(inst_seed, {1}));
    std::vector<ProjPoint> dual_pts;
    std::vector<ProjLine> dual_lns;
    for (const auto& ln : lns) dual_pts.push_back(dualize_line(f, ln));
    for (const auto& pt : pts) dual_lns.push_back(dualize_point(f, pt));
    const auto i1 = count_incidences(f, pts, lns);
    const auto i2 = count_incidences(f, dual_pts, dual_lns);
    if (i1 == i2) return std::nullopt;
    return repro("DUALITY", seed, "q=" + u(p) + " trial=" + u(trial) + " instance seed=" + u(inst_seed) +
                                      ": I(P,L)=" + u(i1) + " I(L*,P*)=" + u(i2));
  });
}

CheckResult check_backends(const std::vector<std::uint64_t>& primes, std::size_t trials, std::uint64_t seed,
                           unsigned threads) {
  struct Task {
    std::uint64_t p;
    std::size_t trial;
  };
  std::vector<Task> tasks;
  for (const auto p : primes)
    for (std::size_t i = 0; i < trials; ++i) tasks.push_back({p, i});
  return run_check("BACKENDS", tasks.size(), threads, [&](std::size_t k) -> std::optional<std::string> {
    const auto [p, trial] = tasks[k];
    const Field f = Field::prime(p);
    const auto inst_seed = derive_seed(seed, {kStreamBackend, p, trial});
    Rng rng(inst_seed);
    const auto total = p * p + p + 1;
    const auto pts = random_proj_points(f, rng.between(1, total), derive_seed(inst_seed, {0}));
    const auto lns = random_proj_lines(f, rng.between(1, total), derive_seed(inst_seed, {1}));
    const auto naive = count_incidences(f, pts, lns, IncidenceBackend::Naive);
    const auto indexed = count_incidences(f, pts, lns, IncidenceBackend::Indexed);
    if (naive == indexed) return std::nullopt;
    return repro("BACKENDS", seed, "q=" + u(p) + " trial=" + u(trial) + " instance seed=" + u(inst_seed) +
                                       ": naive=" + u(naive) + " indexed=" + u(indexed));
  });
}

std::vector<CheckResult> verify_exact(const SweepConfig& config) {
  const std::vector<double> s_values = config.s_grid.empty() ? std::vector<double>{0.3, 0.5, 0.7, 0.9} : config.s_grid;
  const auto n = config.trials;
  return {check_cs_prop(config.primes, s_values, n, config.seed, config.threads),
          check_bkt6(config.primes, n, config.seed, config.threads),
          check_pruning(n, 50, config.seed, config.threads),
          check_r_lower(config.primes, n, config.seed, config.threads),
          check_duality(config.primes, n, config.seed, config.threads),
          check_backends(config.primes, n, config.seed, config.threads)};
}

bool asymptotic_supported(TheoremId id) {
  switch (id) {
    case TheoremId::Main:
    case TheoremId::TwoDimQ:
    case TheoremId::Chen1:
    case TheoremId::Chen2:
    case TheoremId::HalfProduct:
    case TheoremId::AA:
    case TheoremId::SDZ:
      return true;
    default:
      return false;
  }
}

CsvTable verify_asymptotic(const SweepConfig& config, TheoremId id) {
  if (!asymptotic_supported(id)) {
    throw Error(ErrorCode::InvalidArgument, "no sweep behind " + std::string(theorem_name(id)));
  }
  CsvTable table;
  table.columns = {"theorem", "p", "q", "family", "params", "trial", "seed", "instance", "observed",
                   "rhs", "ratio", "hypotheses_ok", "alert"};
  auto emit = [&](const TsRow* ts, const IncRow* inc, const std::optional<BoundRecord>& rec, const std::string& inst) {
    if (!rec) return;
    const auto& base = ts ? std::tie(ts->p, ts->family, ts->params, ts->trial, ts->seed)
                          : std::tie(inc->p, inc->family, inc->params, inc->trial, inc->seed);
    const auto q = ts ? ts->q : inc->p;
    table.rows.push_back({std::string(theorem_name(rec->id)), u(std::get<0>(base)), u(q), std::get<1>(base),
                          std::get<2>(base), u(std::get<3>(base)), u(std::get<4>(base)), inst, u(*rec->observed),
                          format_double(rec->rhs), format_optional(rec->ratio), yes_no(rec->hypotheses_ok),
                          yes_no(rec->alert())});
  };

  if (id == TheoremId::HalfProduct || id == TheoremId::AA || id == TheoremId::SDZ) {
    for (const auto& r : collect_incidence(config, families_or(config, default_incidence_families()))) {
      const std::string inst = "Z=" + u(r.z) + ";L=" + u(r.l);
      emit(nullptr, &r, id == TheoremId::HalfProduct ? r.half : id == TheoremId::AA ? r.aa : r.sdz, inst);
    }
    return table;
  }
  SweepConfig cfg = config;
  if (cfg.thresholds.empty() && cfg.s_grid.empty()) cfg.s_grid = {0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  for (const auto& r : collect_ts(cfg, families_or(cfg, default_ts_families()))) {
    const std::string inst = "E=" + u(r.e) + ";t=" + u(r.t);
    if (id == TheoremId::Main) emit(&r, nullptr, r.main, inst);
    if (id == TheoremId::TwoDimQ) emit(&r, nullptr, r.two_dim, inst);
    if ((id == TheoremId::Chen1 || id == TheoremId::Chen2) && r.chen && r.chen->id == id) emit(&r, nullptr, r.chen, inst);
  }
  return table;
}

}  // namespace fplab
