#include <cctype>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ginimds/ginimds.hpp"
#include "json.hpp"
#include "output.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace ginimds;

namespace {

struct CommonOpts {
  std::string out_dir = ".";
  std::uint64_t seed = 0;
  int threads = 0;  // 0 = GINI_MDS_THREADS env var, then hardware default
  bool header = false;
  std::string label_column;  // empty = none; digits = index, otherwise name
};

std::optional<LabelColumn> parse_label_column(const std::string& s) {
  if (s.empty()) return std::nullopt;
  const bool numeric = !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
  if (numeric) return LabelColumn{std::stoi(s)};
  return LabelColumn{s};
}

void resolve_threads(int flag_value) {
  int threads = flag_value;
  if (threads <= 0) {
    if (const char* env = std::getenv("GINI_MDS_THREADS")) threads = std::atoi(env);
  }
  set_max_threads(threads);  // <= 0 falls back to the hardware default
}

Standardization parse_standardize(const std::string& s) {
  if (s == "none") return Standardization::none;
  if (s == "mean") return Standardization::mean_unit;
  if (s == "median") return Standardization::median_unit;
  throw InvalidConfig("unknown standardization mode '" + s + "'");
}

StressKind parse_stress_kind(const std::string& s) {
  if (s == "kruskal") return StressKind::kruskal;
  if (s == "huber") return StressKind::huber;
  if (s == "sammon") return StressKind::sammon;
  if (s == "smacof") return StressKind::smacof;
  throw InvalidConfig("unknown loss '" + s + "'");
}

EmbeddingMethod parse_method(const std::string& s) {
  if (s == "classical") return EmbeddingMethod::classical;
  if (s == "kruskal") return EmbeddingMethod::kruskal;
  if (s == "huber") return EmbeddingMethod::huber;
  if (s == "sammon") return EmbeddingMethod::sammon;
  if (s == "smacof") return EmbeddingMethod::smacof;
  throw InvalidConfig("unknown loss '" + s + "'");
}

NuGrid parse_grid(const std::string& spec) {
  double lo = 0.0, hi = 0.0;
  int count = 0;
  char trailing = 0;
  if (std::sscanf(spec.c_str(), "%lf:%lf:%d%c", &lo, &hi, &count, &trailing) != 3) {
    throw InvalidConfig("--grid must look like lo:hi:count, got '" + spec + "'");
  }
  if (count > 1 && !(hi > lo)) throw InvalidConfig("--grid needs hi > lo for count > 1");
  return NuGrid::linspace(lo, hi, count);
}

json label_column_json(const std::string& s) {
  if (s.empty()) return nullptr;
  return s;
}

json distance_stats(const DistanceMatrix& D) {
  const int n = D.n();
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0, sum = 0.0;
  long count = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++count) {
      lo = std::min(lo, D(i, j));
      hi = std::max(hi, D(i, j));
      sum += D(i, j);
    }
  }
  return {{"min_offdiag", lo}, {"max_offdiag", hi}, {"mean_offdiag", sum / static_cast<double>(count)}};
}

json embedding_diagnostics(const Embedding& e) {
  json j{{"method", to_string(e.method)}, {"stress", e.stress}};
  if (e.method == EmbeddingMethod::classical) {
    j["clamped_count"] = e.clamped_count;
    j["clamped_mass"] = e.clamped_mass;
    j["eigenvalues"] = std::vector<double>(e.eigenvalues.data(),
                                           e.eigenvalues.data() + e.eigenvalues.size());
  } else {
    j["converged"] = e.converged;
    j["iterations"] = e.iterations;
    if (e.method == EmbeddingMethod::huber) j["huber_delta"] = e.huber_delta;
  }
  return j;
}

void write_manifest(const fs::path& out_dir, const std::string& command, json inputs, json config,
                    std::uint64_t seed, json results, const cli::Timings& timings) {
  const json manifest{{"tool", "gini-mds"},     {"version", kVersion}, {"command", command},
                      {"inputs", std::move(inputs)}, {"config", std::move(config)},
                      {"seed", seed},           {"results", std::move(results)},
                      {"timings", timings.to_json()}};
  cli::atomic_write(out_dir / "manifest.json", manifest.dump(2) + "\n");
}

double mean_of(const std::vector<double>& v) {
  double acc = 0.0;
  for (const double x : v) acc += x;
  return acc / static_cast<double>(v.size());
}

double stderr_of(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  const double mean = mean_of(v);
  double acc = 0.0;
  for (const double x : v) acc += (x - mean) * (x - mean);
  return std::sqrt(acc / static_cast<double>(v.size() - 1) / static_cast<double>(v.size()));
}

// ---------------------------------------------------------------- embed ----

struct EmbedOpts {
  CommonOpts common;
  std::string input;
  std::string metric = "euclidean";
  double nu = 0.0;
  bool nu_given = false;
  int dims = 2;
  std::string loss = "classical";
  std::string standardize_mode = "none";
  double huber_delta = 0.0;
  bool huber_delta_given = false;
  int max_iters = 300;
  double rel_tol = 1e-6;
};

int run_embed(const EmbedOpts& opt) {
  if (opt.metric == "gini" && !opt.nu_given) {
    throw InvalidConfig("--metric gini requires --nu (or use the tune command)");
  }
  resolve_threads(opt.common.threads);
  const fs::path out_dir(opt.common.out_dir);
  cli::Timings timings;

  timings.start("load");
  Dataset ds = load_csv(opt.input, opt.common.header, parse_label_column(opt.common.label_column));
  const Standardization mode = parse_standardize(opt.standardize_mode);
  if (mode != Standardization::none) ds = standardize(ds, mode);

  timings.start("distances");
  const MetricSpec spec =
      (opt.metric == "gini") ? MetricSpec::gini(opt.nu) : MetricSpec::euclidean();
  const DistanceMatrix D = pairwise_matrix(ds.X, spec);

  timings.start("embed");
  Embedding embedding;
  if (opt.loss == "classical") {
    embedding = classical_mds(D, opt.dims);
  } else {
    StressConfig config;
    config.loss = parse_stress_kind(opt.loss);
    if (opt.huber_delta_given) config.huber_delta = opt.huber_delta;
    config.max_iters = opt.max_iters;
    config.rel_tol = opt.rel_tol;
    config.seed = opt.common.seed;
    embedding = minimize_stress(D, opt.dims, config);
  }

  timings.start("write");
  cli::atomic_write(out_dir / "coords.csv", cli::coords_csv(embedding.coords));
  if (opt.dims <= 2) {
    const std::vector<int>* labels = ds.labels ? &*ds.labels : nullptr;
    cli::atomic_write(out_dir / "scatter.svg", cli::scatter_svg(embedding.coords, labels));
  }

  json results = embedding_diagnostics(embedding);
  results["distance_stats"] = distance_stats(D);
  results["rows"] = ds.n();
  timings.stop();
  write_manifest(out_dir, "embed", {{"data", opt.input}},
                 {{"metric", opt.metric},
                  {"nu", opt.nu_given ? json(opt.nu) : json(nullptr)},
                  {"dims", opt.dims},
                  {"loss", opt.loss},
                  {"standardize", opt.standardize_mode},
                  {"header", opt.common.header},
                  {"label_column", label_column_json(opt.common.label_column)},
                  {"huber_delta", opt.huber_delta_given ? json(opt.huber_delta) : json(nullptr)},
                  {"max_iters", opt.max_iters},
                  {"rel_tol", opt.rel_tol},
                  {"threads", max_threads()}},
                 opt.common.seed, std::move(results), timings);
  return 0;
}

// ----------------------------------------------------------------- tune ----

struct TuneOpts {
  CommonOpts common;
  std::string input;
  std::string grid = "1.1:5:30";
  int folds = 5;
  bool no_cv = false;
  int dims = 2;
  std::string loss = "classical";
  std::string standardize_mode = "none";
};

int run_tune(const TuneOpts& opt) {
  if (opt.folds < 2 && !opt.no_cv) {
    throw InvalidConfig("--folds must be >= 2 (or pass --no-cv for a single whole-data fold)");
  }
  if (opt.no_cv && opt.folds > 1) {
    throw InvalidConfig("--no-cv contradicts --folds " + std::to_string(opt.folds));
  }
  resolve_threads(opt.common.threads);
  const fs::path out_dir(opt.common.out_dir);
  cli::Timings timings;

  timings.start("load");
  Dataset ds = load_csv(opt.input, opt.common.header, parse_label_column(opt.common.label_column));
  const Standardization mode = parse_standardize(opt.standardize_mode);
  if (mode != Standardization::none) ds = standardize(ds, mode);

  timings.start("tune");
  const NuGrid grid = parse_grid(opt.grid);
  const TuneReport report =
      tune_nu(ds.X, opt.dims, grid, opt.folds, parse_method(opt.loss), opt.common.seed);

  timings.start("write");
  json per_nu = json::array();
  for (std::size_t g = 0; g < report.grid.size(); ++g) {
    per_nu.push_back({{"nu", report.grid[g]}, {"mean_stress", report.mean_stress[g]}});
  }
  const json tune_report{{"per_nu", per_nu},
                         {"nu_star", report.nu_star},
                         {"folds", report.folds},
                         {"seed", report.seed},
                         {"dims", opt.dims},
                         {"loss", opt.loss},
                         {"best", embedding_diagnostics(report.best_embedding)}};
  cli::atomic_write(out_dir / "tune_report.json", tune_report.dump(2) + "\n");
  cli::atomic_write(out_dir / "coords.csv", cli::coords_csv(report.best_embedding.coords));

  json results{{"nu_star", report.nu_star},
               {"best", embedding_diagnostics(report.best_embedding)},
               {"rows", ds.n()}};
  timings.stop();
  write_manifest(out_dir, "tune", {{"data", opt.input}},
                 {{"grid", opt.grid},
                  {"folds", opt.folds},
                  {"no_cv", opt.no_cv},
                  {"dims", opt.dims},
                  {"loss", opt.loss},
                  {"standardize", opt.standardize_mode},
                  {"header", opt.common.header},
                  {"label_column", label_column_json(opt.common.label_column)},
                  {"threads", max_threads()}},
                 opt.common.seed, std::move(results), timings);
  return 0;
}

// ----------------------------------------------------------------- eval ----

struct EvalOpts {
  CommonOpts common;
  std::string input;
  std::string coords;
  bool no_coords_header = false;
  int k_trust = 5;
  int k_nn = 10;
};

int run_eval(const EvalOpts& opt) {
  resolve_threads(opt.common.threads);
  const fs::path out_dir(opt.common.out_dir);
  cli::Timings timings;

  timings.start("load");
  const Dataset ds =
      load_csv(opt.input, opt.common.header, parse_label_column(opt.common.label_column));
  const Dataset coords = load_csv(opt.coords, !opt.no_coords_header);
  if (coords.n() != ds.n()) {
    throw InvalidInput("eval: row count mismatch, data has " + std::to_string(ds.n()) +
                       " rows but coords has " + std::to_string(coords.n()));
  }

  timings.start("eval");
  const std::vector<int>* labels = ds.labels ? &*ds.labels : nullptr;
  const EvalReport report = evaluate(ds.X, coords.X, labels, opt.k_trust, opt.k_nn);

  timings.start("write");
  auto opt_json = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };
  const json eval_report{{"trustworthiness", opt_json(report.trustworthiness)},
                         {"nn_agreement", opt_json(report.nn_agreement)},
                         {"silhouette", opt_json(report.silhouette)},
                         {"pearson", report.pearson},
                         {"spearman", report.spearman},
                         {"k_trust", report.k_trust},
                         {"k_nn", report.k_nn}};
  cli::atomic_write(out_dir / "eval_report.json", eval_report.dump(2) + "\n");

  timings.stop();
  write_manifest(out_dir, "eval", {{"data", opt.input}, {"coords", opt.coords}},
                 {{"k_trust", opt.k_trust},
                  {"k_nn", opt.k_nn},
                  {"header", opt.common.header},
                  {"coords_header", !opt.no_coords_header},
                  {"label_column", label_column_json(opt.common.label_column)},
                  {"threads", max_threads()}},
                 opt.common.seed, eval_report, timings);
  return 0;
}

// ------------------------------------------------------------- simulate ----

struct SimulateOpts {
  CommonOpts common;
  int reps = 1;
  int n = 500;
  int dims = 2;
  int fit_dims = 0;  // 0 = same as dims; the canonical replication fits at
                     // the data dimension and evaluates the first `dims`
  int outer_iters = 3;
  std::string grid = "1.1:5:30";
};

int run_simulate(const SimulateOpts& opt) {
  if (opt.reps < 1) throw InvalidConfig("--reps must be >= 1");
  const int fit_dims = opt.fit_dims > 0 ? opt.fit_dims : opt.dims;
  if (fit_dims < opt.dims) throw InvalidConfig("--fit-dims must be >= --dims");
  resolve_threads(opt.common.threads);
  const fs::path out_dir(opt.common.out_dir);
  const NuGrid grid = parse_grid(opt.grid);
  cli::Timings timings;

  timings.start("simulate");
  std::vector<double> nu_stars, trust, nn, silhouette_scores, pearson, spearman;
  std::ostringstream metrics;
  metrics << "rep,nu_star,trustworthiness,nn_agreement,silhouette,pearson,spearman\n";
  char buf[64];
  auto field = [&](double v) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    metrics << ',' << buf;
  };

  for (int rep = 0; rep < opt.reps; ++rep) {
    const std::uint64_t rep_seed = mix_seed(opt.common.seed, static_cast<std::uint64_t>(rep));
    const Dataset raw = gen_heavy_tailed({.n = opt.n, .seed = rep_seed});
    const Dataset ds = standardize(raw, Standardization::median_unit);

    const AlternatingResult alt =
        alternating_tune(ds.X, fit_dims, opt.outer_iters, grid, rep_seed);
    const Matrix coords = alt.embedding.coords.leftCols(opt.dims);
    const EvalReport report = evaluate(ds.X, coords, &*ds.labels, 5, 10);

    nu_stars.push_back(alt.nu_star);
    trust.push_back(*report.trustworthiness);
    nn.push_back(*report.nn_agreement);
    silhouette_scores.push_back(*report.silhouette);
    pearson.push_back(report.pearson);
    spearman.push_back(report.spearman);

    metrics << rep;
    field(alt.nu_star);
    field(*report.trustworthiness);
    field(*report.nn_agreement);
    field(*report.silhouette);
    field(report.pearson);
    field(report.spearman);
    metrics << '\n';
  }

  timings.start("write");
  cli::atomic_write(out_dir / "metrics.csv", metrics.str());
  auto agg = [](const std::vector<double>& v) {
    return json{{"mean", mean_of(v)}, {"stderr", stderr_of(v)}};
  };
  const json aggregate{{"reps", opt.reps},
                       {"n", opt.n},
                       {"dims", opt.dims},
                       {"fit_dims", fit_dims},
                       {"outer_iters", opt.outer_iters},
                       {"seed", opt.common.seed},
                       {"nu_star", agg(nu_stars)},
                       {"trustworthiness", agg(trust)},
                       {"nn_agreement", agg(nn)},
                       {"silhouette", agg(silhouette_scores)},
                       {"pearson", agg(pearson)},
                       {"spearman", agg(spearman)}};
  cli::atomic_write(out_dir / "aggregate.json", aggregate.dump(2) + "\n");

  timings.stop();
  write_manifest(out_dir, "simulate", json::object(),
                 {{"reps", opt.reps},
                  {"n", opt.n},
                  {"dims", opt.dims},
                  {"fit_dims", fit_dims},
                  {"outer_iters", opt.outer_iters},
                  {"grid", opt.grid},
                  {"threads", max_threads()}},
                 opt.common.seed, aggregate, timings);
  return 0;
}

// ---------------------------------------------------------- contaminate ----

struct ContaminateOpts {
  CommonOpts common;
  std::string input;
  double fraction = 0.0;
  double factor = 10.0;
  std::string mode = "multiply";
};

int run_contaminate(const ContaminateOpts& opt) {
  resolve_threads(opt.common.threads);
  const fs::path out_dir(opt.common.out_dir);
  cli::Timings timings;

  timings.start("load");
  const Dataset ds =
      load_csv(opt.input, opt.common.header, parse_label_column(opt.common.label_column));

  timings.start("contaminate");
  ContaminationSpec spec;
  spec.fraction = opt.fraction;
  spec.factor = opt.factor;
  spec.seed = opt.common.seed;
  if (opt.mode == "multiply") {
    spec.mode = ContaminationMode::multiply_by_factor_sigma;
  } else if (opt.mode == "add") {
    spec.mode = ContaminationMode::add_factor_sigma;
  } else {
    throw InvalidConfig("--mode must be multiply or add, got '" + opt.mode + "'");
  }
  const Contaminated result = contaminate(ds, spec);

  timings.start("write");
  {
    fs::create_directories(out_dir);
    const fs::path out_csv = out_dir / "contaminated.csv";
    const fs::path tmp_csv = out_dir / ".tmp-contaminated.csv";
    write_csv(result.data, tmp_csv);  // 17-digit round-trip format
    fs::rename(tmp_csv, out_csv);
  }
  const json indices{{"rows", result.rows},
                     {"count", result.rows.size()},
                     {"fraction", spec.fraction},
                     {"factor", spec.factor},
                     {"mode", to_string(spec.mode)},
                     {"seed", spec.seed}};
  cli::atomic_write(out_dir / "indices.json", indices.dump(2) + "\n");

  timings.stop();
  write_manifest(out_dir, "contaminate", {{"data", opt.input}},
                 {{"fraction", opt.fraction},
                  {"factor", opt.factor},
                  {"mode", opt.mode},
                  {"header", opt.common.header},
                  {"label_column", label_column_json(opt.common.label_column)},
                  {"threads", max_threads()}},
                 opt.common.seed, indices, timings);
  return 0;
}

void add_common(CLI::App* cmd, CommonOpts& common) {
  cmd->add_option("-o,--out-dir", common.out_dir, "Output directory (created if missing)");
  cmd->add_option("--seed", common.seed, "RNG seed");
  cmd->add_option("--threads", common.threads,
                  "Worker thread cap (0 = GINI_MDS_THREADS env var, then all cores)");
}

void add_input_options(CLI::App* cmd, CommonOpts& common) {
  cmd->add_flag("--header", common.header, "Input CSV has a header row");
  cmd->add_option("--label-column", common.label_column,
                  "Label column (name with --header, or 0-based index)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Robust multidimensional scaling with generalized Gini pseudo-distances"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("gini-mds ") + kVersion);

  EmbedOpts embed_opts;
  CLI::App* embed_cmd = app.add_subcommand("embed", "Embed a CSV dataset to low dimension");
  embed_cmd->add_option("input", embed_opts.input, "Input CSV file")->required();
  embed_cmd->add_option("--metric", embed_opts.metric, "Distance metric")
      ->check(CLI::IsMember({"euclidean", "gini"}));
  embed_cmd->add_option("--nu", embed_opts.nu, "Gini hyperparameter (> 1)");
  embed_cmd->add_option("--dims", embed_opts.dims, "Embedding dimension");
  embed_cmd->add_option("--loss", embed_opts.loss, "MDS flavor")
      ->check(CLI::IsMember({"classical", "kruskal", "huber", "sammon", "smacof"}));
  embed_cmd->add_option("--standardize", embed_opts.standardize_mode,
                        "Feature standardization before distances")
      ->check(CLI::IsMember({"none", "mean", "median"}));
  embed_cmd->add_option("--huber-delta", embed_opts.huber_delta, "Huber threshold (default auto)");
  embed_cmd->add_option("--max-iters", embed_opts.max_iters, "Iteration cap for stress losses");
  embed_cmd->add_option("--rel-tol", embed_opts.rel_tol, "Relative stress tolerance");
  add_common(embed_cmd, embed_opts.common);
  add_input_options(embed_cmd, embed_opts.common);

  TuneOpts tune_opts;
  CLI::App* tune_cmd = app.add_subcommand("tune", "Select nu by K-fold Kruskal stress");
  tune_cmd->add_option("input", tune_opts.input, "Input CSV file")->required();
  tune_cmd->add_option("--grid", tune_opts.grid, "Nu grid as lo:hi:count (default 1.1:5:30)");
  tune_cmd->add_option("--folds", tune_opts.folds, "Number of folds (default 5)");
  tune_cmd->add_flag("--no-cv", tune_opts.no_cv, "Single whole-data fold (sets folds = 1)");
  tune_cmd->add_option("--dims", tune_opts.dims, "Embedding dimension");
  tune_cmd->add_option("--loss", tune_opts.loss, "Per-fold MDS flavor")
      ->check(CLI::IsMember({"classical", "kruskal", "huber", "sammon", "smacof"}));
  tune_cmd->add_option("--standardize", tune_opts.standardize_mode,
                       "Feature standardization before distances")
      ->check(CLI::IsMember({"none", "mean", "median"}));
  add_common(tune_cmd, tune_opts.common);
  add_input_options(tune_cmd, tune_opts.common);

  EvalOpts eval_opts;
  CLI::App* eval_cmd = app.add_subcommand("eval", "Score an embedding against its source data");
  eval_cmd->add_option("input", eval_opts.input, "Original data CSV")->required();
  eval_cmd->add_option("coords", eval_opts.coords, "Embedding coordinates CSV")->required();
  eval_cmd->add_option("--k-trust", eval_opts.k_trust, "Trustworthiness neighborhood size");
  eval_cmd->add_option("--k-nn", eval_opts.k_nn, "Label-agreement neighborhood size");
  eval_cmd->add_flag("--no-coords-header", eval_opts.no_coords_header,
                     "Coordinates CSV has no header row");
  add_common(eval_cmd, eval_opts.common);
  add_input_options(eval_cmd, eval_opts.common);

  SimulateOpts sim_opts;
  CLI::App* sim_cmd =
      app.add_subcommand("simulate", "Heavy-tailed replications with alternating Gini MDS");
  sim_cmd->add_option("--reps", sim_opts.reps, "Number of replications");
  sim_cmd->add_option("--n", sim_opts.n, "Rows per replication (default 500)");
  sim_cmd->add_option("--dims", sim_opts.dims, "Evaluated embedding components (default 2)");
  sim_cmd->add_option("--fit-dims", sim_opts.fit_dims,
                      "Sammon fit dimension (default = --dims; the canonical replication "
                      "fits at the data dimension and evaluates --dims components)");
  sim_cmd->add_option("-T,--outer-iters", sim_opts.outer_iters,
                      "Alternating outer iterations (default 3)");
  sim_cmd->add_option("--grid", sim_opts.grid, "Nu grid as lo:hi:count");
  add_common(sim_cmd, sim_opts.common);

  ContaminateOpts cont_opts;
  CLI::App* cont_cmd = app.add_subcommand("contaminate", "Inject seeded row contamination");
  cont_cmd->add_option("input", cont_opts.input, "Input CSV file")->required();
  cont_cmd->add_option("--fraction", cont_opts.fraction, "Fraction of rows to alter")->required();
  cont_cmd->add_option("--factor", cont_opts.factor, "Contamination factor (default 10)");
  cont_cmd->add_option("--mode", cont_opts.mode, "multiply (x *= factor*sigma) or add")
      ->check(CLI::IsMember({"multiply", "add"}));
  add_common(cont_cmd, cont_opts.common);
  add_input_options(cont_cmd, cont_opts.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << "run with --help for usage\n";
    return 2;
  }
  embed_opts.nu_given = embed_cmd->count("--nu") > 0;
  embed_opts.huber_delta_given = embed_cmd->count("--huber-delta") > 0;
  if (tune_cmd->parsed() && tune_opts.no_cv && tune_cmd->count("--folds") == 0) {
    tune_opts.folds = 1;
  }

  try {
    if (embed_cmd->parsed()) return run_embed(embed_opts);
    if (tune_cmd->parsed()) return run_tune(tune_opts);
    if (eval_cmd->parsed()) return run_eval(eval_opts);
    if (sim_cmd->parsed()) return run_simulate(sim_opts);
    if (cont_cmd->parsed()) return run_contaminate(cont_opts);
  } catch (const InvalidConfig& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 3;
  } catch (const InvalidInput& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 3;
  } catch (const DegenerateInput& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 3;
  } catch (const NumericFailure& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
