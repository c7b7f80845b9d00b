#include "netdist/cli.hpp"

#include "netdist/anomaly.hpp"
#include "netdist/error.hpp"
#include "netdist/experiment.hpp"
#include "netdist/generators.hpp"
#include "netdist/io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <thread>

namespace netdist::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Distance flags shared by compare and anomaly.
struct DistanceOptions {
  std::vector<std::string> names;
  bool all = false;
  std::vector<std::pair<DistanceKind, bool>> toggles;
  std::string k = "all";
  std::string p_norm = "2";
  std::string eps = "auto";
  std::string penalty = "auto";

  DistanceOptions() {
    for (auto kind : kAllDistanceKinds) toggles.emplace_back(kind, false);
  }

  void attach(CLI::App& app) {
    app.add_option("--distances", names, "Comma-separated distance names")->delimiter(',');
    app.add_flag("--all", all, "Every distance");
    for (auto& [kind, on] : toggles) {
      std::string flag(to_string(kind));
      std::replace(flag.begin(), flag.end(), '_', '-');
      app.add_flag("--" + flag, on);
    }
    app.add_option("--k", k, "Eigenvalues compared by spectral distances (int or all)");
    app.add_option("--p-norm", p_norm, "Spectral l_p norm (float or inf)");
    app.add_option("--eps", eps, "DeltaCon epsilon (float or auto)");
    app.add_option("--penalty", penalty, "Cross-component renormalized resistance (float or auto)");
  }

  std::vector<DistanceSpec> resolve(std::vector<DistanceKind> fallback) const {
    std::vector<DistanceKind> kinds;
    if (all) kinds.assign(kAllDistanceKinds.begin(), kAllDistanceKinds.end());
    for (const auto& [kind, on] : toggles) {
      if (on) kinds.push_back(kind);
    }
    std::vector<DistanceSpec> specs;
    for (const auto& name : names) {
      // Names may carry their own ":k=..." options; shared flags fill the rest.
      const auto head = std::string_view(name).substr(0, name.find(':'));
      if (name.find(':') == std::string::npos) {
        kinds.push_back(distance_kind_from_string(head));
      } else {
        specs.push_back(parse_distance(name));
      }
    }
    if (kinds.empty() && specs.empty()) kinds = std::move(fallback);
    const std::string options = ":k=" + k + ":p=" + p_norm + ":eps=" + eps + ":penalty=" + penalty;
    for (auto kind : kinds) {
      DistanceSpec spec = parse_distance(std::string(to_string(kind)) + options);
      if (!is_spectral(kind)) {
        spec.k.reset();
        spec.p_norm = 2.0;
      }
      if (kind != DistanceKind::DeltaCon) spec.eps.reset();
      if (kind != DistanceKind::ResistanceRenormalized) spec.penalty.reset();
      if (std::none_of(specs.begin(), specs.end(),
                       [&](const DistanceSpec& s) { return s.id() == spec.id(); })) {
        specs.push_back(spec);
      }
    }
    return specs;
  }
};

json params_json(const DistanceOptions& opts) {
  return {{"k", opts.k}, {"p_norm", opts.p_norm}, {"eps", opts.eps}, {"penalty", opts.penalty}};
}

std::size_t default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidParams, "cannot write " + path.string());
  out << text;
}

std::string fmt(double x) { return io::format_double(x); }

// Wall-clock seconds per named phase, reported only in the manifest.
class PhaseTimer {
 public:
  template <class F>
  auto run(const std::string& phase, F&& f) {
    const auto start = std::chrono::steady_clock::now();
    if constexpr (std::is_void_v<decltype(f())>) {
      f();
      record(phase, start);
    } else {
      auto result = f();
      record(phase, start);
      return result;
    }
  }
  const json& timing() const { return timing_; }

 private:
  void record(const std::string& phase, std::chrono::steady_clock::time_point start) {
    timing_[phase] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  json timing_ = json::object();
};

json manifest(std::string_view command, json config, std::vector<std::string> outputs,
              const PhaseTimer& timer, std::size_t threads) {
  return {{"tool", "netdist"},
          {"version", NETDIST_VERSION},
          {"command", command},
          {"config", std::move(config)},
          {"outputs", std::move(outputs)},
          {"run", {{"threads", threads}, {"timing_seconds", timer.timing()}}}};
}

// ---- compare ---------------------------------------------------------------

struct CompareArgs {
  std::string path1;
  std::string path2;
  DistanceOptions distances;
  std::string out;
};

int cmd_compare(const CompareArgs& args, std::ostream& out) {
  const Graph g1 = io::read_edge_list(fs::path(args.path1));
  const Graph g2 = io::read_edge_list(fs::path(args.path2));
  const auto specs = args.distances.resolve({kAllDistanceKinds.begin(), kAllDistanceKinds.end()});
  json values = json::object();
  for (const auto& spec : specs) values[spec.id()] = distance(g1, g2, spec);
  json report = {{"distances", values},
                 {"params", params_json(args.distances)},
                 {"graphs", {{{"path", args.path1}, {"n", g1.n()}, {"m", g1.m()}},
                             {{"path", args.path2}, {"n", g2.n()}, {"m", g2.m()}}}}};
  const std::string text = report.dump(2) + "\n";
  if (args.out.empty()) {
    out << text;
  } else {
    write_text(args.out, text);
  }
  return kOk;
}

// ---- benchmark -------------------------------------------------------------

struct BenchmarkArgs {
  std::string preset;
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> samples;
  std::size_t threads = default_threads();
  std::string out = ".";
  bool skip_sweeps = false;
};

std::string boxstats_row(const std::string& id, const std::string& k, const BoxStats& s) {
  return id + "," + k + "," + fmt(s.median) + "," + fmt(s.q1) + "," + fmt(s.q3) + "," + fmt(s.p5) +
         "," + fmt(s.p95) + "\n";
}

constexpr const char* kBoxstatsHeader = "distance_id,k,median,q1,q3,p5,p95\n";

int cmd_benchmark(const BenchmarkArgs& args, std::ostream& out) {
  Benchmark bench;
  if (!args.preset.empty()) {
    bench = preset(args.preset);
  } else {
    std::ifstream in(args.config);
    if (!in) throw Error(ErrorKind::InvalidParams, "cannot open config " + args.config);
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw Error(ErrorKind::InvalidParams, std::string("config is not valid JSON: ") + e.what());
    }
    bench = j.get<Benchmark>();
  }
  if (args.seed) {
    bench.config.master_seed = *args.seed;
  } else if (const char* env = std::getenv("NETDIST_SEED")) {
    try {
      bench.config.master_seed = std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidParams, std::string("NETDIST_SEED is not an integer: ") + env);
    }
  }
  if (args.samples) bench.config.n_samples = *args.samples;
  if (args.skip_sweeps) bench.sweeps.clear();
  bench.config.threads = args.threads;
  bench.config.validate();

  PhaseTimer timer;
  const auto sets = timer.run("experiment", [&] { return run_experiment(bench.config); });
  std::vector<std::pair<SweepSpec, std::vector<SweepPoint>>> sweeps;
  for (const auto& s : bench.sweeps) {
    auto points = timer.run("sweep_" + std::string(to_string(s.representation)),
                            [&] { return lambda_k_sweep(bench.config, s.representation, s.k_values); });
    sweeps.emplace_back(s, std::move(points));
  }

  const fs::path dir(args.out);
  fs::create_directories(dir);
  std::vector<std::string> outputs{"results.json", "boxstats.csv"};

  json results = {{"benchmark", bench}, {"results", sets}};
  auto sweep_json = json::array();
  std::string box = kBoxstatsHeader;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const auto& spec = bench.config.distances[i];
    const std::string k = is_spectral(spec.kind) ? (spec.k ? std::to_string(*spec.k) : "all") : "";
    box += boxstats_row(sets[i].distance_id, k, sets[i].stats);
  }
  std::string sweep_csv = kBoxstatsHeader;
  for (const auto& [s, points] : sweeps) {
    json entry = {{"representation", to_string(s.representation)}, {"points", json::array()}};
    for (const auto& p : points) {
      entry["points"].push_back({{"k", p.k}, {"samples", p.samples}});
      sweep_csv += boxstats_row(p.samples.distance_id, std::to_string(p.k), p.samples.stats);
    }
    sweep_json.push_back(std::move(entry));
  }
  results["sweeps"] = std::move(sweep_json);

  write_text(dir / "results.json", results.dump(2) + "\n");
  write_text(dir / "boxstats.csv", box);
  if (!sweeps.empty()) {
    write_text(dir / "sweeps.csv", sweep_csv);
    outputs.push_back("sweeps.csv");
  }
  write_text(dir / "manifest.json",
             manifest("benchmark", bench, outputs, timer, args.threads).dump(2) + "\n");

  for (const auto& set : sets) {
    out << set.distance_id << " median=" << fmt(set.stats.median) << "\n";
  }
  return kOk;
}

// ---- anomaly ---------------------------------------------------------------

struct AnomalyArgs {
  std::string events;
  std::string edges_dir;
  std::optional<double> t_start;
  std::optional<double> t_end;
  std::size_t intervals = 0;
  std::optional<std::size_t> n;
  DistanceOptions distances;
  std::size_t top = 5;
  std::size_t threads = default_threads();
  std::string out = ".";
};

int cmd_anomaly(const AnomalyArgs& args, std::ostream& out) {
  GraphSequence seq;
  json input;
  if (!args.events.empty()) {
    const auto events = io::read_contacts(fs::path(args.events));
    double lo = 0.0;
    double hi = 1.0;
    std::size_t n = 1;
    if (!events.empty()) {
      lo = hi = events.front().t;
      for (const auto& e : events) {
        lo = std::min(lo, e.t);
        hi = std::max(hi, e.t);
        n = std::max<std::size_t>(n, static_cast<std::size_t>(std::max(e.u, e.v)) + 1);
      }
      hi += 1.0;  // half-open windows must include the last event
    }
    const double t_start = args.t_start.value_or(lo);
    const double t_end = args.t_end.value_or(hi);
    if (args.n) n = *args.n;
    if (args.intervals < 2) throw Error(ErrorKind::InvalidParams, "--intervals must be at least 2");
    seq.graphs = bucket_contacts(events, t_start, t_end, args.intervals, n);
    const double width = (t_end - t_start) / static_cast<double>(args.intervals);
    for (std::size_t i = 0; i < args.intervals; ++i) {
      seq.interval_labels.push_back(t_start + width * static_cast<double>(i));
    }
    input = {{"events", args.events}, {"t_start", t_start}, {"t_end", t_end},
             {"intervals", args.intervals}, {"n", n}};
  } else {
    for (std::size_t i = 0;; ++i) {
      std::ostringstream name;
      name << std::setw(4) << std::setfill('0') << i << ".edges";
      const fs::path path = fs::path(args.edges_dir) / name.str();
      if (!fs::exists(path)) break;
      seq.graphs.push_back(io::read_edge_list(path));
      seq.interval_labels.push_back(static_cast<double>(i));
    }
    // Edge lists infer n from the largest id; align every step to a shared n.
    std::size_t n = args.n.value_or(0);
    for (const auto& g : seq.graphs) n = std::max(n, g.n());
    for (auto& g : seq.graphs) {
      if (g.n() < n) {
        std::vector<EdgeInput> edges;
        for (const auto& e : g.edges()) edges.push_back({e.i, e.j, e.w});
        g = build_graph(n, edges);
      }
    }
    input = {{"edges_dir", args.edges_dir}, {"graphs", seq.graphs.size()}, {"n", n}};
  }

  const auto specs = args.distances.resolve({DistanceKind::Edit});
  PhaseTimer timer;
  std::vector<DistanceSeries> all;
  for (const auto& spec : specs) {
    all.push_back(timer.run(spec.id(), [&] { return consecutive_distances(seq, spec, args.threads); }));
  }

  const fs::path dir(args.out);
  fs::create_directories(dir);
  std::vector<std::string> outputs;
  json summary = json::object();
  for (const auto& series : all) {
    std::string csv = "index,t_label,raw,normalized\n";
    for (std::size_t i = 0; i < series.raw.size(); ++i) {
      csv += std::to_string(i) + "," + fmt(seq.interval_labels[i + 1]) + "," + fmt(series.raw[i]) +
             "," + fmt(series.normalized[i]) + "\n";
    }
    const std::string file = "series_" + series.distance_id + ".csv";
    write_text(dir / file, csv);
    outputs.push_back(file);
    auto top = json::array();
    for (const auto& a : top_anomalies(series, std::min(args.top, series.normalized.size()))) {
      top.push_back({{"index", a.index}, {"value", a.value}});
    }
    summary[series.distance_id] = {{"top", top}, {"notices", series.notices}};
    for (const auto& notice : series.notices) out << "notice: " << notice << "\n";
  }
  json config = {{"input", input}, {"distances", specs}, {"top", args.top}};
  write_text(dir / "manifest.json",
             manifest("anomaly", config, outputs, timer, args.threads).dump(2) + "\n");
  out << summary.dump(2) << "\n";
  return kOk;
}

// ---- generate --------------------------------------------------------------

struct GenerateArgs {
  std::string model;
  std::optional<std::size_t> n;
  std::optional<double> p;
  std::optional<double> q;
  std::optional<std::size_t> l;
  std::optional<std::size_t> k_ring;
  std::optional<double> beta;
  std::optional<std::size_t> rows;
  std::optional<std::size_t> cols;
  std::vector<std::size_t> degrees;
  bool connected = false;
  std::size_t max_retries = 1000;
  std::size_t count = 1;
  std::optional<std::uint64_t> seed;
  std::string out = ".";
};

template <class T>
T required(const std::optional<T>& value, const char* flag, const std::string& model) {
  if (!value) throw Error(ErrorKind::InvalidParams, std::string(flag) + " is required for " + model);
  return *value;
}

EnsembleSpec ensemble_from_flags(const GenerateArgs& a) {
  EnsembleSpec spec;
  spec.require_connected = a.connected;
  spec.max_retries = a.max_retries;
  const std::string& m = a.model;
  if (m == "lattice2d") {
    const auto rows = required(a.rows, "--rows", m);
    const auto cols = required(a.cols, "--cols", m);
    spec.params = Lattice2dParams{rows, cols};
    spec.n = a.n.value_or(rows * cols);
  } else if (m == "random_degree_sequence" || m == "rds") {
    if (a.degrees.empty()) throw Error(ErrorKind::InvalidParams, "--degrees is required for " + m);
    spec.params = DegreeSequenceParams{a.degrees};
    spec.n = a.n.value_or(a.degrees.size());
  } else {
    spec.n = required(a.n, "--n", m);
    if (m == "gnp") {
      spec.params = GnpParams{required(a.p, "--p", m)};
    } else if (m == "sbm2") {
      spec.params = Sbm2Params{required(a.p, "--p", m), required(a.q, "--q", m)};
    } else if (m == "preferential_attachment" || m == "pa") {
      spec.params = PreferentialAttachmentParams{required(a.l, "--l", m)};
    } else if (m == "watts_strogatz" || m == "ws") {
      spec.params = WattsStrogatzParams{required(a.k_ring, "--k-ring", m), required(a.beta, "--beta", m)};
    } else {
      throw Error(ErrorKind::InvalidParams, "unknown model '" + m + "'");
    }
  }
  spec.validate();
  return spec;
}

int cmd_generate(const GenerateArgs& args, std::ostream& out) {
  const EnsembleSpec spec = ensemble_from_flags(args);
  std::uint64_t seed = 0;
  if (args.seed) {
    seed = *args.seed;
  } else if (const char* env = std::getenv("NETDIST_SEED")) {
    try {
      seed = std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidParams, std::string("NETDIST_SEED is not an integer: ") + env);
    }
  }

  PhaseTimer timer;
  std::vector<Graph> graphs;
  timer.run("sample", [&] {
    for (std::size_t i = 0; i < args.count; ++i) graphs.push_back(sample(spec, Seed{seed, i}));
  });

  const fs::path dir(args.out);
  fs::create_directories(dir);
  std::vector<std::string> outputs;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    std::ostringstream name;
    name << std::setw(4) << std::setfill('0') << i << ".edges";
    io::write_edge_list(dir / name.str(), graphs[i]);
    outputs.push_back(name.str());
  }
  json config = {{"ensemble", spec}, {"count", args.count}, {"seed", seed}};
  write_text(dir / "manifest.json", manifest("generate", config, outputs, timer, 1).dump(2) + "\n");
  out << "wrote " << graphs.size() << " graphs to " << dir.string() << "\n";
  return kOk;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SizeMismatch:
    case ErrorKind::Disconnected:
      return kCorrespondence;
    case ErrorKind::DegenerateNull:
      return kDegenerateNull;
    case ErrorKind::ZeroMean:
      return kZeroMean;
    case ErrorKind::RetriesExhausted:
      return kRetriesExhausted;
    default:
      return kUsage;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph distances, random-graph benchmarks and anomaly detection", "netdist"};
  app.set_version_flag("--version", NETDIST_VERSION);
  app.require_subcommand(1);

  CompareArgs compare;
  auto* c = app.add_subcommand("compare", "Distances between two edge-list files");
  c->add_option("path1", compare.path1)->required();
  c->add_option("path2", compare.path2)->required();
  c->add_option("--out", compare.out, "Write the JSON report to this file");
  compare.distances.attach(*c);

  BenchmarkArgs bench;
  auto* b = app.add_subcommand("benchmark", "Null-versus-alternative population experiment");
  auto* preset_opt = b->add_option("--preset", bench.preset, "sbm, pa, pa-vs-rddg, ws or lattice");
  auto* config_opt = b->add_option("--config", bench.config, "Benchmark JSON file");
  preset_opt->excludes(config_opt);
  b->add_option("--seed", bench.seed);
  b->add_option("--samples", bench.samples);
  b->add_option("--threads", bench.threads)->check(CLI::PositiveNumber);
  b->add_option("--out", bench.out, "Output directory");
  b->add_flag("--skip-sweeps", bench.skip_sweeps, "Do not run the lambda_k sweeps");

  AnomalyArgs anomaly;
  auto* a = app.add_subcommand("anomaly", "Consecutive-step distance series over a graph sequence");
  auto* events_opt = a->add_option("--events", anomaly.events, "Contact CSV with header t,u,v");
  auto* dir_opt = a->add_option("--edges-dir", anomaly.edges_dir, "Directory of 0000.edges, 0001.edges, ...");
  events_opt->excludes(dir_opt);
  a->add_option("--t-start", anomaly.t_start);
  a->add_option("--t-end", anomaly.t_end);
  a->add_option("--intervals", anomaly.intervals);
  a->add_option("--n", anomaly.n, "Vertex count");
  a->add_option("--top", anomaly.top, "Anomalies reported per distance");
  a->add_option("--threads", anomaly.threads)->check(CLI::PositiveNumber);
  a->add_option("--out", anomaly.out, "Output directory");
  anomaly.distances.attach(*a);

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Sample graphs from a random-graph model");
  g->add_option("--model", gen.model)->required();
  g->add_option("--n", gen.n);
  g->add_option("--p", gen.p);
  g->add_option("--q", gen.q);
  g->add_option("--l", gen.l);
  g->add_option("--k-ring", gen.k_ring);
  g->add_option("--beta", gen.beta);
  g->add_option("--rows", gen.rows);
  g->add_option("--cols", gen.cols);
  g->add_option("--degrees", gen.degrees)->delimiter(',');
  g->add_flag("--connected", gen.connected);
  g->add_option("--max-retries", gen.max_retries);
  g->add_option("--count", gen.count);
  g->add_option("--seed", gen.seed);
  g->add_option("--out", gen.out, "Output directory");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForVersion&) {
    out << NETDIST_VERSION << "\n";
    return kOk;
  } catch (const CLI::Success&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  try {
    if (c->parsed()) return cmd_compare(compare, out);
    if (b->parsed()) {
      if (bench.preset.empty() && bench.config.empty()) {
        throw Error(ErrorKind::InvalidParams, "benchmark needs --preset or --config");
      }
      return cmd_benchmark(bench, out);
    }
    if (a->parsed()) {
      if (anomaly.events.empty() && anomaly.edges_dir.empty()) {
        throw Error(ErrorKind::InvalidParams, "anomaly needs --events or --edges-dir");
      }
      return cmd_anomaly(anomaly, out);
    }
    return cmd_generate(gen, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace netdist::cli
