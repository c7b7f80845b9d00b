#pragma once

#include "netdist/distances.hpp"
#include "netdist/generators.hpp"

#include <json.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace netdist {

/// Null-versus-alternative population experiment.
///
/// For sample index i, three graphs are drawn from independent substreams
/// (stream 3i: G0, 3i+1: G0', 3i+2: G1). D0[i] = d(G0, G0') and
/// D1[i] = d(G0, G1), with the same three draws reused for every distance.
struct ExperimentConfig {
  EnsembleSpec null_spec;
  EnsembleSpec alt_spec;
  /// Null model is a random degree-sequence graph whose target degrees are
  /// those of the alternative draw at the same index (G1 is drawn first).
  bool null_degrees_from_alt = false;
  std::vector<DistanceSpec> distances;
  std::size_t n_samples = 500;
  std::uint64_t master_seed = 0;
  /// Worker threads; results do not depend on this.
  std::size_t threads = 1;

  void validate() const;
};

/// Whiskers at the 5th/95th percentile, box at the quartiles. Percentiles use
/// linear interpolation between closest ranks: position h = (N - 1) q.
struct BoxStats {
  double median = 0.0;
  double q1 = 0.0;
  double q3 = 0.0;
  double p5 = 0.0;
  double p95 = 0.0;
  double mean = 0.0;
};

/// Throws Error{EmptySample}.
BoxStats box_stats(std::span<const double> samples);

/// Linear-interpolated quantile of an ascending sample, q in [0, 1].
double quantile_sorted(std::span<const double> sorted, double q);

struct ScaledSampleSet {
  std::string distance_id;
  std::vector<double> d0;
  std::vector<double> d1;
  double mu0 = 0.0;
  double sigma0 = 0.0;  ///< sample standard deviation, n - 1 denominator
  std::vector<double> d1_hat;
  BoxStats stats;  ///< of d1_hat
  /// Per-index hash of the (G0, G0', G1) draws.
  std::vector<std::uint64_t> fingerprints;
};

/// d1_hat = (d1 - mu0) / sigma0. Throws Error{DegenerateNull} when
/// sigma0 < 1e-14 and Error{EmptySample} with fewer than two null samples.
ScaledSampleSet scale_samples(std::string distance_id, std::vector<double> d0,
                              std::vector<double> d1);

std::vector<ScaledSampleSet> run_experiment(const ExperimentConfig& cfg);

struct SweepPoint {
  std::size_t k = 0;
  ScaledSampleSet samples;
};

/// Spectral lambda_k distances for each k, sharing one set of draws and one
/// eigendecomposition per graph across all k. cfg.distances is ignored.
std::vector<SweepPoint> lambda_k_sweep(const ExperimentConfig& cfg, Representation rep,
                                       std::span<const std::size_t> k_values, double p_norm = 2.0);

struct SweepSpec {
  Representation representation = Representation::Adjacency;
  std::vector<std::size_t> k_values;
};

/// Experiment plus the lambda_k sweeps reported with it.
struct Benchmark {
  std::string name;
  ExperimentConfig config;
  std::vector<SweepSpec> sweeps;
};

/// Named scenarios: "sbm", "pa", "pa-vs-rddg", "ws", "lattice".
/// Throws Error{InvalidParams} for unknown names.
Benchmark preset(std::string_view name);
std::vector<std::string_view> preset_names();

void to_json(nlohmann::json& j, const DistanceSpec& spec);
void from_json(const nlohmann::json& j, DistanceSpec& spec);
void to_json(nlohmann::json& j, const BoxStats& stats);
void to_json(nlohmann::json& j, const ScaledSampleSet& set);
void to_json(nlohmann::json& j, const ExperimentConfig& cfg);
void from_json(const nlohmann::json& j, ExperimentConfig& cfg);
void to_json(nlohmann::json& j, const Benchmark& bench);
void from_json(const nlohmann::json& j, Benchmark& bench);

/// Parses "edit", "spectral_adjacency", or "spectral_adjacency:k=2:p=inf"
/// style names (also "eps=", "penalty=").
DistanceSpec parse_distance(std::string_view text);
Representation representation_from_string(std::string_view name);

}  // namespace netdist
