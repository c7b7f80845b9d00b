#include "netdist/experiment.hpp"

#include "netdist/error.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>

namespace netdist {

namespace {

enum Role : std::uint64_t { kNull = 0, kNullPrime = 1, kAlt = 2 };

struct Draws {
  std::array<Graph, 3> graphs;  // indexed by Role
  std::uint64_t fingerprint = 0;
};

Draws draw(const ExperimentConfig& cfg, std::size_t index) {
  auto seed = [&](Role role) { return Seed{cfg.master_seed, 3 * index + role}; };
  Draws d;
  d.graphs[kAlt] = sample(cfg.alt_spec, seed(kAlt));
  if (cfg.null_degrees_from_alt) {
    EnsembleSpec null_spec = cfg.null_spec;
    DegreeSequenceParams params;
    for (std::size_t v = 0; v < d.graphs[kAlt].n(); ++v) {
      params.degrees.push_back(d.graphs[kAlt].degree(static_cast<Vertex>(v)));
    }
    null_spec.n = params.degrees.size();
    null_spec.params = std::move(params);
    d.graphs[kNull] = sample(null_spec, seed(kNull));
    d.graphs[kNullPrime] = sample(null_spec, seed(kNullPrime));
  } else {
    d.graphs[kNull] = sample(cfg.null_spec, seed(kNull));
    d.graphs[kNullPrime] = sample(cfg.null_spec, seed(kNullPrime));
  }
  std::uint64_t h = 0;
  for (const auto& g : d.graphs) h = splitmix64(h ^ g.fingerprint());
  d.fingerprint = h;
  return d;
}

// Lazily computed per-graph representations, so each eigendecomposition or
// matrix inverse runs once per graph no matter how many distances use it.
class GraphCache {
 public:
  explicit GraphCache(const Graph& g) : g_(g) {}

  const std::vector<double>& spectrum_of(Representation rep) {
    auto& slot = spectra_[static_cast<std::size_t>(rep)];
    if (!slot) slot = spectrum(g_, rep).values;
    return *slot;
  }

  const Eigen::MatrixXd& resistance() {
    if (!resistance_) resistance_ = resistance_matrix(g_);
    return *resistance_;
  }

  const Eigen::MatrixXd& renormalized(std::optional<double> penalty) {
    const double key = penalty.value_or(static_cast<double>(g_.n()));
    auto it = renormalized_.find(key);
    if (it == renormalized_.end()) {
      it = renormalized_.emplace(key, renormalized_resistance_matrix(g_, key)).first;
    }
    return it->second;
  }

  const Eigen::MatrixXd& fbp(double eps) {
    auto it = fbp_.find(eps);
    if (it == fbp_.end()) it = fbp_.emplace(eps, fbp_matrix(g_, eps)).first;
    return it->second;
  }

  const Signature& signature() {
    if (!signature_) signature_ = netsimile_signature(g_);
    return *signature_;
  }

  const Graph& graph() const { return g_; }

 private:
  const Graph& g_;
  std::array<std::optional<std::vector<double>>, 3> spectra_;
  std::optional<Eigen::MatrixXd> resistance_;
  std::map<double, Eigen::MatrixXd> renormalized_;
  std::map<double, Eigen::MatrixXd> fbp_;
  std::optional<Signature> signature_;
};

double cached_distance(GraphCache& a, GraphCache& b, const DistanceSpec& spec) {
  switch (spec.kind) {
    case DistanceKind::SpectralAdjacency:
    case DistanceKind::SpectralLaplacian:
    case DistanceKind::SpectralNormalizedLaplacian: {
      const auto rep = representation_of(spec.kind);
      return spectrum_distance(a.spectrum_of(rep), b.spectrum_of(rep), spec.k, spec.p_norm);
    }
    case DistanceKind::Edit: return edit_distance(a.graph(), b.graph());
    case DistanceKind::Resistance:
      if (a.graph().n() != b.graph().n()) return resistance_distance(a.graph(), b.graph(), false);
      return matrix_l1_distance(a.resistance(), b.resistance());
    case DistanceKind::ResistanceRenormalized:
      if (a.graph().n() != b.graph().n()) {
        return resistance_distance(a.graph(), b.graph(), true, spec.penalty);
      }
      return matrix_l1_distance(a.renormalized(spec.penalty), b.renormalized(spec.penalty));
    case DistanceKind::DeltaCon: {
      if (a.graph().n() != b.graph().n()) return deltacon_distance(a.graph(), b.graph(), spec.eps);
      const double eps = deltacon_eps(a.graph(), b.graph(), spec.eps);
      return matusita_distance(a.fbp(eps), b.fbp(eps));
    }
    case DistanceKind::NetSimile:
      return canberra_distance(a.signature().values, b.signature().values);
  }
  throw Error(ErrorKind::InvalidParams, "unhandled distance kind");
}

// Shared driver: `columns` output series, `eval` fills d0/d1 for one index.
using Evaluator = std::function<void(std::array<GraphCache, 3>&, std::span<double> d0,
                                     std::span<double> d1)>;

std::vector<ScaledSampleSet> collect(const ExperimentConfig& cfg,
                                     const std::vector<std::string>& ids, const Evaluator& eval) {
  cfg.validate();
  const std::size_t columns = ids.size();
  const std::size_t samples = cfg.n_samples;
  std::vector<double> d0(samples * columns), d1(samples * columns);
  std::vector<std::uint64_t> fingerprints(samples);

  detail::parallel_for(samples, cfg.threads, [&](std::size_t i) {
    const Draws draws = draw(cfg, i);
    fingerprints[i] = draws.fingerprint;
    std::array<GraphCache, 3> caches{GraphCache(draws.graphs[0]), GraphCache(draws.graphs[1]),
                                     GraphCache(draws.graphs[2])};
    eval(caches, std::span(d0).subspan(i * columns, columns),
         std::span(d1).subspan(i * columns, columns));
  });

  std::vector<ScaledSampleSet> out;
  out.reserve(columns);
  for (std::size_t c = 0; c < columns; ++c) {
    std::vector<double> col0(samples), col1(samples);
    for (std::size_t i = 0; i < samples; ++i) {
      col0[i] = d0[i * columns + c];
      col1[i] = d1[i * columns + c];
    }
    auto set = scale_samples(ids[c], std::move(col0), std::move(col1));
    set.fingerprints = fingerprints;
    out.push_back(std::move(set));
  }
  return out;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (n_samples < 2) throw Error(ErrorKind::InvalidParams, "n_samples must be >= 2");
  if (!null_degrees_from_alt) null_spec.validate();
  alt_spec.validate();
  if (null_degrees_from_alt && !std::holds_alternative<DegreeSequenceParams>(null_spec.params)) {
    throw Error(ErrorKind::InvalidParams,
                "null_degrees_from_alt requires a random_degree_sequence null model");
  }
  for (const auto& d : distances) d.validate();
}

double quantile_sorted(std::span<const double> sorted, double q) {
  if (sorted.empty()) throw Error(ErrorKind::EmptySample, "quantile of an empty sample");
  const double h = (static_cast<double>(sorted.size()) - 1.0) * q;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

BoxStats box_stats(std::span<const double> samples) {
  if (samples.empty()) throw Error(ErrorKind::EmptySample, "box statistics of an empty sample");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  BoxStats s;
  s.median = quantile_sorted(sorted, 0.5);
  s.q1 = quantile_sorted(sorted, 0.25);
  s.q3 = quantile_sorted(sorted, 0.75);
  s.p5 = quantile_sorted(sorted, 0.05);
  s.p95 = quantile_sorted(sorted, 0.95);
  s.mean = std::accumulate(samples.begin(), samples.end(), 0.0) / static_cast<double>(samples.size());
  return s;
}

ScaledSampleSet scale_samples(std::string distance_id, std::vector<double> d0,
                              std::vector<double> d1) {
  if (d0.size() < 2) throw Error(ErrorKind::EmptySample, "need at least two null samples");
  ScaledSampleSet set;
  set.distance_id = std::move(distance_id);
  const auto n = static_cast<double>(d0.size());
  set.mu0 = std::accumulate(d0.begin(), d0.end(), 0.0) / n;
  double ss = 0.0;
  for (double x : d0) ss += (x - set.mu0) * (x - set.mu0);
  set.sigma0 = std::sqrt(ss / (n - 1.0));
  if (set.sigma0 < 1e-14) {
    throw Error(ErrorKind::DegenerateNull,
                set.distance_id + ": null distances have zero spread (sigma0 = " +
                    std::to_string(set.sigma0) + ")");
  }
  set.d1_hat.reserve(d1.size());
  for (double x : d1) set.d1_hat.push_back((x - set.mu0) / set.sigma0);
  set.d0 = std::move(d0);
  set.d1 = std::move(d1);
  set.stats = box_stats(set.d1_hat);
  return set;
}

std::vector<ScaledSampleSet> run_experiment(const ExperimentConfig& cfg) {
  std::vector<std::string> ids;
  for (const auto& d : cfg.distances) ids.push_back(d.id());
  return collect(cfg, ids, [&](std::array<GraphCache, 3>& c, std::span<double> d0,
                               std::span<double> d1) {
    for (std::size_t j = 0; j < cfg.distances.size(); ++j) {
      d0[j] = cached_distance(c[kNull], c[kNullPrime], cfg.distances[j]);
      d1[j] = cached_distance(c[kNull], c[kAlt], cfg.distances[j]);
    }
  });
}

std::vector<SweepPoint> lambda_k_sweep(const ExperimentConfig& cfg, Representation rep,
                                       std::span<const std::size_t> k_values, double p_norm) {
  const std::size_t n_max = std::max(cfg.null_spec.n, cfg.alt_spec.n);
  std::vector<std::string> ids;
  std::vector<DistanceSpec> specs;
  for (std::size_t k : k_values) {
    if (k < 1 || k > n_max) {
      throw Error(ErrorKind::KOutOfRange, "sweep k = " + std::to_string(k) + " outside [1, " +
                                              std::to_string(n_max) + "]");
    }
    DistanceSpec spec;
    spec.kind = rep == Representation::Adjacency       ? DistanceKind::SpectralAdjacency
                : rep == Representation::Laplacian     ? DistanceKind::SpectralLaplacian
                                                       : DistanceKind::SpectralNormalizedLaplacian;
    spec.k = k;
    spec.p_norm = p_norm;
    spec.validate();
    ids.push_back(spec.id());
    specs.push_back(spec);
  }
  auto sets = collect(cfg, ids, [&](std::array<GraphCache, 3>& c, std::span<double> d0,
                                    std::span<double> d1) {
    for (std::size_t j = 0; j < specs.size(); ++j) {
      d0[j] = cached_distance(c[kNull], c[kNullPrime], specs[j]);
      d1[j] = cached_distance(c[kNull], c[kAlt], specs[j]);
    }
  });
  std::vector<SweepPoint> out;
  for (std::size_t j = 0; j < sets.size(); ++j) out.push_back({k_values[j], std::move(sets[j])});
  return out;
}

}  // namespace netdist
