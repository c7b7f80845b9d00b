#include "netdist/error.hpp"
#include "netdist/experiment.hpp"

#include <numeric>
#include <string>

namespace netdist {

namespace {

constexpr std::size_t kSize = 100;
constexpr std::size_t kSamples = 500;
constexpr std::uint64_t kDefaultSeed = 20180101;

DistanceSpec spec(DistanceKind kind, std::optional<std::size_t> k = std::nullopt) {
  DistanceSpec s;
  s.kind = kind;
  s.k = k;
  return s;
}

std::vector<DistanceSpec> standard_distances(bool renormalized_resistance) {
  return {spec(DistanceKind::SpectralAdjacency),
          spec(DistanceKind::SpectralLaplacian),
          spec(DistanceKind::SpectralNormalizedLaplacian),
          spec(DistanceKind::Edit),
          spec(renormalized_resistance ? DistanceKind::ResistanceRenormalized
                                       : DistanceKind::Resistance),
          spec(DistanceKind::DeltaCon),
          spec(DistanceKind::NetSimile)};
}

// The smallest Laplacian eigenvalue is 0 on every graph, so Laplacian sweeps
// start at k = 2.
std::vector<std::size_t> sweep_ks(std::size_t first) {
  std::vector<std::size_t> ks;
  for (std::size_t k : {1, 2, 3, 5, 10, 20, 30, 50, 70, 90, 100}) {
    if (k >= first) ks.push_back(k);
  }
  return ks;
}

std::vector<SweepSpec> all_sweeps() {
  return {{Representation::Adjacency, sweep_ks(1)},
          {Representation::Laplacian, sweep_ks(2)},
          {Representation::NormalizedLaplacian, sweep_ks(2)}};
}

EnsembleSpec ensemble(std::size_t n, ModelParams params, bool connected) {
  EnsembleSpec e;
  e.n = n;
  e.params = std::move(params);
  e.require_connected = connected;
  return e;
}

ExperimentConfig base(EnsembleSpec null_spec, EnsembleSpec alt_spec) {
  ExperimentConfig cfg;
  cfg.null_spec = std::move(null_spec);
  cfg.alt_spec = std::move(alt_spec);
  cfg.n_samples = kSamples;
  cfg.master_seed = kDefaultSeed;
  return cfg;
}

}  // namespace

std::vector<std::string_view> preset_names() { return {"sbm", "pa", "pa-vs-rddg", "ws", "lattice"}; }

Benchmark preset(std::string_view name) {
  Benchmark b;
  b.name = std::string(name);
  if (name == "sbm") {
    // G(n, 0.12) against two balanced communities with p/q = 19.
    b.config = base(ensemble(kSize, GnpParams{0.12}, true),
                    ensemble(kSize, Sbm2Params{0.228, 0.012}, true));
    b.config.distances = standard_distances(false);
    b.config.distances.push_back(spec(DistanceKind::SpectralAdjacency, 2));
    b.config.distances.push_back(spec(DistanceKind::SpectralNormalizedLaplacian, 2));
    b.sweeps = all_sweeps();
  } else if (name == "pa") {
    // l = 6; the volume-matched p(6) = 564/4950 is rounded to 0.12.
    b.config = base(ensemble(kSize, GnpParams{0.12}, true),
                    ensemble(kSize, PreferentialAttachmentParams{6}, true));
    b.config.distances = standard_distances(false);
    b.sweeps = all_sweeps();
  } else if (name == "pa-vs-rddg") {
    b.config = base(ensemble(kSize, DegreeSequenceParams{}, true),
                    ensemble(kSize, PreferentialAttachmentParams{6}, true));
    b.config.null_degrees_from_alt = true;
    b.config.distances = standard_distances(false);
    b.sweeps = all_sweeps();
  } else if (name == "ws") {
    // The volume-matched null is sparse and usually disconnected, so it is not
    // conditioned on connectivity and resistance uses the renormalized form.
    auto alt = ensemble(kSize, WattsStrogatzParams{4, 0.1}, true);
    b.config = base(ensemble(kSize, GnpParams{volume_match_gnp(alt)}, false), alt);
    b.config.distances = standard_distances(true);
    b.sweeps = all_sweeps();
  } else if (name == "lattice") {
    // Deterministic 10x10 grid against random graphs with its degree sequence.
    auto alt = ensemble(kSize, Lattice2dParams{10, 10}, false);
    DegreeSequenceParams degrees;
    const Graph grid = sample(alt, Seed{});
    for (std::size_t v = 0; v < grid.n(); ++v) degrees.degrees.push_back(grid.degree(static_cast<Vertex>(v)));
    b.config = base(ensemble(kSize, std::move(degrees), true), alt);
    b.config.distances = standard_distances(false);
    b.sweeps = all_sweeps();
  } else {
    throw Error(ErrorKind::InvalidParams, "unknown preset '" + std::string(name) + "'");
  }
  return b;
}

}  // namespace netdist
