#pragma once

#include "netdist/graph.hpp"
#include "netdist/rng.hpp"

#include <json.hpp>

#include <string_view>
#include <variant>
#include <vector>

namespace netdist {

struct GnpParams {
  double p = 0.0;
};

/// Two balanced communities {0, ..., ceil(n/2) - 1} and the rest.
struct Sbm2Params {
  double p = 0.0;  ///< within-community edge probability
  double q = 0.0;  ///< cross-community edge probability
};

struct PreferentialAttachmentParams {
  std::size_t l = 1;
};

struct WattsStrogatzParams {
  std::size_t k_ring = 2;
  double beta = 0.0;
};

/// An empty degree list is allowed in experiment configs, where the degrees
/// are taken from the alternative draw at run time.
struct DegreeSequenceParams {
  std::vector<std::size_t> degrees;
};

struct Lattice2dParams {
  std::size_t rows = 1;
  std::size_t cols = 1;
};

using ModelParams = std::variant<GnpParams, Sbm2Params, PreferentialAttachmentParams,
                                 WattsStrogatzParams, DegreeSequenceParams, Lattice2dParams>;

struct EnsembleSpec {
  std::size_t n = 0;
  ModelParams params;
  bool require_connected = false;
  std::size_t max_retries = 1000;

  /// "gnp", "sbm2", "preferential_attachment", "watts_strogatz",
  /// "random_degree_sequence" or "lattice2d".
  std::string_view model() const noexcept;

  /// Throws Error{InvalidParams}.
  void validate() const;
};

/// One draw. With require_connected, disconnected draws are discarded and
/// redrawn from a fresh substream; Error{RetriesExhausted} after max_retries
/// rejections.
Graph sample(const EnsembleSpec& spec, Seed seed);

/// Single unconditioned draw from substream `attempt`.
Graph sample_once(const EnsembleSpec& spec, Seed seed, std::uint64_t attempt = 0);

/// G(n, p) edge probability with the same expected edge count as `alt`.
/// Supports preferential_attachment, sbm2 and watts_strogatz; anything else
/// throws Error{UnsupportedModel}.
double volume_match_gnp(const EnsembleSpec& alt);

DegreeSequence degree_sequence_of(const Graph& g);

/// Erdős–Gallai test.
bool is_graphical(std::span<const std::size_t> degrees);

/// Deterministic simple graph with the given degrees; Error{InvalidParams}
/// if the sequence is not graphical.
Graph havel_hakimi(std::span<const std::size_t> degrees);

/// `swaps` attempted double-edge swaps on a uniformly chosen edge pair;
/// swaps that would create a self-loop or multi-edge are rejected.
Graph degree_preserving_shuffle(const Graph& g, std::size_t swaps, Rng& rng);

void to_json(nlohmann::json& j, const EnsembleSpec& spec);
void from_json(const nlohmann::json& j, EnsembleSpec& spec);

}  // namespace netdist
