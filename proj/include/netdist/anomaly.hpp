#pragma once

#include "netdist/distances.hpp"

#include <string>
#include <vector>

namespace netdist {

/// Graphs over one shared vertex set, ordered in time.
struct GraphSequence {
  std::vector<Graph> graphs;
  /// Optional per-graph time labels (same length as graphs when present).
  std::vector<double> interval_labels;
};

/// raw[i] = d(G_i, G_{i+1}) for i = 0, ..., N-2; normalized = raw / mean(raw).
struct DistanceSeries {
  std::string distance_id;
  std::vector<double> raw;
  std::vector<double> normalized;
  /// Informational messages, e.g. a switch to the renormalized resistance.
  std::vector<std::string> notices;
};

/// Throws Error{SeriesTooShort} for fewer than two graphs,
/// Error{SizeMismatch} when vertex counts differ, Error{ZeroMean} when
/// mean(raw) < 1e-14. A plain resistance request on a sequence containing a
/// disconnected graph falls back to the renormalized resistance with penalty
/// n and records a notice.
DistanceSeries consecutive_distances(const GraphSequence& seq, const DistanceSpec& spec,
                                     std::size_t threads = 1);

struct Anomaly {
  std::size_t index = 0;
  double value = 0.0;

  friend bool operator==(const Anomaly&, const Anomaly&) = default;
};

/// The top_k largest normalized values, descending; ties go to the earlier
/// index.
std::vector<Anomaly> top_anomalies(const DistanceSeries& series, std::size_t top_k);

}  // namespace netdist
