#include "netdist/anomaly.hpp"

#include "netdist/error.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace netdist {

DistanceSeries consecutive_distances(const GraphSequence& seq, const DistanceSpec& spec,
                                     std::size_t threads) {
  const auto& graphs = seq.graphs;
  if (graphs.size() < 2) {
    throw Error(ErrorKind::SeriesTooShort, "need at least two graphs, got " +
                                               std::to_string(graphs.size()));
  }
  for (const auto& g : graphs) {
    if (g.n() != graphs.front().n()) {
      throw Error(ErrorKind::SizeMismatch, "graph sequence mixes vertex counts");
    }
  }

  DistanceSeries out;
  DistanceSpec effective = spec;
  if (spec.kind == DistanceKind::Resistance &&
      !std::all_of(graphs.begin(), graphs.end(), [](const Graph& g) { return is_connected(g); })) {
    effective.kind = DistanceKind::ResistanceRenormalized;
    effective.penalty.reset();
    out.notices.push_back("sequence contains disconnected graphs; using renormalized resistance "
                          "with penalty " + std::to_string(graphs.front().n()));
  }
  out.distance_id = effective.id();

  out.raw.resize(graphs.size() - 1);
  detail::parallel_for(out.raw.size(), threads, [&](std::size_t i) {
    out.raw[i] = distance(graphs[i], graphs[i + 1], effective);
  });

  const double mean =
      std::accumulate(out.raw.begin(), out.raw.end(), 0.0) / static_cast<double>(out.raw.size());
  if (mean < 1e-14) {
    throw Error(ErrorKind::ZeroMean, out.distance_id + ": consecutive distances are all zero");
  }
  out.normalized.reserve(out.raw.size());
  for (double x : out.raw) out.normalized.push_back(x / mean);
  return out;
}

std::vector<Anomaly> top_anomalies(const DistanceSeries& series, std::size_t top_k) {
  const auto& v = series.normalized;
  if (top_k > v.size()) {
    throw Error(ErrorKind::InvalidParams, "top_k exceeds the series length");
  }
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });
  std::vector<Anomaly> out;
  out.reserve(top_k);
  for (std::size_t i = 0; i < top_k; ++i) out.push_back({order[i], v[order[i]]});
  return out;
}

}  // namespace netdist
