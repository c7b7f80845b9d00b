#include "fixtures.hpp"

#include "netdist/anomaly.hpp"
#include "netdist/error.hpp"
#include "netdist/generators.hpp"

#include <doctest.h>

#include <numeric>

using namespace netdist;
using fixture::error_kind;

namespace {

DistanceSpec dist(DistanceKind kind) {
  DistanceSpec s;
  s.kind = kind;
  return s;
}

GraphSequence seq(std::vector<Graph> graphs) {
  GraphSequence s;
  s.graphs = std::move(graphs);
  return s;
}

}  // namespace

TEST_CASE("consecutive edit distances") {
  const Graph k3 = fixture::complete(3);
  const Graph p3 = fixture::path(3);
  CHECK(error_kind([&] { consecutive_distances(seq({k3, k3, k3}), dist(DistanceKind::Edit)); }) ==
        ErrorKind::ZeroMean);
  const auto a = consecutive_distances(seq({k3, p3, k3}), dist(DistanceKind::Edit));
  CHECK(a.raw == std::vector<double>{2, 2});
  CHECK(a.normalized == std::vector<double>{1, 1});
  const auto b = consecutive_distances(seq({k3, k3, p3}), dist(DistanceKind::Edit));
  CHECK(b.raw == std::vector<double>{0, 2});
  CHECK(b.normalized == std::vector<double>{0, 2});
  CHECK(b.distance_id == "edit");
}

TEST_CASE("sequence validation") {
  CHECK(error_kind([] { consecutive_distances(seq({fixture::complete(3)}), dist(DistanceKind::Edit)); }) ==
        ErrorKind::SeriesTooShort);
  CHECK(error_kind([] {
          consecutive_distances(seq({fixture::complete(3), fixture::complete(4)}), dist(DistanceKind::Edit));
        }) == ErrorKind::SizeMismatch);
}

TEST_CASE("resistance on disconnected steps falls back to the renormalized form") {
  const auto s = consecutive_distances(seq({fixture::path(4), fixture::make(4, {{0, 1}, {2, 3}}), fixture::path(4)}),
                                       dist(DistanceKind::Resistance));
  CHECK(s.distance_id == "resistance_renormalized");
  CHECK(s.notices.size() == 1);
  CHECK(s.raw[0] == doctest::Approx(16.0));
  const auto connected = consecutive_distances(seq({fixture::path(4), fixture::complete(4)}),
                                               dist(DistanceKind::Resistance));
  CHECK(connected.distance_id == "resistance");
  CHECK(connected.notices.empty());
}

TEST_CASE("normalized series average to one") {
  std::vector<Graph> graphs;
  EnsembleSpec spec;
  spec.n = 25;
  spec.params = GnpParams{0.2};
  for (std::uint64_t i = 0; i < 12; ++i) graphs.push_back(sample(spec, Seed{3, i}));
  for (auto kind : {DistanceKind::Edit, DistanceKind::DeltaCon, DistanceKind::SpectralAdjacency,
                    DistanceKind::ResistanceRenormalized, DistanceKind::NetSimile}) {
    const auto s = consecutive_distances(seq(graphs), dist(kind), 2);
    const double mean = std::accumulate(s.normalized.begin(), s.normalized.end(), 0.0) / 11.0;
    CHECK(std::abs(mean - 1.0) < 1e-12);
    for (std::size_t i = 0; i < s.raw.size(); ++i) CHECK(s.raw[i] == distance(graphs[i], graphs[i + 1], dist(kind)));
  }
}

TEST_CASE("top anomalies sort descending with earlier-index ties") {
  DistanceSeries s;
  s.normalized = {0, 2};
  CHECK(top_anomalies(s, 1) == std::vector<Anomaly>{{1, 2.0}});
  s.normalized = {1, 1, 1, 1};
  CHECK(top_anomalies(s, 3) == std::vector<Anomaly>{{0, 1.0}, {1, 1.0}, {2, 1.0}});
  s.normalized = {1, 3, 0.5, 3};
  CHECK(top_anomalies(s, 2) == std::vector<Anomaly>{{1, 3.0}, {3, 3.0}});
  CHECK(top_anomalies(s, 0).empty());
  CHECK(error_kind([&] { top_anomalies(s, 5); }) == ErrorKind::InvalidParams);
}
