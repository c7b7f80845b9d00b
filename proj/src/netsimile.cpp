#include "netdist/distances.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace netdist {

namespace {

using Column = std::vector<double>;

// mean, median, sample std (n - 1), skewness and excess kurtosis (both from
// biased central moments). A column whose spread is within rounding of zero
// is treated as constant: std, skewness and kurtosis are 0.
std::array<double, 5> aggregate(Column col) {
  const auto n = col.size();
  if (n == 0) return {};
  double mean = 0.0;
  for (double x : col) mean += x;
  mean /= static_cast<double>(n);

  std::sort(col.begin(), col.end());
  const double median = n % 2 ? col[n / 2] : 0.5 * (col[n / 2 - 1] + col[n / 2]);

  const double spread = col.back() - col.front();
  if (n == 1 || spread <= 1e-12 * std::max(1.0, std::abs(mean))) {
    return {mean, median, 0.0, 0.0, 0.0};
  }

  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (double x : col) {
    const double d = x - mean;
    const double d2 = d * d;
    m2 += d2;
    m3 += d2 * d;
    m4 += d2 * d2;
  }
  const auto nd = static_cast<double>(n);
  const double stdev = std::sqrt(m2 / (nd - 1.0));
  m2 /= nd;
  m3 /= nd;
  m4 /= nd;
  return {mean, median, stdev, m3 / std::pow(m2, 1.5), m4 / (m2 * m2) - 3.0};
}

}  // namespace

Signature netsimile_signature(const Graph& g) {
  const std::size_t n = g.n();
  std::array<Column, Signature::kFeatures> features;
  for (auto& f : features) f.assign(n, 0.0);

  auto& degree = features[0];
  auto& clustering = features[1];
  for (std::size_t v = 0; v < n; ++v) {
    const auto nbrs = g.neighbors(static_cast<Vertex>(v));
    degree[v] = static_cast<double>(nbrs.size());
    if (nbrs.size() < 2) continue;
    std::size_t links = 0;
    for (std::size_t a = 0; a < nbrs.size(); ++a) {
      for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
        if (g.has_edge(nbrs[a].v, nbrs[b].v)) ++links;
      }
    }
    const double pairs = 0.5 * static_cast<double>(nbrs.size() * (nbrs.size() - 1));
    clustering[v] = static_cast<double>(links) / pairs;
  }

  // stamp[u] == v marks u as a member of v's egonet; seen[u] == v marks u as
  // an already counted external vertex.
  std::vector<std::size_t> stamp(n, n), seen(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    const auto nbrs = g.neighbors(static_cast<Vertex>(v));
    if (!nbrs.empty()) {
      double deg_sum = 0.0, clust_sum = 0.0;
      for (const auto& nb : nbrs) {
        deg_sum += degree[static_cast<std::size_t>(nb.v)];
        clust_sum += clustering[static_cast<std::size_t>(nb.v)];
      }
      features[2][v] = deg_sum / static_cast<double>(nbrs.size());
      features[3][v] = clust_sum / static_cast<double>(nbrs.size());
    }

    stamp[v] = v;
    for (const auto& nb : nbrs) stamp[static_cast<std::size_t>(nb.v)] = v;

    std::size_t inner_endpoints = 0, leaving = 0, external = 0;
    auto visit = [&](std::size_t member) {
      for (const auto& nb : g.neighbors(static_cast<Vertex>(member))) {
        const auto u = static_cast<std::size_t>(nb.v);
        if (stamp[u] == v) {
          ++inner_endpoints;
        } else {
          ++leaving;
          if (seen[u] != v) {
            seen[u] = v;
            ++external;
          }
        }
      }
    };
    visit(v);
    for (const auto& nb : nbrs) visit(static_cast<std::size_t>(nb.v));

    features[4][v] = static_cast<double>(inner_endpoints / 2);
    features[5][v] = static_cast<double>(leaving);
    features[6][v] = static_cast<double>(external);
  }

  Signature sig;
  sig.weights_ignored = !g.unweighted();
  for (std::size_t f = 0; f < Signature::kFeatures; ++f) {
    const auto agg = aggregate(std::move(features[f]));
    std::copy(agg.begin(), agg.end(), sig.values.begin() + static_cast<std::ptrdiff_t>(5 * f));
  }
  return sig;
}

double canberra_distance(std::span<const double> x, std::span<const double> y) {
  double total = 0.0;
  const std::size_t len = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < len; ++i) {
    const double den = std::abs(x[i]) + std::abs(y[i]);
    if (den > 0.0) total += std::abs(x[i] - y[i]) / den;
  }
  return total;
}

double netsimile_distance(const Graph& g1, const Graph& g2) {
  const auto a = netsimile_signature(g1);
  const auto b = netsimile_signature(g2);
  return canberra_distance(a.values, b.values);
}

}  // namespace netdist
