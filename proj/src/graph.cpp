#include "netdist/graph.hpp"

#include "netdist/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

namespace netdist {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::NonpositiveWeight: return "NonpositiveWeight";
    case ErrorKind::AsymmetricInput: return "AsymmetricInput";
    case ErrorKind::EventOutOfRange: return "EventOutOfRange";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::KOutOfRange: return "KOutOfRange";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::NegativeAffinity: return "NegativeAffinity";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::UnsupportedModel: return "UnsupportedModel";
    case ErrorKind::RetriesExhausted: return "RetriesExhausted";
    case ErrorKind::DegenerateNull: return "DegenerateNull";
    case ErrorKind::EmptySample: return "EmptySample";
    case ErrorKind::SeriesTooShort: return "SeriesTooShort";
    case ErrorKind::ZeroMean: return "ZeroMean";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Graph::Graph(std::size_t n, std::span<const EdgeInput> edges) : adj_(n) {
  // Ordered map gives the sorted edge list for free; last weight wins.
  std::map<std::pair<Vertex, Vertex>, double> unique;
  for (const auto& e : edges) {
    if (e.i < 0 || e.j < 0 || static_cast<std::size_t>(e.i) >= n ||
        static_cast<std::size_t>(e.j) >= n) {
      throw Error(ErrorKind::VertexOutOfRange, "edge (" + std::to_string(e.i) + ", " +
                                                   std::to_string(e.j) + ") with n = " +
                                                   std::to_string(n));
    }
    if (e.i == e.j) throw Error(ErrorKind::SelfLoop, "vertex " + std::to_string(e.i));
    const double w = e.w.value_or(1.0);
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw Error(ErrorKind::NonpositiveWeight, "edge (" + std::to_string(e.i) + ", " +
                                                    std::to_string(e.j) +
                                                    ") weight " + std::to_string(w));
    }
    unique[{std::min(e.i, e.j), std::max(e.i, e.j)}] = w;
  }

  edges_.reserve(unique.size());
  lookup_.reserve(unique.size());
  for (const auto& [ij, w] : unique) {
    edges_.push_back({ij.first, ij.second, w});
    adj_[static_cast<std::size_t>(ij.first)].push_back({ij.second, w});
    adj_[static_cast<std::size_t>(ij.second)].push_back({ij.first, w});
    lookup_.emplace(key(ij.first, ij.second), w);
  }
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end(),
              [](const Neighbor& a, const Neighbor& b) { return a.v < b.v; });
  }
}

double Graph::weighted_degree(Vertex v) const {
  double d = 0.0;
  for (const auto& nb : neighbors(v)) d += nb.w;
  return d;
}

std::optional<double> Graph::weight(Vertex u, Vertex v) const {
  if (u == v) return std::nullopt;
  auto it = lookup_.find(key(std::min(u, v), std::max(u, v)));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

bool Graph::unweighted() const noexcept {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.w == 1.0; });
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& list : adj_) best = std::max(best, list.size());
  return best;
}

std::uint64_t Graph::fingerprint() const noexcept {
  std::uint64_t h = 14695981039346656037ULL;
  auto mix = [&h](std::uint64_t x) {
    for (int b = 0; b < 8; ++b) {
      h ^= (x >> (8 * b)) & 0xffU;
      h *= 1099511628211ULL;
    }
  };
  mix(n());
  for (const auto& e : edges_) {
    mix(key(e.i, e.j));
    mix(std::bit_cast<std::uint64_t>(e.w));
  }
  return h;
}

Graph build_graph(std::size_t n, std::span<const EdgeInput> edges) { return Graph(n, edges); }

Eigen::MatrixXd adjacency_matrix(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.n());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : g.edges()) {
    a(e.i, e.j) = e.w;
    a(e.j, e.i) = e.w;
  }
  return a;
}

Eigen::MatrixXd laplacian_matrix(const Graph& g, bool normalized) {
  const auto n = static_cast<Eigen::Index>(g.n());
  Eigen::MatrixXd l = -adjacency_matrix(g);
  Eigen::VectorXd d(n);
  for (Eigen::Index v = 0; v < n; ++v) {
    d(v) = g.weighted_degree(static_cast<Vertex>(v));
    l(v, v) = d(v);
  }
  if (!normalized) return l;

  Eigen::VectorXd inv_sqrt(n);
  for (Eigen::Index v = 0; v < n; ++v) inv_sqrt(v) = d(v) != 0.0 ? 1.0 / std::sqrt(d(v)) : 0.0;
  return inv_sqrt.asDiagonal() * l * inv_sqrt.asDiagonal();
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<int> label(n, -1);
  std::vector<std::vector<Vertex>> comps;
  std::vector<Vertex> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    const int id = static_cast<int>(comps.size());
    comps.emplace_back();
    label[s] = id;
    stack.push_back(static_cast<Vertex>(s));
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      comps.back().push_back(v);
      for (const auto& nb : g.neighbors(v)) {
        if (label[static_cast<std::size_t>(nb.v)] < 0) {
          label[static_cast<std::size_t>(nb.v)] = id;
          stack.push_back(nb.v);
        }
      }
    }
    std::sort(comps.back().begin(), comps.back().end());
  }
  return comps;
}

bool is_connected(const Graph& g) { return g.n() <= 1 || connected_components(g).size() == 1; }

Graph graph_from_correlation(const Eigen::MatrixXd& correlation, double threshold,
                             bool binarize) {
  if (correlation.rows() != correlation.cols()) {
    throw Error(ErrorKind::AsymmetricInput, "correlation matrix is not square");
  }
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw Error(ErrorKind::InvalidParams, "threshold must lie in [0, 1]");
  }
  const Eigen::Index n = correlation.rows();
  std::vector<EdgeInput> edges;
  for (Eigen::Index u = 0; u < n; ++u) {
    for (Eigen::Index v = u + 1; v < n; ++v) {
      if (std::abs(correlation(u, v) - correlation(v, u)) > 1e-12) {
        throw Error(ErrorKind::AsymmetricInput,
                    "P(" + std::to_string(u) + "," + std::to_string(v) + ") != P(" +
                        std::to_string(v) + "," + std::to_string(u) + ")");
      }
      const double a = std::abs(correlation(u, v));
      if (a >= threshold && a > 0.0) {
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v),
                         binarize ? 1.0 : a});
      }
    }
  }
  return Graph(static_cast<std::size_t>(n), edges);
}

std::vector<Graph> bucket_contacts(std::span<const ContactEvent> events, double t_start,
                                   double t_end, std::size_t intervals, std::size_t n) {
  if (!(t_start < t_end)) throw Error(ErrorKind::InvalidParams, "t_start must precede t_end");
  if (intervals == 0) throw Error(ErrorKind::InvalidParams, "interval count must be >= 1");

  const double width = (t_end - t_start) / static_cast<double>(intervals);
  std::vector<std::vector<EdgeInput>> buckets(intervals);
  for (const auto& ev : events) {
    if (!std::isfinite(ev.t) || ev.t < t_start || ev.t >= t_end) {
      throw Error(ErrorKind::EventOutOfRange, "contact at t = " + std::to_string(ev.t));
    }
    auto idx = static_cast<std::size_t>(std::floor((ev.t - t_start) / width));
    // Rounding can push an event just below t_end into a nonexistent bucket.
    idx = std::min(idx, intervals - 1);
    buckets[idx].push_back({ev.u, ev.v, std::nullopt});
  }

  std::vector<Graph> graphs;
  graphs.reserve(intervals);
  for (const auto& b : buckets) graphs.emplace_back(n, b);
  return graphs;
}

Graph permute(const Graph& g, std::span<const Vertex> perm) {
  std::vector<EdgeInput> edges;
  edges.reserve(g.m());
  for (const auto& e : g.edges()) {
    edges.push_back({perm[static_cast<std::size_t>(e.i)], perm[static_cast<std::size_t>(e.j)], e.w});
  }
  return Graph(g.n(), edges);
}

}  // namespace netdist
