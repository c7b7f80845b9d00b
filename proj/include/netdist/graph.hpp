#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace netdist {

using Vertex = std::int32_t;

/// Undirected edge with i < j after normalization.
struct Edge {
  Vertex i = 0;
  Vertex j = 0;
  double w = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Input edge as read from files or produced by generators; order of the
/// endpoints is irrelevant and the weight defaults to 1.
struct EdgeInput {
  Vertex i = 0;
  Vertex j = 0;
  std::optional<double> w;
};

struct Neighbor {
  Vertex v = 0;
  double w = 1.0;
};

/// Undirected, simple, positively weighted graph on vertices {0, ..., n-1}.
///
/// Immutable once built. Neighbor lists are sorted by vertex id; the edge list
/// is sorted lexicographically by (i, j) with i < j, so two graphs with the
/// same edge set compare equal regardless of construction order.
class Graph {
 public:
  Graph() = default;

  /// Throws Error{SelfLoop | VertexOutOfRange | NonpositiveWeight}.
  /// Duplicate pairs collapse, the last weight wins.
  Graph(std::size_t n, std::span<const EdgeInput> edges);

  std::size_t n() const noexcept { return adj_.size(); }
  std::size_t m() const noexcept { return edges_.size(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Neighbor> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  std::size_t degree(Vertex v) const { return adj_[static_cast<std::size_t>(v)].size(); }

  /// Weighted degree d_v = sum of incident edge weights.
  double weighted_degree(Vertex v) const;
  std::optional<double> weight(Vertex u, Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const { return weight(u, v).has_value(); }

  /// True when every edge has weight exactly 1.
  bool unweighted() const noexcept;
  std::size_t max_degree() const noexcept;

  /// 64-bit FNV-1a hash of (n, edge list); used to check that experiments
  /// share graph draws across distances.
  std::uint64_t fingerprint() const noexcept;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n() == b.n() && a.edges_ == b.edges_;
  }

 private:
  static std::uint64_t key(Vertex i, Vertex j) noexcept {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(i)) << 32) |
           static_cast<std::uint32_t>(j);
  }

  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adj_;
  std::unordered_map<std::uint64_t, double> lookup_;
};

struct DegreeSequence {
  std::vector<double> degrees;
};

struct ContactEvent {
  double t = 0.0;
  Vertex u = 0;
  Vertex v = 0;
};

Graph build_graph(std::size_t n, std::span<const EdgeInput> edges);

Eigen::MatrixXd adjacency_matrix(const Graph& g);

/// L = D - A, or the symmetric normalization D^{-1/2} L D^{-1/2} with
/// D^{-1/2}_{ii} = 0 for isolated vertices.
Eigen::MatrixXd laplacian_matrix(const Graph& g, bool normalized);

/// Components sorted by smallest member; vertices sorted inside each.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Threshold a correlation matrix: edge (u, v) iff |P(u,v)| >= threshold and
/// |P(u,v)| > 0; weight |P(u,v)|, or 1 when binarize is set.
Graph graph_from_correlation(const Eigen::MatrixXd& correlation, double threshold, bool binarize);

/// Split [t_start, t_end) into `intervals` equal half-open windows and build
/// one unweighted graph per window from the contacts that fall in it.
std::vector<Graph> bucket_contacts(std::span<const ContactEvent> events, double t_start,
                                   double t_end, std::size_t intervals, std::size_t n);

/// Permute vertex labels: vertex v of g becomes perm[v].
Graph permute(const Graph& g, std::span<const Vertex> perm);

}  // namespace netdist
