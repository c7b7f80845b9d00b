#pragma once

#include "netdist/graph.hpp"
#include "netdist/linalg.hpp"

#include <array>
#include <limits>
#include <optional>
#include <span>
#include <string>

namespace netdist {

enum class DistanceKind {
  SpectralAdjacency,
  SpectralLaplacian,
  SpectralNormalizedLaplacian,
  Edit,
  Resistance,
  ResistanceRenormalized,
  DeltaCon,
  NetSimile,
};

std::string_view to_string(DistanceKind kind) noexcept;
/// Throws Error{InvalidParams} for unknown names.
DistanceKind distance_kind_from_string(std::string_view name);

inline constexpr std::array<DistanceKind, 8> kAllDistanceKinds = {
    DistanceKind::SpectralAdjacency, DistanceKind::SpectralLaplacian,
    DistanceKind::SpectralNormalizedLaplacian, DistanceKind::Edit,
    DistanceKind::Resistance, DistanceKind::ResistanceRenormalized,
    DistanceKind::DeltaCon, DistanceKind::NetSimile};

bool is_spectral(DistanceKind kind) noexcept;
Representation representation_of(DistanceKind spectral_kind);

/// Which distance to compute and its hyperparameters. Unset optionals mean
/// "all" (k), "auto" (eps: 1 / (1 + max degree of both graphs)) and
/// "auto" (penalty: n).
struct DistanceSpec {
  DistanceKind kind = DistanceKind::SpectralAdjacency;
  std::optional<std::size_t> k;
  double p_norm = 2.0;
  std::optional<double> eps;
  std::optional<double> penalty;

  /// Throws Error{InvalidParams} when k < 1, p_norm < 1, eps <= 0 or
  /// penalty <= 0.
  void validate() const;

  /// Stable identifier, e.g. "spectral_adjacency_k2" or "deltacon".
  std::string id() const;
};

/// l_p distance between two spectra sorted in the same order. The first k
/// entries are compared after zero-padding the shorter spectrum at its tail;
/// p = infinity gives the max absolute difference.
double spectrum_distance(std::span<const double> a, std::span<const double> b,
                         std::optional<std::size_t> k, double p_norm);

double spectral_distance(const Graph& g1, const Graph& g2, const DistanceSpec& spec);

/// Sum over all ordered pairs of |A - A'|; each differing undirected edge
/// counts twice. Throws Error{SizeMismatch}.
double edit_distance(const Graph& g1, const Graph& g2);

/// Entrywise l1 difference of the resistance matrices (both triangles).
/// Throws Error{SizeMismatch}, and Error{Disconnected} when not renormalized.
double resistance_distance(const Graph& g1, const Graph& g2, bool renormalized,
                           std::optional<double> penalty = std::nullopt);

/// Entrywise l1 difference of two affinity matrices.
double matrix_l1_distance(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

struct MatusitaDiagnostics {
  /// Entries in [-1e-12, 0) set to zero before the square root.
  std::size_t clamped = 0;
};

/// sqrt(sum_ij (sqrt S_ij - sqrt S'_ij)^2). Throws Error{NegativeAffinity}
/// for entries below -1e-12.
double matusita_distance(const Eigen::MatrixXd& s1, const Eigen::MatrixXd& s2,
                         MatusitaDiagnostics* diagnostics = nullptr);

double deltacon_eps(const Graph& g1, const Graph& g2, std::optional<double> eps);

/// Matusita difference of fast belief-propagation matrices built with one
/// shared eps. Throws Error{SizeMismatch}.
double deltacon_distance(const Graph& g1, const Graph& g2, std::optional<double> eps = std::nullopt,
                         MatusitaDiagnostics* diagnostics = nullptr);

/// Seven per-vertex features, each aggregated by mean, median, sample
/// standard deviation, skewness and excess kurtosis. Layout is
/// feature-major: values[5 * f + a] for feature f, aggregate a.
///
/// Features: degree, clustering coefficient, mean neighbor degree, mean
/// neighbor clustering, egonet edge count, edges leaving the egonet,
/// distinct vertices adjacent to the egonet.
struct Signature {
  static constexpr std::size_t kFeatures = 7;
  static constexpr std::size_t kAggregates = 5;
  std::array<double, kFeatures * kAggregates> values{};
  /// Set when the input had non-unit weights; features use topology only.
  bool weights_ignored = false;
};

Signature netsimile_signature(const Graph& g);

/// Canberra distance between signatures; 0/0 terms contribute 0.
double canberra_distance(std::span<const double> x, std::span<const double> y);

double netsimile_distance(const Graph& g1, const Graph& g2);

/// Dispatch on spec.kind.
double distance(const Graph& g1, const Graph& g2, const DistanceSpec& spec);

}  // namespace netdist
