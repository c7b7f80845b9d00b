#include "netdist/distances.hpp"

#include "netdist/error.hpp"
#include "netdist/io.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace netdist {

namespace {

constexpr std::array<std::string_view, 8> kNames = {
    "spectral_adjacency", "spectral_laplacian", "spectral_normalized_laplacian",
    "edit",               "resistance",         "resistance_renormalized",
    "deltacon",           "netsimile"};

void require_same_size(const Graph& g1, const Graph& g2) {
  if (g1.n() != g2.n()) {
    throw Error(ErrorKind::SizeMismatch, "graphs have " + std::to_string(g1.n()) + " and " +
                                             std::to_string(g2.n()) +
                                             " vertices; matrix distances need node correspondence");
  }
}

}  // namespace

std::string_view to_string(DistanceKind kind) noexcept {
  return kNames[static_cast<std::size_t>(kind)];
}

DistanceKind distance_kind_from_string(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<DistanceKind>(i);
  }
  throw Error(ErrorKind::InvalidParams, "unknown distance '" + std::string(name) + "'");
}

bool is_spectral(DistanceKind kind) noexcept {
  return kind == DistanceKind::SpectralAdjacency || kind == DistanceKind::SpectralLaplacian ||
         kind == DistanceKind::SpectralNormalizedLaplacian;
}

Representation representation_of(DistanceKind spectral_kind) {
  switch (spectral_kind) {
    case DistanceKind::SpectralAdjacency: return Representation::Adjacency;
    case DistanceKind::SpectralLaplacian: return Representation::Laplacian;
    case DistanceKind::SpectralNormalizedLaplacian: return Representation::NormalizedLaplacian;
    default: break;
  }
  throw Error(ErrorKind::InvalidParams,
              std::string(to_string(spectral_kind)) + " is not a spectral distance");
}

void DistanceSpec::validate() const {
  if (k && *k < 1) throw Error(ErrorKind::InvalidParams, "k must be >= 1");
  if (!(p_norm >= 1.0)) throw Error(ErrorKind::InvalidParams, "p_norm must be >= 1");
  if (eps && !(*eps > 0.0)) throw Error(ErrorKind::InvalidParams, "eps must be positive");
  if (penalty && !(*penalty > 0.0)) throw Error(ErrorKind::InvalidParams, "penalty must be positive");
}

std::string DistanceSpec::id() const {
  std::string out(to_string(kind));
  if (is_spectral(kind)) {
    if (k) out += "_k" + std::to_string(*k);
    if (p_norm != 2.0) out += "_p" + io::format_double(p_norm);
  }
  if (kind == DistanceKind::DeltaCon && eps) out += "_eps" + io::format_double(*eps);
  if (kind == DistanceKind::ResistanceRenormalized && penalty) {
    out += "_penalty" + io::format_double(*penalty);
  }
  return out;
}

double spectrum_distance(std::span<const double> a, std::span<const double> b,
                         std::optional<std::size_t> k, double p_norm) {
  const std::size_t len = std::max(a.size(), b.size());
  const std::size_t count = std::min(k.value_or(len), len);
  const bool inf = std::isinf(p_norm);
  double acc = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const double x = i < a.size() ? a[i] : 0.0;
    const double y = i < b.size() ? b[i] : 0.0;
    const double d = std::abs(x - y);
    if (inf) {
      acc = std::max(acc, d);
    } else if (p_norm == 2.0) {
      acc += d * d;
    } else if (p_norm == 1.0) {
      acc += d;
    } else {
      acc += std::pow(d, p_norm);
    }
  }
  if (inf || p_norm == 1.0) return acc;
  if (p_norm == 2.0) return std::sqrt(acc);
  return std::pow(acc, 1.0 / p_norm);
}

double spectral_distance(const Graph& g1, const Graph& g2, const DistanceSpec& spec) {
  spec.validate();
  const Representation rep = representation_of(spec.kind);
  auto truncated = [&](const Graph& g) -> std::optional<std::size_t> {
    if (!spec.k || g.n() == 0) return std::nullopt;
    return std::min(*spec.k, g.n());
  };
  const auto s1 = g1.n() ? spectrum(g1, rep, truncated(g1)).values : std::vector<double>{};
  const auto s2 = g2.n() ? spectrum(g2, rep, truncated(g2)).values : std::vector<double>{};
  return spectrum_distance(s1, s2, spec.k, spec.p_norm);
}

double edit_distance(const Graph& g1, const Graph& g2) {
  require_same_size(g1, g2);
  double total = 0.0;
  for (const auto& e : g1.edges()) {
    total += std::abs(e.w - g2.weight(e.i, e.j).value_or(0.0));
  }
  for (const auto& e : g2.edges()) {
    if (!g1.has_edge(e.i, e.j)) total += e.w;
  }
  return 2.0 * total;
}

double matrix_l1_distance(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::SizeMismatch, "matrix shapes differ");
  }
  return (a - b).cwiseAbs().sum();
}

double resistance_distance(const Graph& g1, const Graph& g2, bool renormalized,
                           std::optional<double> penalty) {
  require_same_size(g1, g2);
  if (renormalized) {
    return matrix_l1_distance(renormalized_resistance_matrix(g1, penalty),
                              renormalized_resistance_matrix(g2, penalty));
  }
  return matrix_l1_distance(resistance_matrix(g1), resistance_matrix(g2));
}

double matusita_distance(const Eigen::MatrixXd& s1, const Eigen::MatrixXd& s2,
                         MatusitaDiagnostics* diagnostics) {
  if (s1.rows() != s2.rows() || s1.cols() != s2.cols()) {
    throw Error(ErrorKind::SizeMismatch, "affinity matrix shapes differ");
  }
  std::size_t clamped = 0;
  auto root = [&clamped](double x) {
    if (x < 0.0) {
      if (x < -1e-12) {
        throw Error(ErrorKind::NegativeAffinity, "affinity entry " + io::format_double(x));
      }
      ++clamped;
      return 0.0;
    }
    return std::sqrt(x);
  };
  double acc = 0.0;
  for (Eigen::Index j = 0; j < s1.cols(); ++j) {
    for (Eigen::Index i = 0; i < s1.rows(); ++i) {
      const double d = root(s1(i, j)) - root(s2(i, j));
      acc += d * d;
    }
  }
  if (diagnostics) diagnostics->clamped += clamped;
  return std::sqrt(acc);
}

double deltacon_eps(const Graph& g1, const Graph& g2, std::optional<double> eps) {
  if (eps) return *eps;
  return std::min(default_fbp_eps(g1), default_fbp_eps(g2));
}

double deltacon_distance(const Graph& g1, const Graph& g2, std::optional<double> eps,
                         MatusitaDiagnostics* diagnostics) {
  require_same_size(g1, g2);
  const double e = deltacon_eps(g1, g2, eps);
  return matusita_distance(fbp_matrix(g1, e), fbp_matrix(g2, e), diagnostics);
}

double distance(const Graph& g1, const Graph& g2, const DistanceSpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case DistanceKind::SpectralAdjacency:
    case DistanceKind::SpectralLaplacian:
    case DistanceKind::SpectralNormalizedLaplacian:
      return spectral_distance(g1, g2, spec);
    case DistanceKind::Edit: return edit_distance(g1, g2);
    case DistanceKind::Resistance: return resistance_distance(g1, g2, false);
    case DistanceKind::ResistanceRenormalized:
      return resistance_distance(g1, g2, true, spec.penalty);
    case DistanceKind::DeltaCon: return deltacon_distance(g1, g2, spec.eps);
    case DistanceKind::NetSimile: return netsimile_distance(g1, g2);
  }
  throw Error(ErrorKind::InvalidParams, "unhandled distance kind");
}

}  // namespace netdist
