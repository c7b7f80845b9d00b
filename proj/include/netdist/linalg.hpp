#pragma once

#include "netdist/graph.hpp"

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <optional>
#include <string_view>
#include <vector>

namespace netdist {

enum class Representation { Adjacency, Laplacian, NormalizedLaplacian };

std::string_view to_string(Representation rep) noexcept;

enum class Which { Largest, Smallest };

/// Spectrum order for a representation: descending for the adjacency
/// matrix, ascending for both Laplacians.
constexpr Which natural_order(Representation rep) noexcept {
  return rep == Representation::Adjacency ? Which::Largest : Which::Smallest;
}

struct Spectrum {
  std::vector<double> values;
  Representation representation = Representation::Adjacency;

  Which order() const noexcept { return natural_order(representation); }
};

/// Graphs above this size use Lanczos when only a few eigenvalues are needed.
inline constexpr std::size_t kDenseEigenLimit = 2048;

/// The k extreme eigenvalues of a symmetric matrix, descending for Largest
/// and ascending for Smallest. k = nullopt means all n.
/// Throws Error{NotSymmetric} beyond 1e-10 asymmetry, Error{KOutOfRange}.
std::vector<double> sym_eigenvalues(const Eigen::MatrixXd& m, std::optional<std::size_t> k,
                                    Which which);

/// Lanczos with full reorthogonalization, for large sparse symmetric input.
/// Iterates until every requested Ritz value has residual below
/// tol * max(1, |theta|) or the Krylov space reaches n.
std::vector<double> lanczos_eigenvalues(const Eigen::SparseMatrix<double>& m, std::size_t k,
                                        Which which, double tol = 1e-10);

Eigen::SparseMatrix<double> sparse_matrix(const Graph& g, Representation rep);

/// Spectrum of one matrix representation of g, truncated to the first k
/// values in the representation's natural order. Laplacian eigenvalues are
/// clamped at 0 from below (they are PSD; negatives are rounding noise).
Spectrum spectrum(const Graph& g, Representation rep, std::optional<std::size_t> k = std::nullopt);

/// L^+ = (L + J/n)^{-1} - J/n for the Laplacian of a connected graph.
/// Throws Error{Disconnected} when the second-smallest eigenvalue of L is
/// below 1e-10.
Eigen::MatrixXd laplacian_pseudoinverse(const Eigen::MatrixXd& laplacian);

/// Effective resistance R_uv = L+_uu + L+_vv - 2 L+_uv. Throws
/// Error{Disconnected}.
Eigen::MatrixXd resistance_matrix(const Graph& g);

/// Within-component effective resistance; pairs in different components get
/// `penalty` (default n).
Eigen::MatrixXd renormalized_resistance_matrix(const Graph& g,
                                               std::optional<double> penalty = std::nullopt);

/// Fast belief-propagation affinities S = (I + eps^2 D - eps A)^{-1}.
/// Throws Error{SingularSystem} when the system is not positive definite.
Eigen::MatrixXd fbp_matrix(const Graph& g, double eps);

/// 1 / (1 + max degree); keeps I + eps^2 D - eps A a diagonally dominant
/// M-matrix so S is entrywise non-negative.
double default_fbp_eps(const Graph& g);

}  // namespace netdist
