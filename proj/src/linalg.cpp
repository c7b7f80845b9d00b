#include "netdist/linalg.hpp"

#include "netdist/error.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

namespace netdist {

std::string_view to_string(Representation rep) noexcept {
  switch (rep) {
    case Representation::Adjacency: return "adjacency";
    case Representation::Laplacian: return "laplacian";
    case Representation::NormalizedLaplacian: return "normalized_laplacian";
  }
  return "unknown";
}

namespace {

void check_k(std::size_t k, std::size_t n) {
  if (k < 1 || k > n) {
    throw Error(ErrorKind::KOutOfRange,
                "k = " + std::to_string(k) + " outside [1, " + std::to_string(n) + "]");
  }
}

// Picks k values from an ascending list in the requested order.
std::vector<double> select(const Eigen::VectorXd& ascending, std::size_t k, Which which) {
  const auto n = static_cast<std::size_t>(ascending.size());
  std::vector<double> out(k);
  for (std::size_t i = 0; i < k; ++i) {
    out[i] = which == Which::Smallest ? ascending(static_cast<Eigen::Index>(i))
                                      : ascending(static_cast<Eigen::Index>(n - 1 - i));
  }
  return out;
}

// Deterministic start vector with no special alignment to graph symmetries
// (the all-ones vector is an eigenvector of every Laplacian).
Eigen::VectorXd start_vector(Eigen::Index n, std::uint64_t salt) {
  Eigen::VectorXd v(n);
  std::uint64_t x = 0x9e3779b97f4a7c15ULL ^ salt;
  for (Eigen::Index i = 0; i < n; ++i) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    v(i) = static_cast<double>(z >> 11) * 0x1.0p-53 - 0.5;
  }
  return v.normalized();
}

// Projects out the first `cols` basis vectors twice (classical Gram-Schmidt
// applied twice is numerically as good as modified Gram-Schmidt).
void orthogonalize(Eigen::VectorXd& w, const Eigen::MatrixXd& basis, Eigen::Index cols) {
  if (cols == 0) return;
  for (int pass = 0; pass < 2; ++pass) {
    const Eigen::VectorXd coeffs = basis.leftCols(cols).transpose() * w;
    w.noalias() -= basis.leftCols(cols) * coeffs;
  }
}

// Laplacian pseudoinverse without the connectivity check.
Eigen::MatrixXd pinv_connected(const Eigen::MatrixXd& laplacian) {
  const Eigen::Index n = laplacian.rows();
  const double inv_n = 1.0 / static_cast<double>(n);
  Eigen::MatrixXd shifted = laplacian.array() + inv_n;
  Eigen::LLT<Eigen::MatrixXd> llt(shifted);
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorKind::Disconnected, "L + J/n is not positive definite");
  }
  Eigen::MatrixXd inv = llt.solve(Eigen::MatrixXd::Identity(n, n));
  inv.array() -= inv_n;
  return 0.5 * (inv + inv.transpose());
}

Eigen::MatrixXd resistances_from_pinv(const Eigen::MatrixXd& pinv) {
  const Eigen::Index n = pinv.rows();
  Eigen::MatrixXd r(n, n);
  for (Eigen::Index u = 0; u < n; ++u) {
    r(u, u) = 0.0;
    for (Eigen::Index v = u + 1; v < n; ++v) {
      const double x = pinv(u, u) + pinv(v, v) - 2.0 * pinv(u, v);
      r(u, v) = x;
      r(v, u) = x;
    }
  }
  return r;
}

}  // namespace

std::vector<double> sym_eigenvalues(const Eigen::MatrixXd& m, std::optional<std::size_t> k,
                                    Which which) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::NotSymmetric, "matrix is not square");
  const auto n = static_cast<std::size_t>(m.rows());
  const std::size_t count = k.value_or(n);
  check_k(count, n);
  if (n > 0 && (m - m.transpose()).cwiseAbs().maxCoeff() > 1e-10) {
    throw Error(ErrorKind::NotSymmetric, "asymmetry exceeds 1e-10");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::SingularSystem, "symmetric eigensolver did not converge");
  }
  return select(solver.eigenvalues(), count, which);
}

std::vector<double> lanczos_eigenvalues(const Eigen::SparseMatrix<double>& m, std::size_t k,
                                        Which which, double tol) {
  const Eigen::Index n = m.rows();
  if (m.rows() != m.cols()) throw Error(ErrorKind::NotSymmetric, "matrix is not square");
  check_k(k, static_cast<std::size_t>(n));

  Eigen::MatrixXd basis(n, std::min<Eigen::Index>(n, 64));
  std::vector<double> alpha;
  std::vector<double> beta;  // beta[j] couples basis j and j + 1
  basis.col(0) = start_vector(n, 0);
  std::uint64_t restarts = 0;

  const auto ki = static_cast<Eigen::Index>(k);
  const Eigen::Index check_every = std::max<Eigen::Index>(4, ki / 2);

  for (Eigen::Index j = 0; j < n; ++j) {
    Eigen::VectorXd w = m * basis.col(j);
    const double a = basis.col(j).dot(w);
    alpha.push_back(a);
    w -= a * basis.col(j);
    if (j > 0) w -= beta[static_cast<std::size_t>(j - 1)] * basis.col(j - 1);
    orthogonalize(w, basis, j + 1);
    double b = w.norm();

    const Eigen::Index steps = j + 1;
    const bool last = steps == n;
    bool restarted = false;
    if (!last && b < 1e-12) {
      // Invariant subspace: continue from a fresh direction orthogonal to the
      // basis so repeated eigenvalues can still appear.
      do {
        w = start_vector(n, ++restarts);
        orthogonalize(w, basis, j + 1);
      } while (w.norm() < 1e-8);
      w.normalize();
      b = 0.0;
      restarted = true;
    } else if (!last) {
      w /= b;
    }

    if (steps >= ki && (last || (!restarted && steps % check_every == 0))) {
      Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(alpha.data(), steps);
      Eigen::VectorXd sub = steps > 1 ? Eigen::VectorXd(Eigen::Map<const Eigen::VectorXd>(
                                            beta.data(), steps - 1))
                                      : Eigen::VectorXd();
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
      tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
      const Eigen::VectorXd& theta = tri.eigenvalues();
      bool converged = true;
      for (Eigen::Index i = 0; i < ki && !last; ++i) {
        const Eigen::Index col = which == Which::Smallest ? i : steps - 1 - i;
        const double residual = b * std::abs(tri.eigenvectors()(steps - 1, col));
        if (residual > tol * std::max(1.0, std::abs(theta(col)))) {
          converged = false;
          break;
        }
      }
      if (converged || last) return select(theta, k, which);
    }

    if (basis.cols() == steps) {
      basis.conservativeResize(Eigen::NoChange, std::min<Eigen::Index>(n, 2 * steps));
    }
    basis.col(steps) = w;
    beta.push_back(b);
  }
  throw Error(ErrorKind::SingularSystem, "Lanczos iteration did not converge");
}

Eigen::SparseMatrix<double> sparse_matrix(const Graph& g, Representation rep) {
  const auto n = static_cast<Eigen::Index>(g.n());
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(2 * g.m() + g.n());
  std::vector<double> scale(g.n(), 1.0);
  if (rep == Representation::NormalizedLaplacian) {
    for (std::size_t v = 0; v < g.n(); ++v) {
      const double d = g.weighted_degree(static_cast<Vertex>(v));
      scale[v] = d != 0.0 ? 1.0 / std::sqrt(d) : 0.0;
    }
  }
  const double sign = rep == Representation::Adjacency ? 1.0 : -1.0;
  for (const auto& e : g.edges()) {
    const double x = sign * e.w * scale[static_cast<std::size_t>(e.i)] *
                     scale[static_cast<std::size_t>(e.j)];
    triplets.emplace_back(e.i, e.j, x);
    triplets.emplace_back(e.j, e.i, x);
  }
  if (rep != Representation::Adjacency) {
    for (std::size_t v = 0; v < g.n(); ++v) {
      const double d = g.weighted_degree(static_cast<Vertex>(v));
      const double x = d * scale[v] * scale[v];
      if (x != 0.0) triplets.emplace_back(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(v), x);
    }
  }
  Eigen::SparseMatrix<double> m(n, n);
  m.setFromTriplets(triplets.begin(), triplets.end());
  return m;
}

Spectrum spectrum(const Graph& g, Representation rep, std::optional<std::size_t> k) {
  const std::size_t n = g.n();
  const std::size_t count = k.value_or(n);
  check_k(count, n);
  const Which order = natural_order(rep);

  Spectrum out;
  out.representation = rep;
  if (n > kDenseEigenLimit && count * 10 <= n) {
    out.values = lanczos_eigenvalues(sparse_matrix(g, rep), count, order);
  } else {
    Eigen::MatrixXd mat = rep == Representation::Adjacency
                              ? adjacency_matrix(g)
                              : laplacian_matrix(g, rep == Representation::NormalizedLaplacian);
    out.values = sym_eigenvalues(mat, count, order);
  }
  if (rep != Representation::Adjacency) {
    for (double& x : out.values) x = std::max(x, 0.0);
  }
  return out;
}

Eigen::MatrixXd laplacian_pseudoinverse(const Eigen::MatrixXd& laplacian) {
  const auto n = static_cast<std::size_t>(laplacian.rows());
  if (n == 0) return Eigen::MatrixXd();
  if (n >= 2) {
    const auto low = sym_eigenvalues(laplacian, 2, Which::Smallest);
    if (low[1] < 1e-10) {
      throw Error(ErrorKind::Disconnected,
                  "second-smallest Laplacian eigenvalue " + std::to_string(low[1]));
    }
  }
  return pinv_connected(laplacian);
}

Eigen::MatrixXd resistance_matrix(const Graph& g) {
  if (!is_connected(g)) {
    throw Error(ErrorKind::Disconnected, "effective resistance needs a connected graph");
  }
  if (g.n() == 0) return Eigen::MatrixXd();
  return resistances_from_pinv(pinv_connected(laplacian_matrix(g, false)));
}

Eigen::MatrixXd renormalized_resistance_matrix(const Graph& g, std::optional<double> penalty) {
  const auto n = static_cast<Eigen::Index>(g.n());
  const double fill = penalty.value_or(static_cast<double>(g.n()));
  if (!(fill > 0.0)) throw Error(ErrorKind::InvalidParams, "penalty must be positive");

  const auto comps = connected_components(g);
  if (comps.size() <= 1) return resistance_matrix(g);

  Eigen::MatrixXd r = Eigen::MatrixXd::Constant(n, n, fill);
  r.diagonal().setZero();
  std::vector<Vertex> local(g.n(), -1);
  for (const auto& comp : comps) {
    if (comp.size() < 2) continue;
    for (std::size_t a = 0; a < comp.size(); ++a) local[static_cast<std::size_t>(comp[a])] = static_cast<Vertex>(a);
    std::vector<EdgeInput> edges;
    for (Vertex v : comp) {
      for (const auto& nb : g.neighbors(v)) {
        if (v < nb.v) edges.push_back({local[static_cast<std::size_t>(v)], local[static_cast<std::size_t>(nb.v)], nb.w});
      }
    }
    const Eigen::MatrixXd sub =
        resistances_from_pinv(pinv_connected(laplacian_matrix(Graph(comp.size(), edges), false)));
    for (std::size_t a = 0; a < comp.size(); ++a) {
      for (std::size_t b = 0; b < comp.size(); ++b) {
        r(comp[a], comp[b]) = sub(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
      }
    }
  }
  return r;
}

Eigen::MatrixXd fbp_matrix(const Graph& g, double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw Error(ErrorKind::InvalidParams, "eps must be positive");
  }
  const auto n = static_cast<Eigen::Index>(g.n());
  Eigen::MatrixXd system = -eps * adjacency_matrix(g);
  for (Eigen::Index v = 0; v < n; ++v) {
    system(v, v) = 1.0 + eps * eps * g.weighted_degree(static_cast<Vertex>(v));
  }
  Eigen::LLT<Eigen::MatrixXd> llt(system);
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorKind::SingularSystem,
                "I + eps^2 D - eps A is not positive definite for eps = " + std::to_string(eps));
  }
  Eigen::MatrixXd s = llt.solve(Eigen::MatrixXd::Identity(n, n));
  return 0.5 * (s + s.transpose());
}

double default_fbp_eps(const Graph& g) {
  double dmax = 0.0;
  for (std::size_t v = 0; v < g.n(); ++v) {
    dmax = std::max(dmax, g.weighted_degree(static_cast<Vertex>(v)));
  }
  return 1.0 / (1.0 + dmax);
}

}  // namespace netdist
