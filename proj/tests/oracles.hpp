#pragma once

// Library-independent reference computations used by the unit and acceptance
// tests. Nothing here calls into Eigen or the netdist numerics; graphs are
// only read through their edge lists.

#include "netdist/graph.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

/// Exact rational over 128-bit integers, always reduced with q > 0.
struct Rational {
  __int128 p = 0;
  __int128 q = 1;

  Rational() = default;
  Rational(long long v) : p(v) {}  // NOLINT(google-explicit-constructor)
  Rational(__int128 num, __int128 den);

  long double value() const { return static_cast<long double>(p) / static_cast<long double>(q); }
  bool is_zero() const { return p == 0; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) { return a.p == b.p && a.q == b.q; }
};

using RationalMatrix = std::vector<std::vector<Rational>>;
/// Coefficients, lowest degree first.
using Poly = std::vector<Rational>;

RationalMatrix adjacency(const netdist::Graph& g);
RationalMatrix laplacian(const netdist::Graph& g);
/// D^+ L: similar to the normalized Laplacian, but with rational entries.
RationalMatrix random_walk_laplacian(const netdist::Graph& g);

/// det(xI - M) by Faddeev-LeVerrier in exact arithmetic.
Poly characteristic_polynomial(const RationalMatrix& m);

/// Yun square-free decomposition: factors[i] collects the roots of
/// multiplicity i + 1.
std::vector<Poly> square_free_factors(const Poly& p);

/// All roots of a polynomial whose roots are real, ascending, with
/// multiplicity. Roots are isolated by the interlacing of each square-free
/// factor with its derivative and refined by bisection.
std::vector<double> real_roots(const Poly& p);

Rational determinant(RationalMatrix m);

/// Effective resistance from spanning-tree counts:
/// R_uv = det(L without rows/cols u, v) / det(L without row/col u).
std::vector<std::vector<double>> kirchhoff_resistance(const netdist::Graph& g);

/// (I + eps^2 D - eps A)^{-1} by Gauss-Jordan elimination with partial
/// pivoting in long double.
std::vector<std::vector<long double>> fbp_dense_solve(const netdist::Graph& g, long double eps);

std::size_t count_triangles(const netdist::Graph& g);

/// Every simple graph on n vertices up to isomorphism (canonical labelling
/// by brute force over permutations, n <= 6).
std::vector<netdist::Graph> unlabeled_graphs(std::size_t n);
/// Every labelled simple graph on n vertices.
std::vector<netdist::Graph> labeled_graphs(std::size_t n);

/// Uniform G(n, p) draw from a test-only generator.
netdist::Graph random_graph(std::size_t n, double p, std::mt19937_64& rng);

}  // namespace oracle
