#pragma once

#include <cstdint>
#include <vector>

#include "abfactor/graph.hpp"

namespace abfactor {

struct SpectralOptions {
  double tol = 1e-12;
  std::uint64_t max_iterations = 1'000'000;
};

struct SpectralResult {
  double radius = 0.0;
  std::vector<double> vector;  // nonnegative, unit 2-norm
  std::uint64_t iterations = 0;
  double residual = 0.0;  // ||A v - radius v||_inf
};

/// Largest adjacency eigenvalue by power iteration on A + I. Each component
/// is iterated separately and the estimate is bracketed by the
/// Collatz-Wielandt bounds min/max (Mx)_i / x_i, so the returned radius is
/// within tol of the true value. Throws NonConvergence at the iteration cap.
SpectralResult spectral_radius(const Graph& g, SpectralOptions options = {});

/// Same routine for an arbitrary nonnegative square matrix whose nonzero
/// pattern is symmetric (quotient matrices of graphs).
double perron_root(const std::vector<std::vector<double>>& m, SpectralOptions options = {});

struct QuotientMatrix {
  std::vector<std::vector<double>> entries;
  bool equitable = false;
};

/// entries[i][j] = e(V_i -> V_j) / |V_i|; equitable iff every vertex of V_i
/// has the same number of neighbours in V_j for all i, j.
QuotientMatrix quotient_matrix(const Graph& g, const VertexPartition& pi);

/// Largest eigenvalue of an equitable quotient matrix; InvalidArgument if
/// the matrix is not equitable.
double quotient_spectral_radius(const QuotientMatrix& q, SpectralOptions options = {});

/// lead * x^4 - c * x^2 + d with integer coefficients.
struct Biquadratic {
  std::int64_t lead = 1;
  std::int64_t c = 0;
  std::int64_t d = 0;

  friend bool operator==(const Biquadratic&, const Biquadratic&) = default;
};

/// x^4 - (pq - p + a - 1) x^2 + (a - 1)(q - 1)(p - a + 1).
Biquadratic phi1(int p, int q, int a);
/// 4 phi1(n/2 - 1, n/2 + 1, a); n even.
Biquadratic phi2(int n, int a);
/// 4 phi1((n - 1)/2, (n + 1)/2, a); n odd.
Biquadratic phi3(int n, int a);

/// sqrt((c + sqrt(c^2 - 4 lead d)) / (2 lead)). InvalidArgument when the
/// roots in x^2 are not real and nonnegative.
double largest_root(const Biquadratic& poly);

/// Sign of largest_root(poly)^2 - f, decided in integer arithmetic.
int compare_root_square(const Biquadratic& poly, std::int64_t f);

/// rho(G) <= sqrt(2e - n + 1) within tol; G must be connected.
bool check_edge_bound(const Graph& g, double tol = 1e-9);
/// rho(G) <= sqrt(e) within tol.
bool check_bipartite_bound(const BipartiteGraph& b, double tol = 1e-9);

}  // namespace abfactor
