#include "abfactor/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "abfactor/error.hpp"

namespace abfactor {

namespace {

// Iterations without a better Collatz-Wielandt bracket before the start
// vector is perturbed.
constexpr std::uint64_t kStagnationWindow = 20'000;

struct PerronResult {
  double root = 0.0;
  std::vector<double> vector;
  std::uint64_t iterations = 0;
};

// Power iteration for an irreducible nonnegative k x k operator. multiply
// computes y = M x for M = matrix + I. Returns the Perron root of the
// unshifted matrix, certified by the bracket width.
template <class Multiply>
PerronResult power_iteration(int k, Multiply multiply, const SpectralOptions& options) {
  if (!(options.tol > 0.0)) throw InvalidArgument("spectral tolerance must be positive");
  PerronResult result;
  std::vector<double> x(static_cast<std::size_t>(k));
  std::vector<double> y(static_cast<std::size_t>(k));
  for (int attempt = 0; attempt < 2; ++attempt) {
    for (int i = 0; i < k; ++i) {
      x[static_cast<std::size_t>(i)] = attempt == 0 ? 1.0 : 1.0 + static_cast<double>(i) / k;
    }
    double best_width = std::numeric_limits<double>::infinity();
    std::uint64_t last_progress = result.iterations;
    while (result.iterations < options.max_iterations) {
      ++result.iterations;
      multiply(x, y);
      double lo = std::numeric_limits<double>::infinity();
      double hi = 0.0;
      double norm = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        const double ratio = y[i] / x[i];
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
        norm = std::max(norm, y[i]);
      }
      for (std::size_t i = 0; i < x.size(); ++i) x[i] = y[i] / norm;
      if (hi - lo <= options.tol) {
        const double two_norm = std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
        for (double& v : x) v /= two_norm;
        result.root = 0.5 * (lo + hi) - 1.0;
        result.vector = std::move(x);
        return result;
      }
      if (hi - lo < best_width) {
        best_width = hi - lo;
        last_progress = result.iterations;
      } else if (result.iterations - last_progress > kStagnationWindow) {
        break;
      }
    }
  }
  throw NonConvergence("power iteration did not reach tolerance within " +
                       std::to_string(options.max_iterations) + " iterations");
}

// Components of the symmetric support pattern of a dense matrix.
std::vector<std::vector<int>> support_components(const std::vector<std::vector<double>>& m) {
  const int k = static_cast<int>(m.size());
  std::vector<int> component(static_cast<std::size_t>(k), -1);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < k; ++start) {
    if (component[static_cast<std::size_t>(start)] >= 0) continue;
    out.emplace_back();
    std::vector<int> stack{start};
    component[static_cast<std::size_t>(start)] = static_cast<int>(out.size()) - 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      out.back().push_back(u);
      for (int v = 0; v < k; ++v) {
        const bool linked = m[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] != 0.0 ||
                            m[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] != 0.0;
        if (linked && component[static_cast<std::size_t>(v)] < 0) {
          component[static_cast<std::size_t>(v)] = component[static_cast<std::size_t>(start)];
          stack.push_back(v);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

}  // namespace

SpectralResult spectral_radius(const Graph& g, SpectralOptions options) {
  if (!(options.tol > 0.0)) throw InvalidArgument("spectral tolerance must be positive");
  const int n = g.order();
  SpectralResult result;
  if (n == 0) return result;
  result.vector.assign(static_cast<std::size_t>(n), 1.0 / std::sqrt(static_cast<double>(n)));

  bool have = false;
  for (VertexSet comp : g.components()) {
    const int k = std::popcount(comp);
    if (k < 2) continue;
    std::array<int, kMaxOrder> members{};
    std::array<int, kMaxOrder> index{};
    int i = 0;
    for (VertexSet s = comp; s != 0; s &= s - 1) {
      members[i] = std::countr_zero(s);
      index[members[i]] = i;
      ++i;
    }
    auto multiply = [&](const std::vector<double>& x, std::vector<double>& y) {
      for (int r = 0; r < k; ++r) {
        double sum = x[static_cast<std::size_t>(r)];
        for (VertexSet nb = g.neighbors(members[r]); nb != 0; nb &= nb - 1) {
          sum += x[static_cast<std::size_t>(index[std::countr_zero(nb)])];
        }
        y[static_cast<std::size_t>(r)] = sum;
      }
    };
    PerronResult part = power_iteration(k, multiply, options);
    result.iterations += part.iterations;
    if (!have || part.root > result.radius) {
      have = true;
      result.radius = part.root;
      std::fill(result.vector.begin(), result.vector.end(), 0.0);
      for (int r = 0; r < k; ++r) {
        result.vector[static_cast<std::size_t>(members[r])] = part.vector[static_cast<std::size_t>(r)];
      }
    }
  }

  for (int v = 0; v < n; ++v) {
    double sum = 0.0;
    for (VertexSet nb = g.neighbors(v); nb != 0; nb &= nb - 1) {
      sum += result.vector[static_cast<std::size_t>(std::countr_zero(nb))];
    }
    result.residual = std::max(result.residual, std::abs(sum - result.radius * result.vector[static_cast<std::size_t>(v)]));
  }
  return result;
}

double perron_root(const std::vector<std::vector<double>>& m, SpectralOptions options) {
  for (const auto& row : m) {
    if (row.size() != m.size()) throw InvalidArgument("matrix is not square");
    for (double v : row) {
      if (!(v >= 0.0)) throw InvalidArgument("matrix has a negative entry");
    }
  }
  double best = 0.0;
  for (const std::vector<int>& comp : support_components(m)) {
    const int k = static_cast<int>(comp.size());
    if (k == 1) {
      best = std::max(best, m[static_cast<std::size_t>(comp[0])][static_cast<std::size_t>(comp[0])]);
      continue;
    }
    auto multiply = [&](const std::vector<double>& x, std::vector<double>& y) {
      for (int r = 0; r < k; ++r) {
        const auto& row = m[static_cast<std::size_t>(comp[static_cast<std::size_t>(r)])];
        double sum = x[static_cast<std::size_t>(r)];
        for (int c = 0; c < k; ++c) {
          sum += row[static_cast<std::size_t>(comp[static_cast<std::size_t>(c)])] * x[static_cast<std::size_t>(c)];
        }
        y[static_cast<std::size_t>(r)] = sum;
      }
    };
    best = std::max(best, power_iteration(k, multiply, options).root);
  }
  return best;
}

QuotientMatrix quotient_matrix(const Graph& g, const VertexPartition& pi) {
  if (pi.order() != g.order()) throw InvalidArgument("partition order does not match graph order");
  const std::size_t s = pi.size();
  QuotientMatrix q;
  q.entries.assign(s, std::vector<double>(s, 0.0));
  q.equitable = true;
  for (std::size_t i = 0; i < s; ++i) {
    const auto& block = pi.block(i);
    for (std::size_t j = 0; j < s; ++j) {
      const VertexSet target = pi.block_mask(j);
      int total = 0;
      const int first = std::popcount(g.neighbors(block.front()) & target);
      for (int v : block) {
        const int count = std::popcount(g.neighbors(v) & target);
        total += count;
        if (count != first) q.equitable = false;
      }
      q.entries[i][j] = static_cast<double>(total) / static_cast<double>(block.size());
    }
  }
  return q;
}

double quotient_spectral_radius(const QuotientMatrix& q, SpectralOptions options) {
  if (!q.equitable) throw InvalidArgument("quotient matrix is not equitable");
  return perron_root(q.entries, options);
}

Biquadratic phi1(int p, int q, int a) {
  if (a < 1 || p < 1 || p > q) throw InvalidArgument("phi1 needs a >= 1 and 1 <= p <= q");
  const std::int64_t P = p;
  const std::int64_t Q = q;
  const std::int64_t A = a;
  return {1, P * Q - P + A - 1, (A - 1) * (Q - 1) * (P - A + 1)};
}

Biquadratic phi2(int n, int a) {
  if (n % 2 != 0) throw InvalidArgument("phi2 needs even n");
  if (a < 1 || n < 2) throw InvalidArgument("phi2 needs a >= 1 and n >= 2");
  const std::int64_t N = n;
  const std::int64_t A = a;
  return {4, N * N - 2 * N + 4 * A - 4, N * (A - 1) * (N - 2 * A)};
}

Biquadratic phi3(int n, int a) {
  if (n % 2 == 0) throw InvalidArgument("phi3 needs odd n");
  if (a < 1 || n < 3) throw InvalidArgument("phi3 needs a >= 1 and n >= 3");
  const std::int64_t N = n;
  const std::int64_t A = a;
  return {4, N * N - 2 * N + 4 * A - 3, (A - 1) * (N - 1) * (N - 2 * A + 1)};
}

namespace {

__int128 discriminant(const Biquadratic& poly) {
  return static_cast<__int128>(poly.c) * poly.c - static_cast<__int128>(4) * poly.lead * poly.d;
}

void check_real_roots(const Biquadratic& poly) {
  if (poly.lead <= 0 || poly.c < 0 || poly.d < 0 || discriminant(poly) < 0) {
    throw InvalidArgument("biquadratic has no real nonnegative roots in x^2");
  }
}

}  // namespace

double largest_root(const Biquadratic& poly) {
  check_real_roots(poly);
  const double disc = static_cast<double>(discriminant(poly));
  const double t = (static_cast<double>(poly.c) + std::sqrt(disc)) / (2.0 * static_cast<double>(poly.lead));
  return std::sqrt(t);
}

int compare_root_square(const Biquadratic& poly, std::int64_t f) {
  check_real_roots(poly);
  // The larger root t+ of lead t^2 - c t + d against f.
  const __int128 F = f;
  const __int128 value = static_cast<__int128>(poly.lead) * F * F - static_cast<__int128>(poly.c) * F + poly.d;
  const bool right_of_vertex = 2 * static_cast<__int128>(poly.lead) * F >= poly.c;
  if (value < 0) return 1;
  if (value == 0) return right_of_vertex ? 0 : 1;
  return 2 * static_cast<__int128>(poly.lead) * F > poly.c ? -1 : 1;
}

bool check_edge_bound(const Graph& g, double tol) {
  if (g.order() == 0 || !g.is_connected()) throw InvalidArgument("edge bound needs a connected graph");
  const double bound = std::sqrt(2.0 * g.edge_count() - g.order() + 1.0);
  return spectral_radius(g).radius <= bound + tol;
}

bool check_bipartite_bound(const BipartiteGraph& b, double tol) {
  return spectral_radius(b.to_graph()).radius <= std::sqrt(static_cast<double>(b.edge_count())) + tol;
}

}  // namespace abfactor
