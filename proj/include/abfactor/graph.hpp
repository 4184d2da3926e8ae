#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace abfactor {

inline constexpr int kMaxOrder = 64;

/// Vertex subsets of a graph with at most 64 vertices.
using VertexSet = std::uint64_t;

constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << v; }

constexpr VertexSet first_vertices(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph on vertices 0..n-1, stored as one 64-bit
/// neighbourhood mask per vertex. The null graph (n = 0) is permitted so
/// that K_0 behaves as the identity of join and disjoint union.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);

  static Graph from_edges(int order, std::span<const Edge> edges);

  int order() const { return n_; }
  int edge_count() const;

  bool has_edge(int u, int v) const { return (rows_[u] >> v) & 1U; }
  VertexSet neighbors(int v) const { return rows_[v]; }
  int degree(int v) const { return std::popcount(rows_[v]); }
  int min_degree() const;
  int max_degree() const;
  std::vector<int> degrees() const;
  VertexSet vertices() const { return first_vertices(n_); }

  /// Edges as (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  /// Graph whose vertex perm[i] is adjacent to perm[j] iff i ~ j here.
  Graph relabeled(std::span<const int> perm) const;
  Graph induced(VertexSet subset) const;

  bool is_connected() const;
  /// Vertex sets of the connected components, ordered by smallest vertex.
  std::vector<VertexSet> components() const;

  friend bool operator==(const Graph& lhs, const Graph& rhs);

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::array<VertexSet, kMaxOrder> rows_{};
};

/// Bipartite graph with labelled parts X (size p) and Y (size q). Row x of
/// the biadjacency matrix is the set of Y-neighbours of x.
class BipartiteGraph {
 public:
  BipartiteGraph(int p, int q);

  int left_size() const { return p_; }
  int right_size() const { return q_; }
  int order() const { return p_ + q_; }
  int edge_count() const;

  bool has_edge(int x, int y) const { return (rows_[x] >> y) & 1U; }
  VertexSet left_neighbors(int x) const { return rows_[x]; }
  VertexSet right_neighbors(int y) const;
  int left_degree(int x) const { return std::popcount(rows_[x]); }
  int right_degree(int y) const { return std::popcount(right_neighbors(y)); }

  void add_edge(int x, int y);
  void remove_edge(int x, int y);

  /// X becomes vertices 0..p-1, Y becomes p..p+q-1.
  Graph to_graph() const;
  /// The same graph with the roles of X and Y exchanged.
  BipartiteGraph transposed() const;

  friend bool operator==(const BipartiteGraph& lhs, const BipartiteGraph& rhs);

 private:
  int p_;
  int q_;
  std::array<VertexSet, kMaxOrder> rows_{};
};

/// Ordered list of disjoint nonempty blocks covering 0..n-1.
class VertexPartition {
 public:
  VertexPartition(int order, std::vector<std::vector<int>> blocks);

  int order() const { return n_; }
  std::size_t size() const { return blocks_.size(); }
  const std::vector<int>& block(std::size_t i) const { return blocks_[i]; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  VertexSet block_mask(std::size_t i) const { return masks_[i]; }

 private:
  int n_;
  std::vector<std::vector<int>> blocks_;
  std::vector<VertexSet> masks_;
};

// Constructions. Every function throws InvalidArgument when the result would
// exceed 64 vertices or a documented precondition fails.

Graph complete(int n);
Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
Graph petersen_graph();
BipartiteGraph complete_bipartite(int p, int q);
/// K_p,q as a plain graph; either side may be empty.
Graph complete_bipartite_graph(int p, int q);

Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph complement(const Graph& g);

/// K_{a-1} v (K_{n-a} u K_1): the factor-free graph with the most edges.
Graph threshold_extremal(int a, int n);

/// D(p_1..p_h; q_1..q_h): block X_i is complete to Y_1..Y_{h+1-i}. Zero
/// block sizes are allowed; each side needs at least one vertex.
BipartiteGraph double_nested(std::span<const int> ps, std::span<const int> qs);
/// As double_nested, but a side may be empty (the result is then edgeless).
Graph double_nested_graph(std::span<const int> ps, std::span<const int> qs);

/// K_{p,q}^e: K_{p,q} minus pq-e edges at one vertex of the q-side.
BipartiteGraph near_complete_bipartite(int p, int q, int e);

/// (K_t v (K_{r-t} u K_1)) u (n-r-1)K_1 where e = C(r,2) + t, 0 < t <= r.
Graph edge_spectral_extremal(int n, int e);

std::string to_string(const Graph& g);

}  // namespace abfactor
