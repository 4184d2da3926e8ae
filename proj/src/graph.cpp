#include "abfactor/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "abfactor/error.hpp"

namespace abfactor {

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxOrder) {
    throw InvalidArgument("graph order " + std::to_string(n) +
                          " outside [0, 64]");
  }
}

void check_sizes(std::span<const int> sizes, const char* what) {
  for (int s : sizes) {
    if (s < 0) {
      throw InvalidArgument(std::string(what) + ": negative block size");
    }
  }
}

}  // namespace

Graph::Graph(int order) : n_(order) { check_order(order); }

Graph Graph::from_edges(int order, std::span<const Edge> edges) {
  Graph g(order);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
  }
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(rows_[v]);
  return twice / 2;
}

int Graph::min_degree() const {
  int best = n_ == 0 ? 0 : kMaxOrder;
  for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> out(static_cast<std::size_t>(n_));
  for (int v = 0; v < n_; ++v) out[static_cast<std::size_t>(v)] = degree(v);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    VertexSet later = rows_[u] & ~first_vertices(u + 1);
    while (later != 0) {
      int v = std::countr_zero(later);
      later &= later - 1;
      out.push_back({u, v});
    }
  }
  return out;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InvalidArgument("loops are not allowed");
  rows_[u] |= vertex_bit(v);
  rows_[v] |= vertex_bit(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  rows_[u] &= ~vertex_bit(v);
  rows_[v] &= ~vertex_bit(u);
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) {
    throw InvalidArgument("permutation size does not match graph order");
  }
  Graph out(n_);
  for (int u = 0; u < n_; ++u) {
    VertexSet row = 0;
    VertexSet nbrs = rows_[u];
    while (nbrs != 0) {
      int v = std::countr_zero(nbrs);
      nbrs &= nbrs - 1;
      row |= vertex_bit(perm[static_cast<std::size_t>(v)]);
    }
    out.rows_[perm[static_cast<std::size_t>(u)]] = row;
  }
  return out;
}

Graph Graph::induced(VertexSet subset) const {
  subset &= vertices();
  std::array<int, kMaxOrder> index{};
  int k = 0;
  for (VertexSet s = subset; s != 0; s &= s - 1) index[std::countr_zero(s)] = k++;
  Graph out(k);
  for (VertexSet s = subset; s != 0; s &= s - 1) {
    int u = std::countr_zero(s);
    for (VertexSet t = rows_[u] & subset; t != 0; t &= t - 1) {
      out.rows_[index[u]] |= vertex_bit(index[std::countr_zero(t)]);
    }
  }
  return out;
}

std::vector<VertexSet> Graph::components() const {
  std::vector<VertexSet> out;
  VertexSet unseen = vertices();
  while (unseen != 0) {
    VertexSet comp = unseen & (~unseen + 1);
    VertexSet frontier = comp;
    while (frontier != 0) {
      VertexSet next = 0;
      for (VertexSet f = frontier; f != 0; f &= f - 1) next |= rows_[std::countr_zero(f)];
      frontier = next & ~comp;
      comp |= next;
    }
    out.push_back(comp);
    unseen &= ~comp;
  }
  return out;
}

bool Graph::is_connected() const { return n_ <= 1 || components().size() == 1; }

bool operator==(const Graph& lhs, const Graph& rhs) {
  return lhs.n_ == rhs.n_ &&
         std::equal(lhs.rows_.begin(), lhs.rows_.begin() + lhs.n_, rhs.rows_.begin());
}

BipartiteGraph::BipartiteGraph(int p, int q) : p_(p), q_(q) {
  if (p < 1 || q < 1) throw InvalidArgument("bipartite parts must be nonempty");
  if (p + q > kMaxOrder) throw InvalidArgument("bipartite graph exceeds 64 vertices");
}

int BipartiteGraph::edge_count() const {
  int total = 0;
  for (int x = 0; x < p_; ++x) total += std::popcount(rows_[x]);
  return total;
}

VertexSet BipartiteGraph::right_neighbors(int y) const {
  VertexSet out = 0;
  for (int x = 0; x < p_; ++x) {
    if (has_edge(x, y)) out |= vertex_bit(x);
  }
  return out;
}

void BipartiteGraph::add_edge(int x, int y) {
  if (x < 0 || x >= p_ || y < 0 || y >= q_) throw InvalidArgument("bipartite edge out of range");
  rows_[x] |= vertex_bit(y);
}

void BipartiteGraph::remove_edge(int x, int y) {
  if (x < 0 || x >= p_ || y < 0 || y >= q_) throw InvalidArgument("bipartite edge out of range");
  rows_[x] &= ~vertex_bit(y);
}

Graph BipartiteGraph::to_graph() const {
  Graph g(p_ + q_);
  for (int x = 0; x < p_; ++x) {
    for (VertexSet ys = rows_[x]; ys != 0; ys &= ys - 1) g.add_edge(x, p_ + std::countr_zero(ys));
  }
  return g;
}

BipartiteGraph BipartiteGraph::transposed() const {
  BipartiteGraph out(q_, p_);
  for (int x = 0; x < p_; ++x) {
    for (VertexSet ys = rows_[x]; ys != 0; ys &= ys - 1) out.add_edge(std::countr_zero(ys), x);
  }
  return out;
}

bool operator==(const BipartiteGraph& lhs, const BipartiteGraph& rhs) {
  return lhs.p_ == rhs.p_ && lhs.q_ == rhs.q_ &&
         std::equal(lhs.rows_.begin(), lhs.rows_.begin() + lhs.p_, rhs.rows_.begin());
}

VertexPartition::VertexPartition(int order, std::vector<std::vector<int>> blocks)
    : n_(order), blocks_(std::move(blocks)) {
  check_order(order);
  VertexSet seen = 0;
  for (const auto& block : blocks_) {
    if (block.empty()) throw InvalidArgument("partition has an empty block");
    VertexSet mask = 0;
    for (int v : block) {
      if (v < 0 || v >= order) throw InvalidArgument("partition vertex out of range");
      if ((seen | mask) & vertex_bit(v)) throw InvalidArgument("partition blocks overlap");
      mask |= vertex_bit(v);
    }
    seen |= mask;
    masks_.push_back(mask);
  }
  if (seen != first_vertices(order)) throw InvalidArgument("partition does not cover all vertices");
}

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw InvalidArgument("a cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(0, n - 1);
  return g;
}

Graph star_graph(int leaves) { return complete_bipartite_graph(1, leaves); }

Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

BipartiteGraph complete_bipartite(int p, int q) {
  BipartiteGraph b(p, q);
  for (int x = 0; x < p; ++x) {
    for (int y = 0; y < q; ++y) b.add_edge(x, y);
  }
  return b;
}

Graph complete_bipartite_graph(int p, int q) {
  if (p < 0 || q < 0) throw InvalidArgument("negative part size");
  Graph g(p + q);
  for (int x = 0; x < p; ++x) {
    for (int y = 0; y < q; ++y) g.add_edge(x, p + y);
  }
  return g;
}

Graph join(const Graph& g, const Graph& h) {
  Graph out = disjoint_union(g, h);
  for (int u = 0; u < g.order(); ++u) {
    for (int v = 0; v < h.order(); ++v) out.add_edge(u, g.order() + v);
  }
  return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int n = g.order() + h.order();
  if (n > kMaxOrder) throw InvalidArgument("result exceeds 64 vertices");
  Graph out(n);
  for (const Edge& e : g.edges()) out.add_edge(e.u, e.v);
  for (const Edge& e : h.edges()) out.add_edge(g.order() + e.u, g.order() + e.v);
  return out;
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (!g.has_edge(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

namespace {

// Vertices 0..r-1 form K_r; vertex r is adjacent to 0..t-1; the rest are
// isolated. This is K_t v (K_{r-t} u K_1) u (n-r-1)K_1.
Graph clique_with_pendant(int n, int r, int t) {
  Graph g(n);
  for (int u = 0; u < r; ++u) {
    for (int v = u + 1; v < r; ++v) g.add_edge(u, v);
  }
  for (int u = 0; u < t; ++u) g.add_edge(u, r);
  return g;
}

}  // namespace

Graph threshold_extremal(int a, int n) {
  if (a < 1) throw InvalidArgument("threshold_extremal needs a >= 1");
  if (n <= a) throw InvalidArgument("threshold_extremal needs n >= a + 1");
  if (n > kMaxOrder) throw InvalidArgument("result exceeds 64 vertices");
  return clique_with_pendant(n, n - 1, a - 1);
}

Graph double_nested_graph(std::span<const int> ps, std::span<const int> qs) {
  if (ps.size() != qs.size() || ps.empty()) {
    throw InvalidArgument("double_nested needs block lists of equal positive length");
  }
  check_sizes(ps, "double_nested");
  check_sizes(qs, "double_nested");
  const int p = std::accumulate(ps.begin(), ps.end(), 0);
  const int q = std::accumulate(qs.begin(), qs.end(), 0);
  if (p + q > kMaxOrder) throw InvalidArgument("result exceeds 64 vertices");
  const std::size_t h = ps.size();
  // Prefix sums of the Y blocks give the Y-range each X block sees.
  std::vector<int> y_prefix(h + 1, 0);
  for (std::size_t j = 0; j < h; ++j) y_prefix[j + 1] = y_prefix[j] + qs[j];
  Graph g(p + q);
  int x = 0;
  for (std::size_t i = 0; i < h; ++i) {
    const int reach = y_prefix[h - i];
    for (int k = 0; k < ps[i]; ++k, ++x) {
      for (int y = 0; y < reach; ++y) g.add_edge(x, p + y);
    }
  }
  return g;
}

BipartiteGraph double_nested(std::span<const int> ps, std::span<const int> qs) {
  if (ps.size() != qs.size() || ps.empty()) {
    throw InvalidArgument("double_nested needs block lists of equal positive length");
  }
  check_sizes(ps, "double_nested");
  check_sizes(qs, "double_nested");
  const int p = std::accumulate(ps.begin(), ps.end(), 0);
  const int q = std::accumulate(qs.begin(), qs.end(), 0);
  if (p == 0 || q == 0) throw InvalidArgument("double_nested: a side has no vertices");
  Graph g = double_nested_graph(ps, qs);
  BipartiteGraph b(p, q);
  for (int x = 0; x < p; ++x) {
    for (int y = 0; y < q; ++y) {
      if (g.has_edge(x, p + y)) b.add_edge(x, y);
    }
  }
  return b;
}

BipartiteGraph near_complete_bipartite(int p, int q, int e) {
  if (p < 1 || p > q) throw InvalidArgument("near_complete_bipartite needs 1 <= p <= q");
  if (e <= p * q - p || e >= p * q) {
    throw InvalidArgument("near_complete_bipartite needs pq - p < e < pq");
  }
  BipartiteGraph b = complete_bipartite(p, q);
  for (int x = 0; x < p * q - e; ++x) b.remove_edge(x, q - 1);
  return b;
}

Graph edge_spectral_extremal(int n, int e) {
  if (e < 1) throw InvalidArgument("edge_spectral_extremal needs e >= 1");
  // Smallest r with C(r+1, 2) >= e, so that 0 < e - C(r,2) <= r.
  int r = 1;
  while (r * (r + 1) / 2 < e) ++r;
  const int t = e - r * (r - 1) / 2;
  if (r + 1 > n) {
    throw InvalidArgument("e = " + std::to_string(e) + " does not fit on " +
                          std::to_string(n) + " vertices");
  }
  return clique_with_pendant(n, r, t);
}

std::string to_string(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.order() << " E={";
  bool first = true;
  for (const Edge& e : g.edges()) {
    out << (first ? "" : ",") << e.u << '-' << e.v;
    first = false;
  }
  out << '}';
  return out.str();
}

}  // namespace abfactor
