#include "abfactor/factor.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>
#include <unordered_set>

#include "abfactor/error.hpp"

namespace abfactor {

namespace {

void check_bounds(int a, int b) {
  if (a < 1 || a > b) throw InvalidArgument("factor bounds need 1 <= a <= b");
}

// Depth-first search over the edges of a connected graph. Edges are sorted by
// their smaller endpoint, so once the search passes the last edge of vertex u
// that vertex is closed. Two prunes keep every vertex feasible:
// deg <= b, and deg + undecided >= a. Failed states at vertex boundaries are
// memoised; the state there is exactly the degree vector of the open vertices.
class Backtracker {
 public:
  Backtracker(const Graph& g, int a, int b, std::uint64_t& nodes, std::uint64_t limit)
      : g_(g), a_(a), b_(b), nodes_(nodes), limit_(limit), edges_(g.edges()) {
    n_ = g.order();
    for (int v = 0; v < n_; ++v) remaining_[v] = g.degree(v);
    chosen_.reserve(edges_.size());
  }

  bool solve() { return step(0); }
  const std::vector<Edge>& chosen() const { return chosen_; }

 private:
  std::string state_key(int u) const {
    std::string key;
    key.reserve(static_cast<std::size_t>(n_ - u + 1));
    key.push_back(static_cast<char>(u));
    for (int w = u; w < n_; ++w) key.push_back(static_cast<char>(degree_[w]));
    return key;
  }

  bool step(std::size_t i) {
    if (++nodes_ > limit_) {
      throw ResourceLimit("factor search exceeded " + std::to_string(limit_) + " nodes");
    }
    if (i == edges_.size()) return true;
    const auto [u, v] = edges_[i];
    const bool boundary = i == 0 || edges_[i - 1].u != u;
    std::string key;
    if (boundary) {
      key = state_key(u);
      if (failed_.contains(key)) return false;
    }

    --remaining_[u];
    --remaining_[v];
    const bool can_take = degree_[u] < b_ && degree_[v] < b_;
    const bool can_skip = degree_[u] + remaining_[u] >= a_ && degree_[v] + remaining_[v] >= a_;
    const bool take_first = degree_[u] < a_ || degree_[v] < a_;

    bool found = false;
    for (int attempt = 0; attempt < 2 && !found; ++attempt) {
      const bool take = (attempt == 0) == take_first;
      if (take && can_take) {
        ++degree_[u];
        ++degree_[v];
        chosen_.push_back({u, v});
        found = step(i + 1);
        if (!found) {
          chosen_.pop_back();
          --degree_[u];
          --degree_[v];
        }
      } else if (!take && can_skip) {
        found = step(i + 1);
      }
    }
    ++remaining_[u];
    ++remaining_[v];
    if (!found && boundary) failed_.insert(std::move(key));
    return found;
  }

  const Graph& g_;
  int a_;
  int b_;
  int n_ = 0;
  std::uint64_t& nodes_;
  std::uint64_t limit_;
  std::vector<Edge> edges_;
  std::array<int, kMaxOrder> degree_{};
  std::array<int, kMaxOrder> remaining_{};
  std::vector<Edge> chosen_;
  std::unordered_set<std::string> failed_;
};

FactorWitness make_witness(int n, std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  FactorWitness w;
  w.degrees.assign(static_cast<std::size_t>(n), 0);
  for (const Edge& e : edges) {
    ++w.degrees[static_cast<std::size_t>(e.u)];
    ++w.degrees[static_cast<std::size_t>(e.v)];
  }
  w.edges = std::move(edges);
  return w;
}

// Dinic max-flow on a small dense network.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : adjacency_(static_cast<std::size_t>(nodes)) {}

  int add_arc(int from, int to, int capacity) {
    const int id = static_cast<int>(arcs_.size());
    arcs_.push_back({to, capacity});
    arcs_.push_back({from, 0});
    adjacency_[static_cast<std::size_t>(from)].push_back(id);
    adjacency_[static_cast<std::size_t>(to)].push_back(id + 1);
    return id;
  }

  int flow_on(int arc) const { return arcs_[static_cast<std::size_t>(arc) ^ 1U].capacity; }

  long long max_flow(int source, int sink) {
    long long total = 0;
    while (build_levels(source, sink)) {
      next_.assign(adjacency_.size(), 0);
      while (int pushed = augment(source, sink, std::numeric_limits<int>::max())) total += pushed;
    }
    return total;
  }

 private:
  struct Arc {
    int to;
    int capacity;
  };

  bool build_levels(int source, int sink) {
    level_.assign(adjacency_.size(), -1);
    std::queue<int> queue;
    level_[static_cast<std::size_t>(source)] = 0;
    queue.push(source);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (int id : adjacency_[static_cast<std::size_t>(u)]) {
        const Arc& arc = arcs_[static_cast<std::size_t>(id)];
        if (arc.capacity > 0 && level_[static_cast<std::size_t>(arc.to)] < 0) {
          level_[static_cast<std::size_t>(arc.to)] = level_[static_cast<std::size_t>(u)] + 1;
          queue.push(arc.to);
        }
      }
    }
    return level_[static_cast<std::size_t>(sink)] >= 0;
  }

  int augment(int u, int sink, int limit) {
    if (u == sink) return limit;
    auto& out = adjacency_[static_cast<std::size_t>(u)];
    for (std::size_t& k = next_[static_cast<std::size_t>(u)]; k < out.size(); ++k) {
      const int id = out[k];
      Arc& arc = arcs_[static_cast<std::size_t>(id)];
      if (arc.capacity <= 0 ||
          level_[static_cast<std::size_t>(arc.to)] != level_[static_cast<std::size_t>(u)] + 1) {
        continue;
      }
      const int pushed = augment(arc.to, sink, std::min(limit, arc.capacity));
      if (pushed > 0) {
        arc.capacity -= pushed;
        arcs_[static_cast<std::size_t>(id) ^ 1U].capacity += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

}  // namespace

std::optional<FactorWitness> has_factor(const Graph& g, int a, int b, SearchLimits limits) {
  check_bounds(a, b);
  const int n = g.order();
  if (n == 0) return FactorWitness{};
  if (g.min_degree() < a) return std::nullopt;
  if (g.max_degree() <= b) return make_witness(n, g.edges());

  std::uint64_t nodes = 0;
  std::vector<Edge> chosen;
  for (VertexSet comp : g.components()) {
    const int size = std::popcount(comp);
    if (a == b && (size * a) % 2 != 0) return std::nullopt;
    std::array<int, kMaxOrder> original{};
    int k = 0;
    for (VertexSet s = comp; s != 0; s &= s - 1) original[k++] = std::countr_zero(s);
    const Graph part = g.induced(comp);
    Backtracker search(part, a, b, nodes, limits.node_limit);
    if (!search.solve()) return std::nullopt;
    for (const Edge& e : search.chosen()) chosen.push_back({original[e.u], original[e.v]});
  }
  return make_witness(n, std::move(chosen));
}

std::optional<FactorWitness> has_factor_bipartite_flow(const BipartiteGraph& g, int a, int b) {
  check_bounds(a, b);
  const int p = g.left_size();
  const int q = g.right_size();
  const int source = 0;
  const int sink = 1;
  const int x0 = 2;
  const int y0 = 2 + p;
  const int super_source = 2 + p + q;
  const int super_sink = super_source + 1;
  FlowNetwork net(super_sink + 1);
  std::vector<long long> excess(static_cast<std::size_t>(super_sink + 1), 0);

  // Arc with flow in [low, high], through the standard lower-bound shift.
  auto bounded_arc = [&](int from, int to, int low, int high) {
    const int id = net.add_arc(from, to, high - low);
    excess[static_cast<std::size_t>(to)] += low;
    excess[static_cast<std::size_t>(from)] -= low;
    return id;
  };

  for (int x = 0; x < p; ++x) bounded_arc(source, x0 + x, a, b);
  for (int y = 0; y < q; ++y) bounded_arc(y0 + y, sink, a, b);
  std::vector<std::pair<Edge, int>> cross;
  for (int x = 0; x < p; ++x) {
    for (VertexSet ys = g.left_neighbors(x); ys != 0; ys &= ys - 1) {
      const int y = std::countr_zero(ys);
      cross.push_back({{x, p + y}, bounded_arc(x0 + x, y0 + y, 0, 1)});
    }
  }
  net.add_arc(sink, source, std::numeric_limits<int>::max() / 2);

  long long required = 0;
  for (int v = 0; v < super_source; ++v) {
    const long long e = excess[static_cast<std::size_t>(v)];
    if (e > 0) {
      net.add_arc(super_source, v, static_cast<int>(e));
      required += e;
    } else if (e < 0) {
      net.add_arc(v, super_sink, static_cast<int>(-e));
    }
  }
  if (net.max_flow(super_source, super_sink) != required) return std::nullopt;

  std::vector<Edge> chosen;
  for (const auto& [edge, arc] : cross) {
    if (net.flow_on(arc) > 0) chosen.push_back(edge);
  }
  return make_witness(p + q, std::move(chosen));
}

std::optional<CriterionViolation> ff_violation(const BipartiteGraph& g, int a, int b) {
  check_bounds(a, b);
  const int p = g.left_size();
  const int q = g.right_size();
  if (p + q > 22) throw ResourceLimit("ff_violation is limited to p + q <= 22");

  std::array<VertexSet, kMaxOrder> left{};
  std::array<VertexSet, kMaxOrder> right{};
  for (int x = 0; x < p; ++x) left[x] = g.left_neighbors(x);
  for (int y = 0; y < q; ++y) right[y] = g.right_neighbors(y);

  VertexSet s = 0;
  VertexSet t = 0;
  int size_s = 0;
  int size_t_ = 0;
  int degree_sum_s = 0;
  int degree_sum_t = 0;
  int cross_edges = 0;  // e(S, T)
  std::optional<CriterionViolation> worst;

  const std::uint64_t total = std::uint64_t{1} << (p + q);
  for (std::uint64_t step = 1; step < total; ++step) {
    const int bit = std::countr_zero(step);
    if (bit < p) {
      const int x = bit;
      const int sign = (s >> x) & 1U ? -1 : 1;
      s ^= vertex_bit(x);
      size_s += sign;
      degree_sum_s += sign * std::popcount(left[x]);
      cross_edges += sign * std::popcount(left[x] & t);
    } else {
      const int y = bit - p;
      const int sign = (t >> y) & 1U ? -1 : 1;
      t ^= vertex_bit(y);
      size_t_ += sign;
      degree_sum_t += sign * std::popcount(right[y]);
      cross_edges += sign * std::popcount(right[y] & s);
    }
    const int forward = b * size_s + degree_sum_t - a * size_t_ - cross_edges;
    const int backward = b * size_t_ + degree_sum_s - a * size_s - cross_edges;
    if (forward < 0 && (!worst || forward < worst->deficiency)) worst = CriterionViolation{s, t, false, forward};
    if (backward < 0 && (!worst || backward < worst->deficiency)) worst = CriterionViolation{s, t, true, backward};
  }
  return worst;
}

std::optional<FactorWitness> has_k_factor(const Graph& g, int k, SearchLimits limits) {
  if (k < 1) throw InvalidArgument("k-factor needs k >= 1");
  if ((g.order() * k) % 2 != 0) return std::nullopt;
  return has_factor(g, k, k, limits);
}

bool is_valid_witness(const Graph& g, const FactorWitness& w, int a, int b) {
  const int n = g.order();
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  std::vector<Edge> seen;
  for (Edge e : w.edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || e.u == e.v) return false;
    if (!g.has_edge(e.u, e.v)) return false;
    if (e.u > e.v) std::swap(e.u, e.v);
    seen.push_back(e);
    ++degree[static_cast<std::size_t>(e.u)];
    ++degree[static_cast<std::size_t>(e.v)];
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  if (w.degrees != degree) return false;
  return std::all_of(degree.begin(), degree.end(), [&](int d) { return a <= d && d <= b; });
}

}  // namespace abfactor
