#include "abfactor/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <numeric>

#include "abfactor/error.hpp"
#include "abfactor/graph6.hpp"

namespace abfactor {

namespace {

// Ordered partition of the vertex set: lab lists vertices by position and
// cell_start[i] is the first position of the cell holding position i.
struct OrderedPartition {
  int n = 0;
  std::array<std::uint8_t, kMaxOrder> lab{};
  std::array<std::uint8_t, kMaxOrder> cell_start{};

  bool discrete() const {
    for (int i = 0; i < n; ++i) {
      if (cell_start[i] != i) return false;
    }
    return true;
  }
};

// Colour refinement to the coarsest equitable partition finer than p. Cells
// split by the vector of neighbour counts into every current cell; the new
// cells are ordered by that vector, so the result is relabelling-equivariant.
void refine(const Graph& g, OrderedPartition& p) {
  const int n = p.n;
  std::array<std::array<std::uint8_t, kMaxOrder>, kMaxOrder> counts;
  std::array<int, kMaxOrder> order{};
  while (true) {
    std::array<int, kMaxOrder> starts{};
    std::array<VertexSet, kMaxOrder> masks{};
    int cells = 0;
    for (int i = 0; i < n; ++i) {
      if (p.cell_start[i] == i) starts[cells++] = i;
      masks[cells - 1] |= vertex_bit(p.lab[i]);
    }
    if (cells == n) return;
    for (int i = 0; i < n; ++i) {
      const VertexSet row = g.neighbors(p.lab[i]);
      for (int c = 0; c < cells; ++c) {
        counts[i][c] = static_cast<std::uint8_t>(std::popcount(row & masks[c]));
      }
    }
    bool split = false;
    for (int c = 0; c < cells; ++c) {
      const int begin = starts[c];
      const int end = c + 1 < cells ? starts[c + 1] : n;
      if (end - begin < 2) continue;
      std::iota(order.begin() + begin, order.begin() + end, begin);
      auto less = [&](int x, int y) {
        return std::memcmp(counts[x].data(), counts[y].data(), static_cast<std::size_t>(cells)) < 0;
      };
      std::sort(order.begin() + begin, order.begin() + end, less);
      std::array<std::uint8_t, kMaxOrder> lab_copy = p.lab;
      int current = begin;
      for (int i = begin; i < end; ++i) {
        if (i > begin && less(order[i - 1], order[i])) {
          current = i;
          split = true;
        }
        p.lab[i] = lab_copy[order[i]];
        p.cell_start[i] = static_cast<std::uint8_t>(current);
      }
    }
    if (!split) return;
  }
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {}

  void run(OrderedPartition p) {
    refine(g_, p);
    search(p);
  }

  const std::array<std::uint8_t, kMaxOrder>& best_lab() const { return best_lab_; }

 private:
  bool twins(int u, int v) const {
    return (g_.neighbors(u) & ~vertex_bit(v)) == (g_.neighbors(v) & ~vertex_bit(u));
  }

  void search(const OrderedPartition& p) {
    if (p.discrete()) {
      evaluate_leaf(p);
      return;
    }
    int begin = 0;
    while (begin + 1 < n_ && p.cell_start[begin + 1] != begin) ++begin;
    int end = begin + 1;
    while (end < n_ && p.cell_start[end] == begin) ++end;

    // Transposing two twins is an automorphism that fixes p, so only one
    // twin per class needs a subtree.
    VertexSet tried = 0;
    for (int i = begin; i < end; ++i) {
      const int v = p.lab[i];
      bool redundant = false;
      for (VertexSet t = tried; t != 0; t &= t - 1) {
        if (twins(std::countr_zero(t), v)) {
          redundant = true;
          break;
        }
      }
      if (redundant) continue;
      tried |= vertex_bit(v);

      OrderedPartition child = p;
      std::swap(child.lab[begin], child.lab[i]);
      for (int j = begin + 1; j < end; ++j) child.cell_start[j] = static_cast<std::uint8_t>(begin + 1);
      refine(g_, child);
      search(child);
    }
  }

  // Column j of the relabelled upper triangle, most significant bit = row 0.
  // Leaves are compared column by column; the maximum wins.
  void evaluate_leaf(const OrderedPartition& p) {
    std::array<int, kMaxOrder> pos{};
    for (int i = 0; i < n_; ++i) pos[p.lab[i]] = i;
    bool greater = !have_best_;
    for (int j = 1; j < n_; ++j) {
      VertexSet col = 0;
      for (VertexSet nb = g_.neighbors(p.lab[j]); nb != 0; nb &= nb - 1) {
        const int i = pos[std::countr_zero(nb)];
        if (i < j) col |= VertexSet{1} << (63 - i);
      }
      if (!greater) {
        if (col < best_cols_[j]) return;
        if (col > best_cols_[j]) greater = true;
      }
      leaf_cols_[j] = col;
    }
    if (greater) {
      best_cols_ = leaf_cols_;
      best_lab_ = p.lab;
      have_best_ = true;
    }
  }

  const Graph& g_;
  int n_;
  bool have_best_ = false;
  std::array<VertexSet, kMaxOrder> best_cols_{};
  std::array<VertexSet, kMaxOrder> leaf_cols_{};
  std::array<std::uint8_t, kMaxOrder> best_lab_{};
};

std::vector<int> labeling_from_ranks(const Graph& g, std::span<const int> ranks) {
  const int n = g.order();
  OrderedPartition p;
  p.n = n;
  std::array<int, kMaxOrder> order{};
  std::iota(order.begin(), order.begin() + n, 0);
  std::stable_sort(order.begin(), order.begin() + n,
                   [&](int x, int y) { return ranks[static_cast<std::size_t>(x)] < ranks[static_cast<std::size_t>(y)]; });
  int current = 0;
  for (int i = 0; i < n; ++i) {
    if (i > 0 && ranks[static_cast<std::size_t>(order[i])] != ranks[static_cast<std::size_t>(order[i - 1])]) current = i;
    p.lab[i] = static_cast<std::uint8_t>(order[i]);
    p.cell_start[i] = static_cast<std::uint8_t>(current);
  }
  CanonicalSearch search(g);
  if (n > 0) search.run(p);
  std::vector<int> result(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) result[search.best_lab()[i]] = i;
  return result;
}

std::vector<int> color_ranks(const Graph& g, std::span<const int> colors) {
  if (static_cast<int>(colors.size()) != g.order()) {
    throw InvalidArgument("colour vector size does not match graph order");
  }
  std::vector<int> distinct(colors.begin(), colors.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<int> ranks(colors.size());
  for (std::size_t v = 0; v < colors.size(); ++v) {
    ranks[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), colors[v]) - distinct.begin());
  }
  return ranks;
}

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
  const std::vector<int> ranks(static_cast<std::size_t>(g.order()), 0);
  return labeling_from_ranks(g, ranks);
}

std::vector<int> canonical_labeling(const Graph& g, std::span<const int> colors) {
  return labeling_from_ranks(g, color_ranks(g, colors));
}

CanonicalForm canonical_form(const Graph& g) {
  return {to_graph6(g.relabeled(canonical_labeling(g)))};
}

CanonicalForm canonical_form(const Graph& g, std::span<const int> colors) {
  const std::vector<int> ranks = color_ranks(g, colors);
  const std::vector<int> labels = labeling_from_ranks(g, ranks);
  std::vector<int> by_position(ranks.size());
  for (std::size_t v = 0; v < ranks.size(); ++v) by_position[static_cast<std::size_t>(labels[v])] = ranks[v];
  std::string code = to_graph6(g.relabeled(labels));
  code.push_back('|');
  for (std::size_t i = 0; i < by_position.size(); ++i) {
    if (i > 0) code.push_back(',');
    code += std::to_string(by_position[i]);
  }
  return {std::move(code)};
}

CanonicalForm canonical_form(const BipartiteGraph& b, bool keep_sides) {
  const Graph g = b.to_graph();
  if (!keep_sides) return canonical_form(g);
  std::vector<int> sides(static_cast<std::size_t>(b.order()), 1);
  std::fill(sides.begin(), sides.begin() + b.left_size(), 0);
  return canonical_form(g, sides);
}

Graph canonical_graph(const Graph& g) { return g.relabeled(canonical_labeling(g)); }

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  return canonical_graph(g) == canonical_graph(h);
}

}  // namespace abfactor
