#include <doctest.h>

#include <random>
#include <set>

#include "abfactor/canonical.hpp"
#include "abfactor/error.hpp"
#include "abfactor/graph6.hpp"
#include "oracles.hpp"

using namespace abfactor;

TEST_CASE("small isomorphism examples") {
  Graph p1(4);
  p1.add_edge(0, 1);
  p1.add_edge(1, 2);
  p1.add_edge(2, 3);
  Graph p2(4);  // path 2-0-3-1
  p2.add_edge(2, 0);
  p2.add_edge(0, 3);
  p2.add_edge(3, 1);
  CHECK(are_isomorphic(p1, p2));
  CHECK_FALSE(are_isomorphic(star_graph(3), path_graph(4)));
  CHECK(canonical_form(cycle_graph(5)) == canonical_form(complement(cycle_graph(5))));
  CHECK_FALSE(are_isomorphic(cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3))));
  CHECK(canonical_form(Graph(0)).code == "?");
}

TEST_CASE("canonical form is a valid relabelling") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Graph g = oracle::random_graph(rng, n, 0.45);
    const std::vector<int> labels = canonical_labeling(g);
    std::vector<int> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> identity(static_cast<std::size_t>(n));
    std::iota(identity.begin(), identity.end(), 0);
    CHECK(sorted == identity);
    CHECK(canonical_form(g).code == to_graph6(g.relabeled(labels)));
    CHECK(canonical_graph(g).edge_count() == g.edge_count());
  }
}

TEST_CASE("invariance under 1000 random relabellings") {
  std::mt19937_64 rng(12);
  std::vector<Graph> graphs = {petersen_graph(), cycle_graph(9), complete_bipartite_graph(3, 4),
                               threshold_extremal(3, 8)};
  for (int i = 0; i < 4; ++i) graphs.push_back(oracle::random_graph(rng, 10, 0.3 + 0.1 * i));
  // A 3-regular graph on 12 vertices: the refinement alone cannot split it.
  Graph prism(12);
  for (int i = 0; i < 6; ++i) {
    prism.add_edge(i, (i + 1) % 6);
    prism.add_edge(6 + i, 6 + (i + 1) % 6);
    prism.add_edge(i, 6 + i);
  }
  graphs.push_back(prism);
  for (const Graph& g : graphs) {
    const CanonicalForm expected = canonical_form(g);
    for (int trial = 0; trial < 1000; ++trial) {
      const Graph h = g.relabeled(oracle::random_permutation(rng, g.order()));
      REQUIRE(canonical_form(h) == expected);
    }
  }
}

TEST_CASE("agrees with the all-permutations oracle") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const double density = 0.2 + 0.6 * static_cast<double>(rng() % 100) / 100.0;
    Graph g = oracle::random_graph(rng, n, density);
    Graph h = oracle::random_graph(rng, n, density);
    // Bias towards isomorphic and near-isomorphic pairs.
    if (trial % 3 == 0) h = g.relabeled(oracle::random_permutation(rng, n));
    if (trial % 3 == 1 && g.edge_count() > 0) {
      h = g.relabeled(oracle::random_permutation(rng, n));
      const Edge e = h.edges().front();
      h.remove_edge(e.u, e.v);
      h.add_edge(e.u, (e.v + 1) % n == e.u ? (e.v + 2) % n : (e.v + 1) % n);
    }
    const bool expected = oracle::brute_canonical(g) == oracle::brute_canonical(h);
    CHECK(are_isomorphic(g, h) == expected);
    CHECK((canonical_form(g) == canonical_form(h)) == expected);
  }
}

TEST_CASE("coloured canonical forms keep colours apart") {
  // P3 with its centre coloured differently from the ends vs an end coloured.
  const Graph p = path_graph(3);
  const std::vector<int> centre{0, 1, 0};
  const std::vector<int> end{1, 0, 0};
  CHECK(canonical_form(p, centre) != canonical_form(p, end));
  const std::vector<int> other_end{0, 0, 1};
  CHECK(canonical_form(p, end) == canonical_form(p, other_end));
  CHECK_THROWS_AS(canonical_form(p, std::vector<int>{0, 1}), InvalidArgument);

  // K_{1,2} with the centre on the left side versus on the right side.
  BipartiteGraph left(1, 2);
  left.add_edge(0, 0);
  left.add_edge(0, 1);
  BipartiteGraph right(2, 1);
  right.add_edge(0, 0);
  right.add_edge(1, 0);
  CHECK(canonical_form(left) == canonical_form(right));
  CHECK(canonical_form(left.transposed(), true) == canonical_form(right, true));
  CHECK(canonical_form(left, true) != canonical_form(left.transposed(), true));
}
