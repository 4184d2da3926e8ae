#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "abfactor/canonical.hpp"
#include "abfactor/error.hpp"
#include "abfactor/extremal.hpp"
#include "abfactor/factor.hpp"
#include "oracles.hpp"

using namespace abfactor;

namespace {

std::set<std::uint64_t> classes(const ExtremalAnswer& answer) {
  std::set<std::uint64_t> out;
  for (const auto& e : answer.extremal) out.insert(oracle::brute_canonical(e.graph));
  return out;
}

std::set<CanonicalForm> forms(const ExtremalAnswer& answer) {
  std::set<CanonicalForm> out;
  for (const auto& e : answer.extremal) out.insert(canonical_form(e.graph));
  return out;
}

Graph nested(int p1, int p2, int q1, int q2) {
  const std::array<int, 2> ps{p1, p2};
  const std::array<int, 2> qs{q1, q2};
  return double_nested_graph(ps, qs);
}

// Every listed graph is factor-free and attains the bound.
void check_listed(const ExtremalAnswer& answer, int a, int b) {
  REQUIRE_FALSE(answer.extremal.empty());
  for (const auto& e : answer.extremal) {
    CHECK_FALSE(has_factor(e.graph, a, b));
    if (answer.bound.kind == Bound::Kind::edges) {
      CHECK(e.graph.edge_count() == answer.bound.integer);
    } else {
      CHECK(std::abs(spectral_radius(e.graph).radius - answer.bound.value) < 1e-9);
    }
    if (e.parts) CHECK(e.parts->first + e.parts->second == e.graph.order());
  }
}

}  // namespace

TEST_CASE("f(a,b)") {
  CHECK(f_ab(10, 1, 2) == 21);
  CHECK(f_ab(8, 1, 1) == 15);
  CHECK(f_ab(6, 3, 3) == 8);
  CHECK(f_ab_side(10, 1, 2) == 3);
  CHECK_THROWS_AS(f_ab(0, 1, 1), InvalidArgument);
}

TEST_CASE("edge-extremal examples for general graphs") {
  const ExtremalAnswer a = turan_factor(6, 2, 2);
  CHECK(a.bound.integer == 11);
  CHECK(a.case_label == "ii");
  CHECK(classes(a) == std::set{oracle::brute_canonical(join(complete(1), disjoint_union(complete(4), complete(1))))});
  CHECK(a.extremal.front().name == "K_{1}∨(K_{4}∪K_{1})");

  const ExtremalAnswer b = turan_factor(4, 1, 1);
  CHECK(b.bound.integer == 3);
  CHECK(b.case_label == "i");
  CHECK(classes(b) == std::set{oracle::brute_canonical(disjoint_union(complete(3), complete(1))),
                               oracle::brute_canonical(star_graph(3))});

  const ExtremalAnswer c = turan_factor(7, 3, 4);
  CHECK(c.bound.integer == 17);
  CHECK(c.case_label == "iii");
  CHECK(classes(c) == std::set{oracle::brute_canonical(join(complete(2), disjoint_union(complete(4), complete(1))))});

  const ExtremalAnswer d = turan_factor(5, 2, 2);
  CHECK(d.extremal.size() == 2);
  CHECK_THROWS_AS(turan_factor(5, 1, 1), ParityExcluded);
  CHECK_THROWS_AS(turan_factor(3, 3, 4), InvalidArgument);
  CHECK_THROWS_AS(turan_factor(6, 3, 2), InvalidArgument);
}

TEST_CASE("spectral-extremal examples for general graphs") {
  const ExtremalAnswer a = spectral_turan_factor(6, 1, 1);
  CHECK(a.bound.value == doctest::Approx(4.0).epsilon(1e-12));
  const ExtremalAnswer b = spectral_turan_factor(6, 2, 3);
  const Graph g = join(complete(1), disjoint_union(complete(4), complete(1)));
  CHECK(std::abs(b.bound.value - oracle::jacobi_radius(g)) < 1e-10);
  CHECK(std::abs(b.bound.value - 4.0513742417) < 1e-9);
  CHECK(classes(b) == std::set{oracle::brute_canonical(g)});
  CHECK(b.case_label == "unique");
}

TEST_CASE("bipartite examples with fixed parts") {
  const ExtremalAnswer a = bipartite_parts_turan(2, 5, 1, 2);
  CHECK(a.case_label == "i");
  CHECK(a.bound.integer == 10);
  CHECK(a.extremal.front().name == "K_{2,5}");
  const ExtremalAnswer b = bipartite_parts_turan(4, 4, 2, 2);
  CHECK(b.case_label == "iii");
  CHECK(b.bound.integer == 13);
  CHECK(classes(b) == std::set{oracle::brute_canonical(nested(1, 3, 3, 1))});
  // a|Y| = 9 > b|X| = 6 selects clause (i) even though a > |X| as well.
  const ExtremalAnswer c = bipartite_parts_turan(2, 3, 3, 3);
  CHECK(c.case_label == "i");
  CHECK(c.bound.integer == 6);
  CHECK(classes(c) == std::set{oracle::brute_canonical(complete_bipartite_graph(2, 3))});
  const ExtremalAnswer c2 = bipartite_parts_turan(2, 3, 3, 5);
  CHECK(c2.case_label == "ii");
  CHECK(c2.bound.integer == 6);

  const ExtremalAnswer s = bipartite_parts_spectral(2, 5, 1, 2);
  CHECK(s.bound.kind == Bound::Kind::sqrt_integer);
  CHECK(s.bound.integer == 10);
  CHECK(s.bound.value == doctest::Approx(std::sqrt(10.0)).epsilon(1e-14));
  const ExtremalAnswer t = bipartite_parts_spectral(4, 5, 2, 3);
  CHECK(t.bound.kind == Bound::Kind::biquadratic_root);
  CHECK(std::abs(t.bound.value - 4.032628) < 1e-6);
  CHECK(std::abs(t.bound.value - oracle::jacobi_radius(nested(1, 3, 4, 1))) < 1e-9);
  CHECK_THROWS_AS(bipartite_parts_turan(5, 4, 1, 1), InvalidArgument);
}

TEST_CASE("bipartite examples with fixed order") {
  const ExtremalAnswer a = bipartite_order_turan(10, 1, 2);
  CHECK(a.case_label == "i");
  CHECK(a.bound.integer == 21);
  CHECK(classes(a) == std::set{oracle::brute_canonical(complete_bipartite_graph(3, 7))});

  // f = 15 and g = 4 * 3 + 0 = 12, so the complete bipartite graph alone.
  const ExtremalAnswer b = bipartite_order_turan(8, 1, 1);
  CHECK(b.case_label == "i");
  CHECK(b.bound.integer == 15);
  CHECK(classes(b) == std::set{oracle::brute_canonical(complete_bipartite_graph(3, 5))});

  // Equality f = g = 12 at n = 8, a = 1, b = 2.
  const ExtremalAnswer e = bipartite_order_turan(8, 1, 2);
  CHECK(e.case_label == "ii");
  CHECK(e.bound.integer == 12);
  CHECK(classes(e) == std::set{oracle::brute_canonical(complete_bipartite_graph(2, 6)),
                               oracle::brute_canonical(nested(0, 3, 4, 1))});

  const ExtremalAnswer c = bipartite_order_turan(9, 2, 3);
  CHECK(c.case_label == "i");
  CHECK(c.bound.integer == 18);
  CHECK(classes(c) == std::set{oracle::brute_canonical(complete_bipartite_graph(3, 6))});

  const ExtremalAnswer s = bipartite_order_spectral(10, 1, 2);
  CHECK(s.case_label == "i");
  CHECK(s.bound.integer == 21);
  CHECK(spectral_radius(nested(0, 4, 5, 1)).radius < std::sqrt(21.0));

  const ExtremalAnswer t = bipartite_order_spectral(8, 3, 3);
  CHECK(t.case_label == "i");
  CHECK(t.bound.integer == 15);
  CHECK(classes(t) == std::set{oracle::brute_canonical(complete_bipartite_graph(3, 5))});
  CHECK(oracle::jacobi_radius(nested(2, 1, 4, 1)) < std::sqrt(15.0));

  const ExtremalAnswer u = bipartite_order_spectral(8, 1, 2);
  CHECK(u.case_label == "ii");
  CHECK(u.bound.integer == 12);
  CHECK(u.extremal.size() == 2);
  CHECK_THROWS_AS(bipartite_order_turan(6, 4, 4), InvalidArgument);
}

TEST_CASE("every listed graph is factor-free and attains the bound") {
  for (int n = 2; n <= 10; ++n) {
    for (int a = 1; a <= 4 && a + 1 <= n; ++a) {
      for (int b = a; b <= 4; ++b) {
        if (a == b && (n * a) % 2 != 0) continue;
        check_listed(turan_factor(n, a, b), a, b);
        check_listed(spectral_turan_factor(n, a, b), a, b);
      }
    }
  }
  for (int p = 1; p <= 5; ++p) {
    for (int q = p; p * q <= 25; ++q) {
      for (int a = 1; a <= 3; ++a) {
        for (int b = a; b <= 3; ++b) {
          check_listed(bipartite_parts_turan(p, q, a, b), a, b);
          check_listed(bipartite_parts_spectral(p, q, a, b), a, b);
        }
      }
    }
  }
  for (int n = 2; n <= 12; ++n) {
    for (int a = 1; a <= n / 2 && a <= 3; ++a) {
      for (int b = a; b <= 3; ++b) {
        check_listed(bipartite_order_turan(n, a, b), a, b);
        check_listed(bipartite_order_spectral(n, a, b), a, b);
      }
    }
  }
}

TEST_CASE("spectral extremal graphs are edge extremal") {
  for (int n = 2; n <= 8; ++n) {
    for (int a = 1; a <= 4 && a + 1 <= n; ++a) {
      for (int b = a; b <= 4; ++b) {
        if (a == b && (n * a) % 2 != 0) continue;
        const auto edge = forms(turan_factor(n, a, b));
        for (const auto& f : forms(spectral_turan_factor(n, a, b))) CHECK(edge.count(f) == 1);
      }
    }
  }
  for (int p = 1; p <= 5; ++p) {
    for (int q = p; p * q <= 25; ++q) {
      for (int a = 1; a <= 3; ++a) {
        for (int b = a; b <= 3; ++b) {
          const auto edge = forms(bipartite_parts_turan(p, q, a, b));
          for (const auto& f : forms(bipartite_parts_spectral(p, q, a, b))) CHECK(edge.count(f) == 1);
        }
      }
    }
  }
  for (int n = 2; n <= 12; ++n) {
    for (int a = 1; a <= n / 2 && a <= 3; ++a) {
      for (int b = a; b <= 3; ++b) {
        const auto edge = forms(bipartite_order_turan(n, a, b));
        for (const auto& f : forms(bipartite_order_spectral(n, a, b))) CHECK(edge.count(f) == 1);
      }
    }
  }
}

TEST_CASE("integer clause selection agrees with floating point") {
  int equalities = 0;
  for (int n = 2; n <= 60; ++n) {
    for (int a = 1; a <= n / 2 && a <= 6; ++a) {
      for (int b = a; b <= 6; ++b) {
        const ExtremalAnswer s = bipartite_order_spectral(n, a, b);
        const Biquadratic poly = n % 2 == 0 ? phi2(n, a) : phi3(n, a);
        const double root = largest_root(poly);
        const double f = static_cast<double>(f_ab(n, a, b));
        if (s.case_label == "ii") {
          ++equalities;
          CHECK(std::abs(root - std::sqrt(f)) < 1e-9);
        } else if (std::abs(root - std::sqrt(f)) > 1e-9) {
          CHECK((s.case_label == "i") == (root < std::sqrt(f)));
        }
      }
    }
  }
  CHECK(equalities > 0);
}
