#include "abfactor/extremal.hpp"

#include <array>
#include <cmath>

#include "abfactor/error.hpp"

namespace abfactor {

namespace {

std::string num(int v) { return std::to_string(v); }

void check_factor_bounds(int a, int b) {
  if (a < 1 || a > b) throw InvalidArgument("need 1 <= a <= b");
}

void check_general(int n, int a, int b) {
  check_factor_bounds(a, b);
  if (n < a + 1) throw InvalidArgument("need n >= a + 1");
  if (n > kMaxOrder) throw InvalidArgument("order exceeds 64");
  if (a == b && (n * a) % 2 != 0) {
    throw ParityExcluded("a = b with n*a odd: every graph is factor-free");
  }
}

void check_parts(int p, int q, int a, int b) {
  check_factor_bounds(a, b);
  if (p < 1 || p > q) throw InvalidArgument("need 1 <= p <= q");
  if (p + q > kMaxOrder) throw InvalidArgument("order exceeds 64");
}

void check_order(int n, int a, int b) {
  check_factor_bounds(a, b);
  if (n < 2 || n > kMaxOrder) throw InvalidArgument("need 2 <= n <= 64");
  if (a > n / 2) throw InvalidArgument("need a <= floor(n/2)");
}

ExtremalGraph threshold_entry(int a, int n) {
  return {"K_{" + num(a - 1) + "}∨(K_{" + num(n - a) + "}∪K_{1})", threshold_extremal(a, n), std::nullopt};
}

ExtremalGraph complete_entry(int p, int q) {
  return {"K_{" + num(p) + "," + num(q) + "}", complete_bipartite_graph(p, q), std::make_pair(p, q)};
}

// D(p1, p2; q1, q2) with parts (p1 + p2, q1 + q2).
ExtremalGraph nested_entry(int p1, int p2, int q1, int q2) {
  const std::array<int, 2> ps{p1, p2};
  const std::array<int, 2> qs{q1, q2};
  return {"D(" + num(p1) + "," + num(p2) + ";" + num(q1) + "," + num(q2) + ")", double_nested_graph(ps, qs),
          std::make_pair(p1 + p2, q1 + q2)};
}

Bound edge_bound(std::int64_t edges) {
  Bound b;
  b.kind = Bound::Kind::edges;
  b.integer = edges;
  b.value = static_cast<double>(edges);
  return b;
}

Bound sqrt_bound(std::int64_t radicand) {
  Bound b;
  b.kind = Bound::Kind::sqrt_integer;
  b.integer = radicand;
  b.value = std::sqrt(static_cast<double>(radicand));
  return b;
}

Bound root_bound(const Biquadratic& poly) {
  Bound b;
  b.kind = Bound::Kind::biquadratic_root;
  b.poly = poly;
  b.value = largest_root(poly);
  return b;
}

}  // namespace

int f_ab_side(int n, int a, int b) {
  if (n < 1 || a < 1 || b < 1) throw InvalidArgument("f(a,b) needs positive a, b, n");
  return (a * n - 1) / (a + b);
}

std::int64_t f_ab(int n, int a, int b) {
  const std::int64_t k = f_ab_side(n, a, b);
  return k * (n - k);
}

ExtremalAnswer turan_factor(int n, int a, int b) {
  check_general(n, a, b);
  ExtremalAnswer answer;
  answer.theorem = "1.1";
  answer.bound = edge_bound(static_cast<std::int64_t>(n - 1) * (n - 2) / 2 + a - 1);
  answer.extremal.push_back(threshold_entry(a, n));
  if (a * b <= 2) {
    answer.case_label = "i";
    if (n == 4) answer.extremal.push_back({"K_{1,3}", star_graph(3), std::nullopt});
  } else if (a == 2 && b == 2) {
    answer.case_label = "ii";
    if (n == 5) answer.extremal.push_back({"K_{2}∨3K_{1}", join(complete(2), empty_graph(3)), std::nullopt});
  } else {
    answer.case_label = "iii";
  }
  return answer;
}

ExtremalAnswer spectral_turan_factor(int n, int a, int b) {
  check_general(n, a, b);
  ExtremalAnswer answer;
  answer.theorem = "1.2";
  answer.case_label = "unique";
  ExtremalGraph g = threshold_entry(a, n);
  answer.bound.kind = Bound::Kind::graph_radius;
  answer.bound.value = spectral_radius(g.graph).radius;
  answer.extremal.push_back(std::move(g));
  return answer;
}

ExtremalAnswer bipartite_parts_turan(int p, int q, int a, int b) {
  check_parts(p, q, a, b);
  ExtremalAnswer answer;
  answer.theorem = "1.3";
  if (a * q > b * p || a > p) {
    answer.case_label = a * q > b * p ? "i" : "ii";
    answer.bound = edge_bound(static_cast<std::int64_t>(p) * q);
    answer.extremal.push_back(complete_entry(p, q));
  } else {
    answer.case_label = "iii";
    answer.bound = edge_bound(static_cast<std::int64_t>(p) * (q - 1) + a - 1);
    answer.extremal.push_back(nested_entry(a - 1, p - a + 1, q - 1, 1));
  }
  return answer;
}

ExtremalAnswer bipartite_parts_spectral(int p, int q, int a, int b) {
  check_parts(p, q, a, b);
  ExtremalAnswer answer;
  answer.theorem = "1.5";
  if (a * q > b * p || a > p) {
    answer.case_label = a * q > b * p ? "i" : "ii";
    answer.bound = sqrt_bound(static_cast<std::int64_t>(p) * q);
    answer.extremal.push_back(complete_entry(p, q));
  } else {
    answer.case_label = "iii";
    answer.bound = root_bound(phi1(p, q, a));
    answer.extremal.push_back(nested_entry(a - 1, p - a + 1, q - 1, 1));
  }
  return answer;
}

ExtremalAnswer bipartite_order_turan(int n, int a, int b) {
  check_order(n, a, b);
  ExtremalAnswer answer;
  answer.theorem = "1.4";
  const int k = f_ab_side(n, a, b);
  const std::int64_t f = f_ab(n, a, b);
  const std::int64_t g = static_cast<std::int64_t>(n / 2) * ((n + 1) / 2 - 1) + a - 1;
  const bool even = n % 2 == 0;
  std::vector<ExtremalGraph> nested;
  if (even) {
    nested.push_back(nested_entry(a - 1, n / 2 - a, n / 2, 1));
    nested.push_back(nested_entry(a - 1, n / 2 - a + 1, n / 2 - 1, 1));
  } else {
    nested.push_back(nested_entry(a - 1, (n + 1) / 2 - a, (n - 1) / 2, 1));
  }
  if (f > g) {
    answer.case_label = "i";
    answer.bound = edge_bound(f);
    answer.extremal.push_back(complete_entry(k, n - k));
  } else if (f == g) {
    answer.case_label = even ? "ii" : "iii";
    answer.bound = edge_bound(f);
    answer.extremal.push_back(complete_entry(k, n - k));
    for (auto& e : nested) answer.extremal.push_back(std::move(e));
  } else {
    answer.case_label = even ? "iv" : "v";
    answer.bound = edge_bound(g);
    answer.extremal = std::move(nested);
  }
  return answer;
}

ExtremalAnswer bipartite_order_spectral(int n, int a, int b) {
  check_order(n, a, b);
  ExtremalAnswer answer;
  answer.theorem = "1.7";
  const int k = f_ab_side(n, a, b);
  const std::int64_t f = f_ab(n, a, b);
  const bool even = n % 2 == 0;
  const Biquadratic poly = even ? phi2(n, a) : phi3(n, a);
  ExtremalGraph nested = nested_entry(a - 1, (n + 1) / 2 - a, n / 2, 1);
  const int side = compare_root_square(poly, f);
  if (side < 0) {
    answer.case_label = "i";
    answer.bound = sqrt_bound(f);
    answer.extremal.push_back(complete_entry(k, n - k));
  } else if (side == 0) {
    answer.case_label = "ii";
    answer.bound = sqrt_bound(f);
    answer.extremal.push_back(complete_entry(k, n - k));
    answer.extremal.push_back(std::move(nested));
  } else {
    answer.case_label = "iii";
    answer.bound = root_bound(poly);
    answer.extremal.push_back(std::move(nested));
  }
  return answer;
}

}  // namespace abfactor
