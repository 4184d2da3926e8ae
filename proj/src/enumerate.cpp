#include "abfactor/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "abfactor/canonical.hpp"
#include "abfactor/error.hpp"

namespace abfactor {

namespace {

constexpr int kDefaultMaxOrder = 7;
constexpr int kHardMaxOrder = 8;
constexpr std::size_t kMaxStratum = 2'000'000;
constexpr int kMaxBipartiteCells = 25;

int pairs(int n) { return n * (n - 1) / 2; }

using Stratum = std::map<std::string, Graph>;

// Isomorphism classes with exactly e edges for e = 0..top, each grown from
// the previous stratum by adding one edge in every possible position.
std::vector<Stratum> build_strata(int n, int top) {
  std::vector<Stratum> strata(static_cast<std::size_t>(top) + 1);
  const Graph empty(n);
  strata[0].emplace(canonical_form(empty).code, empty);
  for (int e = 1; e <= top; ++e) {
    Stratum& next = strata[static_cast<std::size_t>(e)];
    for (const auto& [code, g] : strata[static_cast<std::size_t>(e) - 1]) {
      for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
          if (g.has_edge(u, v)) continue;
          Graph h = g;
          h.add_edge(u, v);
          const std::vector<int> labels = canonical_labeling(h);
          Graph c = h.relabeled(labels);
          next.try_emplace(canonical_form(c).code, c);
        }
      }
      if (next.size() > kMaxStratum) throw ResourceLimit("enumeration stratum too large");
    }
  }
  return strata;
}

std::vector<Graph> complemented(const Stratum& stratum) {
  std::map<std::string, Graph> out;
  for (const auto& [code, g] : stratum) {
    Graph c = canonical_graph(complement(g));
    out.emplace(canonical_form(c).code, c);
  }
  std::vector<Graph> result;
  result.reserve(out.size());
  for (auto& [code, g] : out) result.push_back(std::move(g));
  return result;
}

void append(std::vector<Graph>& out, const Stratum& stratum) {
  for (const auto& [code, g] : stratum) out.push_back(g);
}

void check_order_range(int n) {
  if (n < 0 || n > kMaxOrder) throw InvalidArgument("order outside [0, 64]");
}

}  // namespace

int default_max_order() {
  const char* text = std::getenv("ABFACTOR_MAX_ENUM_ORDER");
  if (text == nullptr || *text == '\0') return kDefaultMaxOrder;
  char* end = nullptr;
  const long value = std::strtol(text, &end, 10);
  if (*end != '\0' || value < 0) throw InvalidArgument("ABFACTOR_MAX_ENUM_ORDER must be a nonnegative integer");
  return static_cast<int>(std::min<long>(value, kHardMaxOrder));
}

std::vector<Graph> enumerate_graphs(int n, int max_order) {
  check_order_range(n);
  if (n > std::min(max_order, kHardMaxOrder)) {
    throw ResourceLimit("full enumeration capped at order " + std::to_string(std::min(max_order, kHardMaxOrder)));
  }
  const int total = pairs(n);
  const int half = total / 2;
  const std::vector<Stratum> strata = build_strata(n, half);
  std::vector<Graph> out;
  for (int e = 0; e <= half; ++e) append(out, strata[static_cast<std::size_t>(e)]);
  for (int e = half + 1; e <= total; ++e) {
    const std::vector<Graph> upper = complemented(strata[static_cast<std::size_t>(total - e)]);
    out.insert(out.end(), upper.begin(), upper.end());
  }
  return out;
}

std::vector<Graph> enumerate_graphs_with_edges(int n, int e) {
  check_order_range(n);
  const int total = pairs(n);
  if (e < 0 || e > total) throw InvalidArgument("edge count outside [0, C(n,2)]");
  if (2 * e <= total) {
    std::vector<Graph> out;
    append(out, build_strata(n, e).back());
    return out;
  }
  return complemented(build_strata(n, total - e).back());
}

std::vector<Graph> enumerate_cocktail(int n, int m) {
  check_order_range(n);
  const int total = pairs(n);
  if (m < 0 || m > total) throw InvalidArgument("cocktail needs 0 <= m <= C(n,2)");
  const std::vector<Stratum> strata = build_strata(n, m);
  std::vector<Graph> out;
  for (const Stratum& stratum : strata) {
    for (const auto& [code, g] : stratum) out.push_back(complement(g));
  }
  return out;
}

std::vector<BipartiteGraph> enumerate_bipartite(int p, int q, bool keep_sides) {
  if (p < 1 || q < 1 || p + q > kMaxOrder) throw InvalidArgument("bipartite parts must be positive");
  if (p * q > kMaxBipartiteCells) throw ResourceLimit("bipartite enumeration capped at pq <= 25");

  // Rows of the larger side are subsets of the smaller side; permuting the
  // larger side is absorbed by keeping the rows sorted, permuting the smaller
  // side by keeping only multisets that are minimal over all its permutations.
  const int small = std::min(p, q);
  const int large = std::max(p, q);
  const int subsets = 1 << small;
  std::vector<std::vector<int>> maps;
  std::vector<int> perm(static_cast<std::size_t>(small));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> image(static_cast<std::size_t>(subsets));
    for (int mask = 0; mask < subsets; ++mask) {
      int out = 0;
      for (int i = 0; i < small; ++i) {
        if ((mask >> i) & 1) out |= 1 << perm[static_cast<std::size_t>(i)];
      }
      image[static_cast<std::size_t>(mask)] = out;
    }
    maps.push_back(std::move(image));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<int> rows(static_cast<std::size_t>(large), 0);
  std::vector<int> mapped(static_cast<std::size_t>(large));
  std::vector<std::pair<std::string, BipartiteGraph>> found;
  std::set<std::string> seen;
  while (true) {
    bool minimal = true;
    for (std::size_t k = 1; k < maps.size() && minimal; ++k) {
      for (int i = 0; i < large; ++i) {
        mapped[static_cast<std::size_t>(i)] = maps[k][static_cast<std::size_t>(rows[static_cast<std::size_t>(i)])];
      }
      std::sort(mapped.begin(), mapped.end());
      if (mapped < rows) minimal = false;
    }
    if (minimal) {
      BipartiteGraph b(p, q);
      for (int i = 0; i < large; ++i) {
        for (int j = 0; j < small; ++j) {
          if ((rows[static_cast<std::size_t>(i)] >> j) & 1) {
            if (p <= q) {
              b.add_edge(j, i);
            } else {
              b.add_edge(i, j);
            }
          }
        }
      }
      std::string code = canonical_form(b, keep_sides).code;
      if (seen.insert(code).second) found.emplace_back(std::move(code), b);
    }
    // Next non-decreasing sequence over 0..subsets-1.
    int i = large - 1;
    while (i >= 0 && rows[static_cast<std::size_t>(i)] == subsets - 1) --i;
    if (i < 0) break;
    const int value = rows[static_cast<std::size_t>(i)] + 1;
    for (int j = i; j < large; ++j) rows[static_cast<std::size_t>(j)] = value;
  }

  std::sort(found.begin(), found.end(), [](const auto& lhs, const auto& rhs) {
    const int le = lhs.second.edge_count();
    const int re = rhs.second.edge_count();
    return le != re ? le < re : lhs.first < rhs.first;
  });
  std::vector<BipartiteGraph> out;
  out.reserve(found.size());
  for (auto& [code, b] : found) out.push_back(std::move(b));
  return out;
}

}  // namespace abfactor
