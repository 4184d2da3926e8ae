#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "abfactor/canonical.hpp"
#include "abfactor/error.hpp"
#include "abfactor/extremal.hpp"
#include "abfactor/spectral.hpp"
#include "abfactor/verify.hpp"

using namespace abfactor;

namespace {

std::string code(const Graph& g) { return canonical_form(g).code; }

bool same_report(const VerificationReport& x, const VerificationReport& y) {
  return x.target == y.target && x.params == y.params && x.brute_value.value == y.brute_value.value &&
         x.brute_extremal == y.brute_extremal && x.formula_value.value == y.formula_value.value &&
         x.formula_extremal == y.formula_extremal && x.case_label == y.case_label && x.verdict == y.verdict &&
         x.counterexample == y.counterexample && x.notes == y.notes &&
         x.stats.graphs_scanned == y.stats.graphs_scanned && x.stats.factor_decisions == y.stats.factor_decisions;
}

}  // namespace

TEST_CASE("verification examples") {
  Verifier v;
  const VerificationReport r = v.verify("1.1", {{"n", 6}, {"a", 2}, {"b", 2}});
  CHECK(r.verdict == Verdict::pass);
  CHECK(r.brute_value.value == 11);
  CHECK(r.brute_value.integral);
  CHECK(r.brute_extremal == std::vector<std::string>{code(join(complete(1), disjoint_union(complete(4), complete(1))))});
  CHECK(r.case_label == "ii");
  CHECK(r.stats.graphs_scanned > 0);

  const VerificationReport s = v.verify("1.2", {{"n", 6}, {"a", 2}, {"b", 3}});
  CHECK(s.verdict == Verdict::pass);
  CHECK(s.brute_extremal == std::vector<std::string>{code(threshold_extremal(2, 6))});
  CHECK(std::abs(s.brute_value.value - 4.0513742417) < 1e-9);

  const VerificationReport t = v.verify("1.4", {{"n", 8}, {"a", 1}, {"b", 1}});
  CHECK(t.verdict == Verdict::pass);
  CHECK(t.brute_value.value == 15);
  CHECK(t.brute_extremal == std::vector<std::string>{code(complete_bipartite_graph(3, 5))});

  const VerificationReport l32 = v.verify("3.2", {{"n", 6}});
  CHECK(l32.verdict == Verdict::pass);
  CHECK(l32.brute_value.value == 0);
  CHECK(l32.brute_extremal == std::vector<std::string>{code(disjoint_union(complete(5), complete(1)))});

  const VerificationReport l31 = v.verify("3.1", {{"n", 7}, {"a", 2}, {"b", 2}});
  CHECK(l31.verdict == Verdict::pass);
  CHECK(l31.brute_value.value == 0);
}

TEST_CASE("reports are deterministic") {
  for (const VerifyJob& job : batch_jobs("quick")) {
    if (job.target != "1.1" && job.target != "1.7" && job.target != "2.6") continue;
    Verifier first;
    Verifier second;
    const VerificationReport x = run_job(first, job);
    const VerificationReport y = run_job(second, job);
    CHECK(same_report(x, y));
    // A warm cache gives the same answer.
    CHECK(same_report(x, run_job(first, job)));
  }
}

TEST_CASE("bad requests") {
  Verifier v;
  CHECK_THROWS_AS(v.verify("9.9", {{"n", 5}}), InvalidArgument);
  CHECK_THROWS_AS(v.verify("1.1", {{"n", 5}, {"a", 1}, {"b", 1}, {"z", 1}}), InvalidArgument);
  CHECK_THROWS_AS(v.verify("1.1", {{"n", 5}, {"a", 1}}), InvalidArgument);
  CHECK_THROWS_AS(v.verify("1.1", {{"n", 5}, {"a", 1}, {"b", 1}}), ParityExcluded);
  const VerificationReport skipped = run_job(v, {"1.1", {{"n", 5}, {"a", 1}, {"b", 1}}});
  CHECK(skipped.verdict == Verdict::skipped);
  CHECK_FALSE(skipped.notes.empty());
  CHECK_THROWS_AS(v.verify("1.2", {{"n", 8}, {"a", 2}, {"b", 2}}), ResourceLimit);
  CHECK_THROWS_AS(batch_jobs("nightly"), InvalidArgument);
  CHECK(to_string(Verdict::pass) == "pass");
  CHECK(to_string(Verdict::skipped) == "skipped");
}

TEST_CASE("cocktail shortcut finds the full maximum") {
  Verifier v;
  for (int n = 2; n <= 7; ++n) {
    const std::vector<Graph> all = enumerate_graphs(n);
    for (int a = 1; a <= 3 && a + 1 <= n; ++a) {
      for (int b = a; b <= 3; ++b) {
        if (a == b && (n * a) % 2 != 0) continue;
        int best = -1;
        std::vector<std::string> attaining;
        for (const Graph& g : all) {
          if (g.edge_count() < best || has_factor(g, a, b)) continue;
          if (g.edge_count() > best) attaining.clear();
          best = g.edge_count();
          attaining.push_back(code(g));
        }
        std::sort(attaining.begin(), attaining.end());
        const VerificationReport r = v.verify("1.1", {{"n", n}, {"a", a}, {"b", b}});
        CHECK(r.brute_value.value == best);
        CHECK(r.brute_extremal == attaining);
      }
    }
  }
}

TEST_CASE("spectral argmax lies among edge-maximal factor-free graphs") {
  for (int n = 3; n <= 7; ++n) {
    const std::vector<Graph> all = enumerate_graphs(n);
    for (int a = 1; a <= 2 && a + 1 <= n; ++a) {
      for (int b = a; b <= 3; ++b) {
        if (a == b && (n * a) % 2 != 0) continue;
        double best_all = -1.0, best_maximal = -1.0;
        for (const Graph& g : all) {
          if (has_factor(g, a, b)) continue;
          const double rho = spectral_radius(g).radius;
          best_all = std::max(best_all, rho);
          bool maximal = true;
          for (int v = 1; v < n && maximal; ++v) {
            for (int u = 0; u < v && maximal; ++u) {
              if (g.has_edge(u, v)) continue;
              Graph h = g;
              h.add_edge(u, v);
              maximal = has_factor(h, a, b).has_value();
            }
          }
          if (maximal) best_maximal = std::max(best_maximal, rho);
        }
        CHECK(std::abs(best_all - best_maximal) < 1e-12);
        CHECK(std::abs(best_all - spectral_turan_factor(n, a, b).bound.value) < 1e-9);
      }
    }
  }
}

TEST_CASE("quick batch passes") {
  Verifier v;
  int passed = 0;
  for (const VerifyJob& job : batch_jobs("quick")) {
    const VerificationReport r = run_job(v, job);
    CHECK_MESSAGE(r.verdict != Verdict::fail, job.target);
    passed += r.verdict == Verdict::pass ? 1 : 0;
  }
  CHECK(passed > 100);
}
