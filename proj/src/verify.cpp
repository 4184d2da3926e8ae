#include "abfactor/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>

#include "abfactor/canonical.hpp"
#include "abfactor/error.hpp"
#include "abfactor/extremal.hpp"
#include "abfactor/hamilton.hpp"
#include "abfactor/spectral.hpp"

namespace abfactor {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::skipped:
      return "skipped";
  }
  return "fail";
}

namespace {

int pairs(int n) { return n * (n - 1) / 2; }

struct Entry {
  Graph graph;
  std::optional<BipartiteGraph> bipartite;
  int edges = 0;
  std::string code;  // canonical graph6, parts forgotten
  std::optional<double> radius;
};

using Catalog = std::vector<Entry>;

Entry make_entry(const Graph& g) {
  Entry e;
  e.graph = g;
  e.edges = g.edge_count();
  e.code = canonical_form(g).code;
  return e;
}

Entry make_entry(const BipartiteGraph& b) {
  Entry e = make_entry(b.to_graph());
  e.bipartite = b;
  return e;
}

ReportNumber integral(std::int64_t v) { return {static_cast<double>(v), true}; }
ReportNumber real(double v) { return {v, false}; }

std::vector<std::string> sorted_codes(const std::vector<const Entry*>& entries) {
  std::set<std::string> codes;
  for (const Entry* e : entries) codes.insert(e->code);
  return {codes.begin(), codes.end()};
}

int require(const Params& params, const std::string& name) {
  const auto it = params.find(name);
  if (it == params.end()) throw InvalidArgument("missing parameter '" + name + "'");
  return it->second;
}

}  // namespace

struct Verifier::Cache {
  std::map<int, Catalog> graphs;
  std::map<std::pair<int, int>, Catalog> cocktails;
  std::map<std::pair<int, int>, Catalog> parts;
  std::map<int, Catalog> bipartite_orders;
};

namespace {

// Shared state of one verify() call.
class Run {
 public:
  Run(const VerifyOptions& options, VerificationReport& report) : options_(options), report_(report) {}

  double radius(Entry& e) {
    if (!e.radius) e.radius = spectral_radius(e.graph).radius;
    return *e.radius;
  }

  bool factor_free(const Entry& e, int a, int b) {
    ++report_.stats.factor_decisions;
    if (e.bipartite) return !has_factor_bipartite_flow(*e.bipartite, a, b);
    return !has_factor(e.graph, a, b, options_.search);
  }

  struct Argmax {
    bool found = false;
    double value = 0.0;
    std::vector<const Entry*> winners;
  };

  // Scans entries in decreasing key order and returns every entry accepted by
  // pred whose key is within tol of the first accepted key.
  template <class Key, class Pred>
  Argmax scan_max(std::vector<Entry*> entries, Key key, double tol, Pred pred) {
    std::vector<std::pair<double, Entry*>> keyed;
    keyed.reserve(entries.size());
    for (Entry* e : entries) keyed.emplace_back(key(*e), e);
    std::sort(keyed.begin(), keyed.end(), [](const auto& lhs, const auto& rhs) {
      if (lhs.first != rhs.first) return lhs.first > rhs.first;
      return lhs.second->code < rhs.second->code;
    });
    Argmax result;
    for (const auto& [k, e] : keyed) {
      if (result.found && k < result.value - tol) break;
      ++report_.stats.graphs_scanned;
      if (!pred(*e)) continue;
      if (!result.found) {
        result.found = true;
        result.value = k;
      }
      result.winners.push_back(e);
    }
    return result;
  }

  // Fills the formula side from an ExtremalAnswer and re-validates its graphs.
  void set_formula(const ExtremalAnswer& answer, int a, int b) {
    report_.case_label = answer.case_label;
    std::set<std::string> codes;
    for (const ExtremalGraph& g : answer.extremal) {
      if (!codes.insert(canonical_form(g.graph).code).second) {
        report_.notes.push_back("formula list repeats the class of " + g.name);
      }
      ++report_.stats.factor_decisions;
      if (has_factor(g.graph, a, b, options_.search)) {
        formula_ok_ = false;
        report_.notes.push_back(g.name + " has an [a,b]-factor");
        if (!report_.counterexample) report_.counterexample = canonical_form(g.graph).code;
      }
      const bool attains = answer.bound.kind == Bound::Kind::edges
                               ? g.graph.edge_count() == answer.bound.integer
                               : std::abs(spectral_radius(g.graph).radius - answer.bound.value) <= options_.tie_tol;
      if (!attains) {
        formula_ok_ = false;
        report_.notes.push_back(g.name + " does not attain the bound");
        if (!report_.counterexample) report_.counterexample = canonical_form(g.graph).code;
      }
    }
    report_.formula_extremal.assign(codes.begin(), codes.end());
    report_.formula_value = answer.bound.kind == Bound::Kind::edges ? integral(answer.bound.integer)
                                                                    : real(answer.bound.value);
  }

  // Verdict for theorem targets: values and canonical sets must agree.
  void conclude(const Argmax& brute, bool spectral) {
    report_.brute_extremal = sorted_codes(brute.winners);
    report_.brute_value = spectral ? real(brute.value) : integral(static_cast<std::int64_t>(brute.value));
    const bool values_match = spectral
                                  ? std::abs(brute.value - report_.formula_value.value) <= options_.tie_tol
                                  : brute.value == report_.formula_value.value;
    const bool sets_match = report_.brute_extremal == report_.formula_extremal;
    if (!brute.found) report_.notes.push_back("no factor-free graph in the scanned family");
    if (!values_match) report_.notes.push_back("extremal value differs from the formula");
    if (!sets_match) {
      report_.notes.push_back("extremal sets differ");
      if (!report_.counterexample) report_.counterexample = first_difference();
    }
    report_.verdict = brute.found && values_match && sets_match && formula_ok_ ? Verdict::pass : Verdict::fail;
  }

  // Verdict for predicate scans: zero violations and matching exception set.
  void conclude_lemma(std::int64_t violations, const std::vector<const Entry*>& exceptions,
                      const std::vector<Graph>& expected, const Entry* first_violation) {
    report_.brute_value = integral(violations);
    report_.formula_value = integral(0);
    report_.brute_extremal = sorted_codes(exceptions);
    std::set<std::string> codes;
    for (const Graph& g : expected) codes.insert(canonical_form(g).code);
    report_.formula_extremal.assign(codes.begin(), codes.end());
    if (first_violation) report_.counterexample = first_violation->code;
    const bool sets_match = report_.brute_extremal == report_.formula_extremal;
    if (!sets_match) {
      report_.notes.push_back("exceptional sets differ");
      if (!report_.counterexample) report_.counterexample = first_difference();
    }
    report_.verdict = violations == 0 && sets_match ? Verdict::pass : Verdict::fail;
  }

  VerificationReport& report() { return report_; }

 private:
  std::string first_difference() const {
    std::vector<std::string> diff;
    std::set_symmetric_difference(report_.brute_extremal.begin(), report_.brute_extremal.end(),
                                  report_.formula_extremal.begin(), report_.formula_extremal.end(),
                                  std::back_inserter(diff));
    return diff.empty() ? std::string() : diff.front();
  }

  const VerifyOptions& options_;
  VerificationReport& report_;
  bool formula_ok_ = true;
};

std::vector<Entry*> pointers(Catalog& catalog) {
  std::vector<Entry*> out;
  out.reserve(catalog.size());
  for (Entry& e : catalog) out.push_back(&e);
  return out;
}

void check_factor_pair(int a, int b) {
  if (a < 1 || a > b) throw InvalidArgument("need 1 <= a <= b");
}

}  // namespace

const std::vector<TargetInfo>& verify_targets() {
  static const std::vector<TargetInfo> targets = {
      {"1.1", {"n", "a", "b"}},      {"1.2", {"n", "a", "b"}},      {"1.3", {"p", "q", "a", "b"}},
      {"1.4", {"n", "a", "b"}},      {"1.5", {"p", "q", "a", "b"}}, {"1.7", {"n", "a", "b"}},
      {"2.4", {"n"}},                {"2.5", {"n", "e"}},           {"2.6", {"p", "q", "e"}},
      {"2.9", {"p", "q", "a", "b"}}, {"3.1", {"n", "a", "b"}},      {"3.2", {"n"}},
      {"3.3", {"n"}},
  };
  return targets;
}

Verifier::Verifier(VerifyOptions options) : options_(options), cache_(std::make_unique<Cache>()) {}
Verifier::~Verifier() = default;

namespace {

class Dispatch {
 public:
  Dispatch(Verifier::Cache& cache, const VerifyOptions& options) : cache_(cache), options_(options) {}

  Catalog& graphs(int n) {
    auto it = cache_.graphs.find(n);
    if (it != cache_.graphs.end()) return it->second;
    Catalog c;
    for (const Graph& g : enumerate_graphs(n, options_.max_order)) c.push_back(make_entry(g));
    return cache_.graphs.emplace(n, std::move(c)).first->second;
  }

  Catalog& cocktail(int n, int m) {
    auto it = cache_.cocktails.find({n, m});
    if (it != cache_.cocktails.end()) return it->second;
    Catalog c;
    for (const Graph& g : enumerate_cocktail(n, m)) c.push_back(make_entry(g));
    return cache_.cocktails.emplace(std::make_pair(n, m), std::move(c)).first->second;
  }

  Catalog& parts(int p, int q) {
    auto it = cache_.parts.find({p, q});
    if (it != cache_.parts.end()) return it->second;
    Catalog c;
    for (const BipartiteGraph& b : enumerate_bipartite(p, q, true)) c.push_back(make_entry(b));
    return cache_.parts.emplace(std::make_pair(p, q), std::move(c)).first->second;
  }

  // Every n-vertex bipartite graph once, up to graph isomorphism.
  Catalog& bipartite_order(int n) {
    auto it = cache_.bipartite_orders.find(n);
    if (it != cache_.bipartite_orders.end()) return it->second;
    Catalog c;
    std::set<std::string> seen;
    for (int p = 1; p <= n / 2; ++p) {
      for (const Entry& e : parts(p, n - p)) {
        if (seen.insert(e.code).second) c.push_back(e);
      }
    }
    return cache_.bipartite_orders.emplace(n, std::move(c)).first->second;
  }

  void theorem_1_1(Run& run, int n, int a, int b) {
    const ExtremalAnswer answer = turan_factor(n, a, b);
    run.set_formula(answer, a, b);
    const int total = pairs(n);
    const int m = std::min(total, n - a + 2);
    auto pred = [&](const Entry& e) { return run.factor_free(e, a, b); };
    auto edges = [](const Entry& e) { return static_cast<double>(e.edges); };
    Run::Argmax best = run.scan_max(pointers(cocktail(n, m)), edges, 0.0, pred);
    if (best.found && best.value >= total - m) {
      run.report().notes.push_back("scanned graphs whose complement has at most " + std::to_string(m) + " edges");
    } else {
      run.report().notes.push_back("complement shortcut inconclusive; full enumeration used");
      best = run.scan_max(pointers(graphs(n)), edges, 0.0, pred);
    }
    run.conclude(best, false);
  }

  void theorem_1_2(Run& run, int n, int a, int b) {
    const ExtremalAnswer answer = spectral_turan_factor(n, a, b);
    run.set_formula(answer, a, b);
    auto pred = [&](const Entry& e) { return run.factor_free(e, a, b); };
    auto rho = [&](Entry& e) { return run.radius(e); };
    run.conclude(run.scan_max(pointers(graphs(n)), rho, options_.tie_tol, pred), true);
  }

  void bipartite_theorem(Run& run, Catalog& catalog, const ExtremalAnswer& answer, int a, int b, bool spectral) {
    run.set_formula(answer, a, b);
    auto pred = [&](const Entry& e) { return run.factor_free(e, a, b); };
    if (spectral) {
      auto rho = [&](Entry& e) { return run.radius(e); };
      run.conclude(run.scan_max(pointers(catalog), rho, options_.tie_tol, pred), true);
    } else {
      auto edges = [](const Entry& e) { return static_cast<double>(e.edges); };
      run.conclude(run.scan_max(pointers(catalog), edges, 0.0, pred), false);
    }
  }

  void lemma_2_4(Run& run, int n) {
    if (n < 1) throw InvalidArgument("need n >= 1");
    std::int64_t violations = 0;
    const Entry* first = nullptr;
    std::vector<const Entry*> equal;
    for (Entry& e : graphs(n)) {
      if (!e.graph.is_connected()) continue;
      ++run.report().stats.graphs_scanned;
      const double bound = std::sqrt(2.0 * e.edges - n + 1.0);
      const double rho = run.radius(e);
      if (rho > bound + options_.tie_tol) {
        ++violations;
        if (!first) first = &e;
      } else if (std::abs(rho - bound) <= options_.tie_tol) {
        equal.push_back(&e);
      }
    }
    run.report().case_label = "equality";
    run.conclude_lemma(violations, equal, {star_graph(n - 1), complete(n)}, first);
  }

  void lemma_2_5(Run& run, int n, int e) {
    if (e < 1 || e > pairs(n)) throw InvalidArgument("need 1 <= e <= C(n,2)");
    if (n > options_.max_order) throw ResourceLimit("order above the enumeration cap");
    const Graph expected = edge_spectral_extremal(n, e);
    Catalog catalog;
    for (const Graph& g : enumerate_graphs_with_edges(n, e)) catalog.push_back(make_entry(g));
    auto rho = [&](Entry& x) { return run.radius(x); };
    const Run::Argmax best = run.scan_max(pointers(catalog), rho, options_.tie_tol, [](const Entry&) { return true; });
    ExtremalAnswer answer;
    answer.case_label = "argmax";
    answer.bound.kind = Bound::Kind::graph_radius;
    answer.bound.value = spectral_radius(expected).radius;
    answer.extremal.push_back({"edge_spectral_extremal", expected, std::nullopt});
    set_plain_formula(run, answer);
    run.conclude(best, true);
  }

  void lemma_2_6(Run& run, int p, int q, int e) {
    if (p < 1 || p > q) throw InvalidArgument("need 1 <= p <= q");
    const BipartiteGraph expected = near_complete_bipartite(p, q, e);
    std::vector<Entry*> candidates;
    for (Entry& x : parts(p, q)) {
      if (x.edges == e) candidates.push_back(&x);
    }
    auto rho = [&](Entry& x) { return run.radius(x); };
    const Run::Argmax best = run.scan_max(candidates, rho, options_.tie_tol, [](const Entry&) { return true; });
    ExtremalAnswer answer;
    answer.case_label = "argmax";
    answer.bound.kind = Bound::Kind::graph_radius;
    answer.bound.value = spectral_radius(expected.to_graph()).radius;
    answer.extremal.push_back({"K_{p,q}^e", expected.to_graph(), std::make_pair(p, q)});
    set_plain_formula(run, answer);
    run.conclude(best, true);
  }

  void corollary_2_9(Run& run, int p, int q, int a, int b) {
    check_factor_pair(a, b);
    if (p < 1 || p > q) throw InvalidArgument("need 1 <= p <= q");
    std::int64_t disagreements = 0;
    const Entry* first = nullptr;
    for (Entry& e : parts(p, q)) {
      ++run.report().stats.graphs_scanned;
      run.report().stats.factor_decisions += 3;
      const bool flow = has_factor_bipartite_flow(*e.bipartite, a, b).has_value();
      const bool criterion = !ff_violation(*e.bipartite, a, b).has_value();
      const bool search = has_factor(e.graph, a, b, options_.search).has_value();
      if (flow != criterion || flow != search) {
        ++disagreements;
        if (!first) first = &e;
      }
    }
    run.report().case_label = "agreement";
    run.conclude_lemma(disagreements, {}, {}, first);
  }

  void lemma_3_1(Run& run, int n, int a, int b) {
    check_factor_pair(a, b);
    if (n < 1) throw InvalidArgument("need n >= 1");
    if (a == b && (n * a) % 2 != 0) throw ParityExcluded("a = b with n*a odd is excluded by hypothesis");
    const int threshold = pairs(n - 1) + (a + 2) / 2;  // ceil((a+1)/2)
    run.report().case_label = "size";
    std::int64_t violations = 0;
    const Entry* first = nullptr;
    if (threshold > pairs(n)) {
      run.report().notes.push_back("no graph reaches the edge threshold");
    } else {
      for (Entry& e : cocktail(n, pairs(n) - threshold)) {
        if (e.graph.min_degree() < a) continue;
        ++run.report().stats.graphs_scanned;
        if (run.factor_free(e, a, b)) {
          ++violations;
          if (!first) first = &e;
        }
      }
    }
    run.conclude_lemma(violations, {}, {}, first);
  }

  void hamilton_lemma(Run& run, int n, bool cycle) {
    if (n < 3) throw InvalidArgument("need n >= 3");
    const int slack = cycle ? 1 : 0;
    const int m = pairs(n) - pairs(n - 1) - slack;
    std::vector<const Entry*> exceptions;
    for (Entry& e : cocktail(n, m)) {
      ++run.report().stats.graphs_scanned;
      const bool ok = cycle ? has_hamilton_cycle(e.graph) : has_hamilton_path(e.graph);
      if (!ok) exceptions.push_back(&e);
    }
    std::vector<Graph> expected;
    if (cycle) {
      expected.push_back(join(complete(1), disjoint_union(complete(n - 2), complete(1))));
      if (n == 5) expected.push_back(join(complete(2), empty_graph(3)));
    } else {
      expected.push_back(disjoint_union(complete(n - 1), complete(1)));
      if (n == 4) expected.push_back(star_graph(3));
    }
    run.report().case_label = "exceptions";
    run.conclude_lemma(static_cast<std::int64_t>(0), exceptions, expected, nullptr);
  }

 private:
  // Formula side for argmax lemmas: no factor condition to re-validate.
  void set_plain_formula(Run& run, const ExtremalAnswer& answer) {
    VerificationReport& r = run.report();
    r.case_label = answer.case_label;
    std::set<std::string> codes;
    for (const ExtremalGraph& g : answer.extremal) codes.insert(canonical_form(g.graph).code);
    r.formula_extremal.assign(codes.begin(), codes.end());
    r.formula_value = real(answer.bound.value);
  }

  Verifier::Cache& cache_;
  const VerifyOptions& options_;
};

}  // namespace

VerificationReport Verifier::verify(const std::string& target, const Params& params) {
  const auto& targets = verify_targets();
  const auto info = std::find_if(targets.begin(), targets.end(), [&](const TargetInfo& t) { return t.id == target; });
  if (info == targets.end()) throw InvalidArgument("unknown verify target '" + target + "'");
  for (const auto& [key, value] : params) {
    if (std::find(info->params.begin(), info->params.end(), key) == info->params.end()) {
      throw InvalidArgument("target " + target + " does not take parameter '" + key + "'");
    }
  }

  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.target = target;
  report.params = params;
  Run run(options_, report);
  Dispatch d(*cache_, options_);
  auto get = [&](const char* name) { return require(params, name); };

  if (target == "1.1") {
    d.theorem_1_1(run, get("n"), get("a"), get("b"));
  } else if (target == "1.2") {
    d.theorem_1_2(run, get("n"), get("a"), get("b"));
  } else if (target == "1.3" || target == "1.5") {
    const int p = get("p"), q = get("q"), a = get("a"), b = get("b");
    const ExtremalAnswer answer = target == "1.3" ? bipartite_parts_turan(p, q, a, b)
                                                  : bipartite_parts_spectral(p, q, a, b);
    d.bipartite_theorem(run, d.parts(p, q), answer, a, b, target == "1.5");
  } else if (target == "1.4" || target == "1.7") {
    const int n = get("n"), a = get("a"), b = get("b");
    const ExtremalAnswer answer = target == "1.4" ? bipartite_order_turan(n, a, b)
                                                  : bipartite_order_spectral(n, a, b);
    d.bipartite_theorem(run, d.bipartite_order(n), answer, a, b, target == "1.7");
  } else if (target == "2.4") {
    d.lemma_2_4(run, get("n"));
  } else if (target == "2.5") {
    d.lemma_2_5(run, get("n"), get("e"));
  } else if (target == "2.6") {
    d.lemma_2_6(run, get("p"), get("q"), get("e"));
  } else if (target == "2.9") {
    d.corollary_2_9(run, get("p"), get("q"), get("a"), get("b"));
  } else if (target == "3.1") {
    d.lemma_3_1(run, get("n"), get("a"), get("b"));
  } else if (target == "3.2" || target == "3.3") {
    d.hamilton_lemma(run, get("n"), target == "3.3");
  }

  report.stats.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

VerificationReport run_job(Verifier& verifier, const VerifyJob& job) {
  try {
    return verifier.verify(job.target, job.params);
  } catch (const ParityExcluded& e) {
    VerificationReport report;
    report.target = job.target;
    report.params = job.params;
    report.verdict = Verdict::skipped;
    report.notes.push_back(e.what());
    return report;
  }
}

std::vector<VerifyJob> batch_jobs(const std::string& suite, int max_order) {
  const bool full = suite == "acceptance";
  if (!full && suite != "quick") throw InvalidArgument("unknown suite '" + suite + "'");
  const int top_general = full ? 8 : 6;
  const int top_spectral = std::min(full ? 7 : 6, max_order);
  const int top_bipartite = full ? 10 : 7;
  const int max_cells = full ? 25 : 12;
  const int max_b = full ? 3 : 2;
  std::vector<VerifyJob> jobs;
  auto nab = [](int n, int a, int b) { return Params{{"n", n}, {"a", a}, {"b", b}}; };
  auto pqab = [](int p, int q, int a, int b) { return Params{{"p", p}, {"q", q}, {"a", a}, {"b", b}}; };

  for (int n = 2; n <= top_general; ++n) {
    for (int a = 1; a <= 4 && a + 1 <= n; ++a) {
      for (int b = a; b <= 4; ++b) {
        jobs.push_back({"1.1", nab(n, a, b)});
        if (n <= top_spectral) jobs.push_back({"1.2", nab(n, a, b)});
      }
    }
  }
  for (int p = 1; p * p <= max_cells; ++p) {
    for (int q = p; p * q <= max_cells; ++q) {
      for (int a = 1; a <= max_b; ++a) {
        for (int b = a; b <= max_b; ++b) {
          jobs.push_back({"1.3", pqab(p, q, a, b)});
          jobs.push_back({"1.5", pqab(p, q, a, b)});
        }
      }
    }
  }
  for (int n = 2; n <= top_bipartite; ++n) {
    for (int a = 1; a <= n / 2 && a <= max_b; ++a) {
      for (int b = a; b <= max_b; ++b) {
        jobs.push_back({"1.4", nab(n, a, b)});
        jobs.push_back({"1.7", nab(n, a, b)});
      }
    }
  }
  for (int n = 1; n <= top_spectral; ++n) {
    jobs.push_back({"2.4", {{"n", n}}});
    for (int e = 1; e <= pairs(n); ++e) jobs.push_back({"2.5", {{"n", n}, {"e", e}}});
  }
  for (int p = 1; p <= 3; ++p) {
    for (int q = p; q <= 5; ++q) {
      for (int e = p * q - p + 1; e < p * q; ++e) jobs.push_back({"2.6", {{"p", p}, {"q", q}, {"e", e}}});
    }
  }
  for (int p = 1; 2 * p <= top_bipartite; ++p) {
    for (int q = p; p + q <= top_bipartite; ++q) {
      for (int a = 1; a <= max_b; ++a) {
        for (int b = a; b <= max_b; ++b) jobs.push_back({"2.9", pqab(p, q, a, b)});
      }
    }
  }
  for (int n = 2; n <= top_spectral; ++n) {
    for (int a = 1; a <= max_b && a < n; ++a) {
      for (int b = a; b <= max_b; ++b) jobs.push_back({"3.1", nab(n, a, b)});
    }
  }
  for (int n = 4; n <= top_spectral; ++n) {
    jobs.push_back({"3.2", {{"n", n}}});
    jobs.push_back({"3.3", {{"n", n}}});
  }
  std::stable_sort(jobs.begin(), jobs.end(), [](const VerifyJob& lhs, const VerifyJob& rhs) {
    return lhs.target != rhs.target ? lhs.target < rhs.target : lhs.params < rhs.params;
  });
  return jobs;
}

}  // namespace abfactor
