#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

#include "abfactor/canonical.hpp"
#include "abfactor/error.hpp"
#include "abfactor/extremal.hpp"
#include "abfactor/factor.hpp"
#include "abfactor/graph6.hpp"
#include "abfactor/spectral.hpp"
#include "abfactor/verify.hpp"

#ifndef ABFACTOR_VERSION
#define ABFACTOR_VERSION "0.0.0"
#endif

namespace abfactor::cli {

namespace {

using json = nlohmann::ordered_json;

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << hash;
  return out.str();
}

const char* subject_key(const std::string& command) {
  if (command == "construct") return "family";
  if (command == "bound") return "theorem";
  if (command == "verify") return "target";
  if (command == "batch") return "suite";
  return "subject";
}

json config_json(const RunConfig& c) {
  json j;
  j["command"] = c.command;
  if (!c.subject.empty()) j[subject_key(c.command)] = c.subject;
  if (!c.graph6.empty()) j["graph6"] = c.graph6;
  if (c.parts) j["parts"] = {c.parts->first, c.parts->second};
  j["params"] = json::object();
  for (const auto& [k, v] : c.params) j["params"][k] = v;
  if (!c.ps.empty() || !c.qs.empty()) {
    j["ps"] = c.ps;
    j["qs"] = c.qs;
  }
  if (c.command == "spectral") j["tol"] = c.tol;
  j["format"] = c.format;
  j["output"] = c.output.empty() ? "-" : c.output;
  return j;
}

json envelope(const RunConfig& c) {
  json j;
  j["tool"] = "abfactor";
  j["version"] = ABFACTOR_VERSION;
  j["config"] = config_json(c);
  j["config_hash"] = fnv1a_hex(j["config"].dump());
  return j;
}

json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

json graph_json(const Graph& g, const std::optional<std::pair<int, int>>& parts) {
  json j;
  j["graph6"] = to_graph6(g);
  j["n"] = g.order();
  j["edges"] = g.edge_count();
  if (parts) j["parts"] = {parts->first, parts->second};
  return j;
}

json number_json(const ReportNumber& n) {
  if (n.integral) return static_cast<std::int64_t>(n.value);
  return n.value;
}

json report_json(const VerificationReport& r) {
  json j;
  j["target"] = r.target;
  j["params"] = json::object();
  for (const auto& [k, v] : r.params) j["params"][k] = v;
  j["brute_value"] = number_json(r.brute_value);
  j["brute_extremal"] = r.brute_extremal;
  j["formula_value"] = number_json(r.formula_value);
  j["formula_extremal"] = r.formula_extremal;
  j["case_label"] = r.case_label;
  j["verdict"] = to_string(r.verdict);
  j["counterexample"] = r.counterexample ? json(*r.counterexample) : json(nullptr);
  j["notes"] = r.notes;
  j["stats"] = {{"graphs_scanned", r.stats.graphs_scanned},
                {"factor_decisions", r.stats.factor_decisions},
                {"wall_time_ms", r.stats.wall_time_ms}};
  return j;
}

const char* kind_name(Bound::Kind k) {
  switch (k) {
    case Bound::Kind::edges:
      return "edges";
    case Bound::Kind::sqrt_integer:
      return "sqrt_integer";
    case Bound::Kind::biquadratic_root:
      return "biquadratic_root";
    case Bound::Kind::graph_radius:
      return "graph_radius";
  }
  return "edges";
}

json answer_json(const ExtremalAnswer& a) {
  json j;
  j["theorem"] = a.theorem;
  j["case_label"] = a.case_label;
  json bound;
  bound["kind"] = kind_name(a.bound.kind);
  if (a.bound.kind == Bound::Kind::edges || a.bound.kind == Bound::Kind::sqrt_integer) {
    bound["integer"] = a.bound.integer;
  }
  if (a.bound.kind == Bound::Kind::biquadratic_root) {
    bound["polynomial"] = {{"lead", a.bound.poly.lead}, {"c", a.bound.poly.c}, {"d", a.bound.poly.d}};
  }
  bound["value"] = a.bound.value;
  j["bound"] = bound;
  j["extremal"] = json::array();
  for (const ExtremalGraph& g : a.extremal) {
    json entry = graph_json(g.graph, g.parts);
    entry["name"] = g.name;
    entry["canonical"] = canonical_form(g.graph).code;
    j["extremal"].push_back(entry);
  }
  return j;
}

std::string params_text(const Params& params) {
  std::string out;
  for (const auto& [k, v] : params) {
    if (!out.empty()) out += ';';
    out += k + "=" + std::to_string(v);
  }
  return out;
}

std::string number_text(const ReportNumber& n) {
  if (n.integral) return std::to_string(static_cast<std::int64_t>(n.value));
  std::ostringstream out;
  out << std::setprecision(15) << n.value;
  return out.str();
}

const char* kReportCsvHeader =
    "target,params,verdict,brute_value,formula_value,case_label,brute_extremal,counterexample,graphs_scanned,"
    "factor_decisions,wall_time_ms\n";

std::string report_csv_row(const VerificationReport& r) {
  std::ostringstream out;
  std::string codes;
  for (const std::string& c : r.brute_extremal) codes += (codes.empty() ? "" : ";") + c;
  out << r.target << ',' << params_text(r.params) << ',' << to_string(r.verdict) << ',' << number_text(r.brute_value)
      << ',' << number_text(r.formula_value) << ',' << r.case_label << ',' << codes << ','
      << r.counterexample.value_or("") << ',' << r.stats.graphs_scanned << ',' << r.stats.factor_decisions << ','
      << std::fixed << std::setprecision(3) << r.stats.wall_time_ms << '\n';
  return out.str();
}

void check_keys(const RunConfig& c, std::initializer_list<const char*> allowed) {
  for (const auto& [k, v] : c.params) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || k == a;
    if (!ok) throw InvalidArgument("parameter '" + k + "' is not accepted by " + c.command + " " + c.subject);
  }
}

int need(const RunConfig& c, const char* key) {
  const auto it = c.params.find(key);
  if (it == c.params.end()) throw InvalidArgument(std::string("missing parameter --") + key);
  return it->second;
}

void unsupported_format(const RunConfig& c) {
  throw InvalidArgument("format " + c.format + " is not available for " + c.command);
}

struct Output {
  std::string text;
  int status = kExitOk;
};

Output run_decide(const RunConfig& c) {
  check_keys(c, {"a", "b"});
  const Graph g = from_graph6(c.graph6);
  const int a = need(c, "a");
  const int b = need(c, "b");
  json result;
  std::optional<FactorWitness> witness;
  if (c.parts) {
    const auto [p, q] = *c.parts;
    if (p < 1 || q < 1 || p + q != g.order()) throw InvalidArgument("parts must be positive and sum to n");
    BipartiteGraph bg(p, q);
    for (const Edge& e : g.edges()) {
      if (e.u >= p || e.v < p) throw InvalidArgument("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                                     " does not cross the given parts");
      bg.add_edge(e.u, e.v - p);
    }
    witness = has_factor_bipartite_flow(bg, a, b);
    json backends;
    backends["flow"] = witness.has_value();
    try {
      backends["backtracking"] = has_factor(g, a, b).has_value();
    } catch (const ResourceLimit&) {
      backends["backtracking"] = nullptr;
    }
    if (p + q <= 22) {
      const auto violation = ff_violation(bg, a, b);
      backends["criterion"] = !violation.has_value();
      if (violation) {
        json v;
        json s = json::array();
        json t = json::array();
        for (int x = 0; x < p; ++x) {
          if ((violation->s >> x) & 1U) s.push_back(x);
        }
        for (int y = 0; y < q; ++y) {
          if ((violation->t >> y) & 1U) t.push_back(p + y);
        }
        v["S"] = s;
        v["T"] = t;
        v["swapped"] = violation->swapped;
        v["deficiency"] = violation->deficiency;
        result["violation"] = v;
      }
    } else {
      backends["criterion"] = nullptr;
    }
    result["backends"] = backends;
  } else {
    witness = has_factor(g, a, b);
  }

  if (c.format == "graph6") {
    if (!witness) return {"\n", kExitOk};
    return {to_graph6(Graph::from_edges(g.order(), witness->edges)) + "\n", kExitOk};
  }
  if (c.format == "csv") {
    std::string edges;
    if (witness) {
      for (const Edge& e : witness->edges) {
        edges += (edges.empty() ? "" : ";") + std::to_string(e.u) + "-" + std::to_string(e.v);
      }
    }
    return {"graph6,a,b,has_factor,witness_edges\n" + c.graph6 + "," + std::to_string(a) + "," + std::to_string(b) +
                "," + (witness ? "true" : "false") + "," + edges + "\n",
            kExitOk};
  }
  json j = envelope(c);
  json body;
  body["graph"] = graph_json(g, c.parts);
  body["a"] = a;
  body["b"] = b;
  body["has_factor"] = witness.has_value();
  if (witness) {
    body["witness"] = {{"edges", edges_json(witness->edges)}, {"degrees", witness->degrees}};
  } else {
    body["witness"] = nullptr;
  }
  for (auto& [k, v] : result.items()) body[k] = v;
  j["result"] = body;
  return {j.dump(2) + "\n", kExitOk};
}

struct Constructed {
  std::string name;
  Graph graph;
  std::optional<std::pair<int, int>> parts;
};

Constructed build_family(const RunConfig& c) {
  const std::string& f = c.subject;
  auto n = [&] { return need(c, "n"); };
  if (f == "complete") return check_keys(c, {"n"}), Constructed{"K_n", complete(n()), std::nullopt};
  if (f == "empty") return check_keys(c, {"n"}), Constructed{"empty", empty_graph(n()), std::nullopt};
  if (f == "path") return check_keys(c, {"n"}), Constructed{"P_n", path_graph(n()), std::nullopt};
  if (f == "cycle") return check_keys(c, {"n"}), Constructed{"C_n", cycle_graph(n()), std::nullopt};
  if (f == "star") {
    check_keys(c, {"n"});
    return {"K_{1,n-1}", star_graph(n() - 1), std::make_pair(1, n() - 1)};
  }
  if (f == "petersen") return check_keys(c, {}), Constructed{"Petersen", petersen_graph(), std::nullopt};
  if (f == "complete_bipartite") {
    check_keys(c, {"p", "q"});
    const int p = need(c, "p");
    const int q = need(c, "q");
    return {"K_{p,q}", complete_bipartite(p, q).to_graph(), std::make_pair(p, q)};
  }
  if (f == "threshold_extremal") {
    check_keys(c, {"n", "a"});
    return {"K_{a-1}∨(K_{n-a}∪K_1)", threshold_extremal(need(c, "a"), n()), std::nullopt};
  }
  if (f == "double_nested") {
    check_keys(c, {});
    const BipartiteGraph b = double_nested(c.ps, c.qs);
    return {"D", b.to_graph(), std::make_pair(b.left_size(), b.right_size())};
  }
  if (f == "near_complete_bipartite") {
    check_keys(c, {"p", "q", "e"});
    const int p = need(c, "p");
    const int q = need(c, "q");
    return {"K_{p,q}^e", near_complete_bipartite(p, q, need(c, "e")).to_graph(), std::make_pair(p, q)};
  }
  if (f == "edge_spectral_extremal") {
    check_keys(c, {"n", "e"});
    return {"(K_t∨(K_{r-t}∪K_1))∪(n-r-1)K_1", edge_spectral_extremal(n(), need(c, "e")), std::nullopt};
  }
  throw InvalidArgument("unknown family '" + f + "'");
}

Output run_construct(const RunConfig& c) {
  const Constructed built = build_family(c);
  const std::string code = to_graph6(built.graph);
  if (c.format == "graph6") return {code + "\n", kExitOk};
  if (c.format == "csv") {
    return {"family,graph6,n,edges\n" + c.subject + "," + code + "," + std::to_string(built.graph.order()) + "," +
                std::to_string(built.graph.edge_count()) + "\n",
            kExitOk};
  }
  json j = envelope(c);
  json body = graph_json(built.graph, built.parts);
  body["name"] = built.name;
  body["edge_list"] = edges_json(built.graph.edges());
  j["result"] = body;
  return {j.dump(2) + "\n", kExitOk};
}

Output run_spectral(const RunConfig& c) {
  check_keys(c, {});
  const Graph g = from_graph6(c.graph6);
  SpectralOptions options;
  options.tol = c.tol;
  const SpectralResult r = spectral_radius(g, options);
  if (c.format == "graph6") unsupported_format(c);
  if (c.format == "csv") {
    std::ostringstream out;
    out << "graph6,radius,iterations,residual\n"
        << c.graph6 << ',' << std::setprecision(17) << r.radius << ',' << r.iterations << ',' << r.residual << '\n';
    return {out.str(), kExitOk};
  }
  json j = envelope(c);
  j["result"] = {{"graph", graph_json(g, c.parts)},
                 {"radius", r.radius},
                 {"iterations", r.iterations},
                 {"residual", r.residual},
                 {"vector", r.vector}};
  return {j.dump(2) + "\n", kExitOk};
}

ExtremalAnswer compute_bound(const RunConfig& c) {
  const std::string& t = c.subject;
  if (t == "1.1" || t == "1.2" || t == "1.4" || t == "1.7") {
    check_keys(c, {"n", "a", "b"});
    const int n = need(c, "n");
    const int a = need(c, "a");
    const int b = need(c, "b");
    if (t == "1.1") return turan_factor(n, a, b);
    if (t == "1.2") return spectral_turan_factor(n, a, b);
    if (t == "1.4") return bipartite_order_turan(n, a, b);
    return bipartite_order_spectral(n, a, b);
  }
  if (t == "1.3" || t == "1.5") {
    check_keys(c, {"p", "q", "a", "b"});
    const int p = need(c, "p");
    const int q = need(c, "q");
    const int a = need(c, "a");
    const int b = need(c, "b");
    return t == "1.3" ? bipartite_parts_turan(p, q, a, b) : bipartite_parts_spectral(p, q, a, b);
  }
  throw InvalidArgument("unknown theorem '" + t + "' (expected 1.1, 1.2, 1.3, 1.4, 1.5 or 1.7)");
}

Output run_bound(const RunConfig& c) {
  const ExtremalAnswer answer = compute_bound(c);
  if (c.format == "graph6") {
    std::string out;
    for (const ExtremalGraph& g : answer.extremal) out += to_graph6(g.graph) + "\n";
    return {out, kExitOk};
  }
  if (c.format == "csv") {
    std::ostringstream out;
    std::string codes;
    for (const ExtremalGraph& g : answer.extremal) codes += (codes.empty() ? "" : ";") + to_graph6(g.graph);
    out << "theorem,case_label,bound_kind,bound_value,extremal\n"
        << answer.theorem << ',' << answer.case_label << ',' << kind_name(answer.bound.kind) << ','
        << std::setprecision(15) << answer.bound.value << ',' << codes << '\n';
    return {out.str(), kExitOk};
  }
  json j = envelope(c);
  j["result"] = answer_json(answer);
  return {j.dump(2) + "\n", kExitOk};
}

int verdict_status(const VerificationReport& r) {
  return r.verdict == Verdict::fail ? kExitVerificationFailed : kExitOk;
}

Output run_verify(const RunConfig& c) {
  Verifier verifier;
  const VerificationReport r = verifier.verify(c.subject, c.params);
  const int status = verdict_status(r);
  if (c.format == "graph6") {
    std::string out;
    for (const std::string& code : r.brute_extremal) out += code + "\n";
    return {out, status};
  }
  if (c.format == "csv") return {kReportCsvHeader + report_csv_row(r), status};
  json j = envelope(c);
  j["report"] = report_json(r);
  return {j.dump(2) + "\n", status};
}

Output run_batch(const RunConfig& c) {
  check_keys(c, {});
  Verifier verifier;
  const std::vector<VerifyJob> jobs = batch_jobs(c.subject, verifier.options().max_order);
  std::vector<VerificationReport> reports;
  reports.reserve(jobs.size());
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  for (const VerifyJob& job : jobs) {
    reports.push_back(run_job(verifier, job));
    switch (reports.back().verdict) {
      case Verdict::pass:
        ++passed;
        break;
      case Verdict::fail:
        ++failed;
        break;
      case Verdict::skipped:
        ++skipped;
        break;
    }
  }
  const int status = failed > 0 ? kExitVerificationFailed : kExitOk;
  if (c.format == "graph6") unsupported_format(c);
  if (c.format == "csv") {
    std::string out = kReportCsvHeader;
    for (const VerificationReport& r : reports) out += report_csv_row(r);
    return {out, status};
  }
  json j = envelope(c);
  j["summary"] = {{"jobs", reports.size()}, {"pass", passed}, {"fail", failed}, {"skipped", skipped}};
  j["reports"] = json::array();
  for (const VerificationReport& r : reports) j["reports"].push_back(report_json(r));
  return {j.dump(2) + "\n", status};
}

std::pair<std::string, int> split_param(const std::string& token) {
  const auto eq = token.find('=');
  if (eq == std::string::npos || eq == 0) throw InvalidArgument("expected key=value, got '" + token + "'");
  const std::string key = token.substr(0, eq);
  const std::string value = token.substr(eq + 1);
  std::size_t used = 0;
  int parsed = 0;
  try {
    parsed = std::stoi(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size()) throw InvalidArgument("parameter '" + key + "' needs an integer value");
  return {key, parsed};
}

}  // namespace

int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Output result;
  try {
    if (config.command == "decide") {
      result = run_decide(config);
    } else if (config.command == "construct") {
      result = run_construct(config);
    } else if (config.command == "spectral") {
      result = run_spectral(config);
    } else if (config.command == "bound") {
      result = run_bound(config);
    } else if (config.command == "verify") {
      result = run_verify(config);
    } else if (config.command == "batch") {
      result = run_batch(config);
    } else {
      throw InvalidArgument("unknown command '" + config.command + "'");
    }
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResourceCap;
  } catch (const NonConvergence& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResourceCap;
  }

  if (config.output.empty() || config.output == "-") {
    out << result.text;
  } else {
    std::ofstream file(config.output);
    if (!file) {
      err << "error: cannot open " << config.output << '\n';
      return kExitInvalidInput;
    }
    file << result.text;
  }
  return result.status;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  std::vector<std::string> raw_params;
  std::vector<int> parts;

  CLI::App app{"Decide, construct and verify [a,b]-factor extremal graphs."};
  app.name("abfactor");
  app.require_subcommand(1);
  app.set_version_flag("--version", ABFACTOR_VERSION);

  auto common = [&](CLI::App* sub, bool graph_input) {
    sub->add_option("--format", config.format, "json, csv or graph6")
        ->check(CLI::IsMember({"json", "csv", "graph6"}));
    sub->add_option("--output", config.output, "Write to this file instead of standard output");
    sub->add_option("--params", raw_params, "Extra key=value integer parameters");
    for (const char* key : {"n", "a", "b", "p", "q", "e"}) {
      const std::string name = std::string("--") + key;
      sub->add_option_function<int>(
          name, [&config, key](const int& v) { config.params[key] = v; }, std::string("Parameter ") + key);
    }
    if (graph_input) {
      sub->add_option("--graph6", config.graph6, "Input graph in graph6")->required();
      sub->add_option("--parts", parts, "Bipartition sizes p q (X = first p vertices)")->expected(2);
    }
  };

  CLI::App* decide = app.add_subcommand("decide", "Decide whether a graph has an [a,b]-factor");
  common(decide, true);
  CLI::App* construct = app.add_subcommand("construct", "Print a named graph family member");
  common(construct, false);
  construct->add_option("--family", config.subject, "Family name")->required();
  construct->add_option("--ps", config.ps, "X block sizes for double_nested")->delimiter(',');
  construct->add_option("--qs", config.qs, "Y block sizes for double_nested")->delimiter(',');
  CLI::App* spectral = app.add_subcommand("spectral", "Spectral radius of a graph");
  common(spectral, true);
  spectral->add_option("--tol", config.tol, "Convergence tolerance")->check(CLI::PositiveNumber);
  CLI::App* bound = app.add_subcommand("bound", "Closed-form extremal value and graphs");
  common(bound, false);
  bound->add_option("--theorem", config.subject, "1.1, 1.2, 1.3, 1.4, 1.5 or 1.7")->required();
  CLI::App* verify = app.add_subcommand("verify", "Exhaustive check of one target");
  common(verify, false);
  verify->add_option("--target", config.subject, "Target id")->required();
  CLI::App* batch = app.add_subcommand("batch", "Run a suite of verify targets");
  common(batch, false);
  batch->add_option("--suite", config.subject, "acceptance or quick")
      ->required()
      ->check(CLI::IsMember({"acceptance", "quick"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << ABFACTOR_VERSION << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }

  config.command = app.get_subcommands().front()->get_name();
  try {
    for (const std::string& token : raw_params) {
      const auto [key, value] = split_param(token);
      config.params[key] = value;
    }
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
  if (!parts.empty()) config.parts = std::make_pair(parts[0], parts[1]);
  return execute(config, out, err);
}

}  // namespace abfactor::cli
