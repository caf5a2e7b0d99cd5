#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "chromabij/bijections.hpp"
#include "chromabij/chromatic.hpp"
#include "chromabij/errors.hpp"
#include "chromabij/io.hpp"
#include "chromabij/symfunc.hpp"
#include "chromabij/verify.hpp"

namespace {

using nlohmann::json;
using namespace chromabij;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

void emit(const json& j, bool pretty) {
  std::cout << (pretty ? j.dump(2) : j.dump()) << "\n";
}

std::string poly_text(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const BigInt& c = p.coefficient(k);
    if (c == 0) continue;
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (mag != 1 || k == 0) out += mag.str();
    if (k >= 1) out += mag == 1 ? "t" : "*t";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

std::string partition_text(const Partition& lambda) {
  std::string out = "(";
  for (int i = 0; i < lambda.length(); ++i)
    out += (i ? "," : "") + std::to_string(lambda.parts()[i]);
  return out + ")";
}

json stage_to_json(const TraceEntry& entry) {
  json edges = json::array();
  for (const Edge& e : entry.state.mixed.edges()) edges.push_back({e.u, e.v});
  json arcs = json::array();
  for (const Arc& a : entry.state.mixed.arcs()) arcs.push_back({a.from, a.to});
  json j{{"stage", entry.state.stage}, {"edges", edges}, {"arcs", arcs}};
  if (entry.info.edge_index >= 0) {
    j["edge"] = entry.info.edge_index + 1;
    j["action"] = entry.info.action;
    j["rule"] = entry.info.violated_rule.empty() ? "none" : entry.info.violated_rule;
  }
  return j;
}

struct Options {
  std::string graph_arg;
  std::string against;
  std::string method = "subgraphs";
  std::string phi_arg;
  std::string psi_arg;
  bool has_at = false;
  long long at = 0;
  bool apply_omega = false;
  int expand_mu = 0;
  bool list = false;
  bool check = false;
  bool trace = false;
  int t = 1;
  int n = 0;
  int tmax = 3;
  int mumax = 3;
  bool pretty = false;
};

int run_chi(const Options& opt, const Budget& budget) {
  const Graph g = load_graph_argument(opt.graph_arg).graph;
  if (opt.method == "count") {
    if (!opt.has_at || opt.at < 1)
      throw invalid_input_error("--method count needs --at T with T >= 1");
    const BigInt value = chromatic_count(g, static_cast<int>(opt.at), budget);
    emit(to_json(value), opt.pretty);
    return kExitOk;
  }
  IntPolynomial p;
  if (opt.method == "subgraphs")
    p = chromatic_poly_all_subgraphs(g, budget);
  else if (opt.method == "nbc")
    p = chromatic_poly_nbc(g, budget);
  else if (opt.method == "delcon")
    p = chromatic_poly_deletion_contraction(g, budget);
  else
    throw invalid_input_error("unknown method: " + opt.method);
  if (opt.has_at) {
    emit(to_json(evaluate(p, BigInt(opt.at))), opt.pretty);
  } else if (opt.pretty) {
    std::cout << "chi(G;t) = " << poly_text(p) << "\n";
  } else {
    emit(to_json(p), false);
  }
  return kExitOk;
}

int run_csf(const Options& opt, const Budget& budget) {
  const Graph g = load_graph_argument(opt.graph_arg).graph;
  PSymFunc f;
  if (opt.method == "subgraphs")
    f = csf_all_subgraphs(g, budget);
  else if (opt.method == "nbc")
    f = csf_nbc(g, budget);
  else
    throw invalid_input_error("unknown method: " + opt.method);
  if (opt.apply_omega) f = omega(f);
  if (opt.expand_mu > 0) {
    const MonomialMap expanded = expand_monomials(f, opt.expand_mu, budget);
    if (opt.pretty) {
      for (const auto& [expo, c] : expanded.terms()) {
        std::cout << c << " * x^(";
        for (std::size_t i = 0; i < expo.size(); ++i)
          std::cout << (i ? "," : "") << expo[i];
        std::cout << ")\n";
      }
    } else {
      emit(to_json(expanded), false);
    }
  } else if (opt.pretty) {
    for (const auto& [lambda, c] : f.terms())
      std::cout << c << " * p_" << partition_text(lambda) << "\n";
  } else {
    emit(to_json(f), false);
  }
  return kExitOk;
}

int run_acyclic(const Options& opt, const Budget& budget) {
  const Graph g = load_graph_argument(opt.graph_arg).graph;
  json out;
  if (opt.list) {
    json list = json::array();
    const auto orientations = acyclic_orientations(g, budget);
    for (const Orientation& o : orientations) list.push_back(orientation_to_string(o));
    out = json{{"count", list.size()}, {"orientations", list}};
  } else {
    out = json{{"count", to_json(acyclic_orientation_count(g, budget))}};
  }
  emit(out, opt.pretty);
  return kExitOk;
}

int run_compat(const Options& opt, const Budget& budget) {
  const Graph g = load_graph_argument(opt.graph_arg).graph;
  if (opt.t < 1) throw invalid_input_error("--t must be a positive integer");
  const BigInt count = compatible_pair_count(g, opt.t, budget);
  json out{{"t", opt.t}, {"count", to_json(count)}};
  int rc = kExitOk;
  if (opt.check) {
    const IntPolynomial chi = chromatic_poly_nbc(g, budget);
    const BigInt sign = (g.vertex_count() % 2 == 0) ? 1 : -1;
    const BigInt expected = sign * evaluate(chi, BigInt(-opt.t));
    out["reciprocity"] = to_json(expected);
    out["match"] = (count == expected);
    if (count != expected) rc = kExitCheckFailure;
  }
  emit(out, opt.pretty);
  return rc;
}

int run_bijection(const Options& opt, const Budget&) {
  const Graph g = load_graph_argument(opt.graph_arg).graph;
  if (opt.phi_arg.empty() == opt.psi_arg.empty())
    throw invalid_input_error("need exactly one of --phi ORIENTATION or --psi SUBSET");
  json out;
  if (!opt.phi_arg.empty()) {
    const Orientation o = parse_orientation(g, opt.phi_arg);
    if (opt.trace) {
      const auto trace = trace_orientation_to_nbc(g, o);
      json stages = json::array();
      for (const TraceEntry& entry : trace) stages.push_back(stage_to_json(entry));
      json subset = json::array();
      for (const Edge& e : trace.back().state.mixed.edges())
        subset.push_back(g.edge_index(e.u, e.v) + 1);
      std::sort(subset.begin(), subset.end());
      out = json{{"direction", "orientation-to-nbc"}, {"stages", stages},
                 {"subset", subset}};
    } else {
      const EdgeSubset s = orientation_to_nbc(g, o);
      json subset = json::array();
      for (int i : s.indices()) subset.push_back(i + 1);
      out = json{{"subset", subset}};
    }
  } else {
    const EdgeSubset s = parse_subset(g, opt.psi_arg);
    if (opt.trace) {
      const auto trace = trace_nbc_to_orientation(g, s);
      json stages = json::array();
      for (const TraceEntry& entry : trace) stages.push_back(stage_to_json(entry));
      Orientation o;
      o.normal.assign(g.edge_count(), true);
      for (const Arc& a : trace.back().state.mixed.arcs())
        o.normal[g.edge_index(a.from, a.to)] = a.from < a.to;
      out = json{{"direction", "nbc-to-orientation"}, {"stages", stages},
                 {"orientation", orientation_to_string(o)}};
    } else {
      out = json{{"orientation", orientation_to_string(nbc_to_orientation(g, s))}};
    }
  }
  if (opt.pretty && opt.trace) {
    for (const json& stage : out["stages"]) {
      std::cout << "stage " << stage["stage"].get<int>() << ":";
      if (stage.contains("action"))
        std::cout << " e" << stage["edge"].get<int>() << " "
                  << stage["action"].get<std::string>()
                  << (stage["rule"] == "none"
                          ? ""
                          : " (rule " + stage["rule"].get<std::string>() + ")")
                  << ";";
      std::cout << " edges {";
      bool first = true;
      for (const json& e : stage["edges"]) {
        std::cout << (first ? "" : ", ") << e[0] << "-" << e[1];
        first = false;
      }
      std::cout << "} arcs {";
      first = true;
      for (const json& a : stage["arcs"]) {
        std::cout << (first ? "" : ", ") << a[0] << "->" << a[1];
        first = false;
      }
      std::cout << "}\n";
    }
    if (out.contains("subset"))
      std::cout << "result subset: " << out["subset"].dump() << "\n";
    else
      std::cout << "result orientation: " << out["orientation"].get<std::string>()
                << "\n";
  } else {
    emit(out, opt.pretty);
  }
  return kExitOk;
}

int run_verify(const Options& opt, const Budget& budget) {
  if (!opt.against.empty()) {
    if (opt.graph_arg.empty())
      throw invalid_input_error("--against needs --graph");
    const Graph a = load_graph_argument(opt.graph_arg).graph;
    const Graph b = load_graph_argument(opt.against).graph;
    const PSymFunc xa = csf_nbc(a, budget);
    const PSymFunc xb = csf_nbc(b, budget);
    const bool x_equal = (xa == xb);
    const json out{{"mode", "csf-compare"},
                   {"left", opt.graph_arg},
                   {"right", opt.against},
                   {"x_equal", x_equal},
                   {"chi_equal", specialize(xa) == specialize(xb)},
                   {"degree_sequences",
                    {degree_sequence(a), degree_sequence(b)}},
                   {"same_degree_sequence", degree_sequence(a) == degree_sequence(b)}};
    emit(out, opt.pretty);
    return x_equal ? kExitOk : kExitCheckFailure;
  }

  if (!opt.graph_arg.empty()) {
    const Graph g = load_graph_argument(opt.graph_arg).graph;
    const VerificationReport report = check_theorems(g, opt.tmax, opt.mumax, budget);
    if (opt.pretty) {
      std::cout << "graph " << report.graph_id << "\n";
      for (const CheckResult& c : report.checks)
        std::cout << "  " << (c.status == "pass" ? "ok  " : c.status) << "  "
                  << c.name << "  " << c.details << "\n";
      std::cout << report.passed << " passed, " << report.failed << " failed, "
                << report.skipped << " skipped\n";
    } else {
      emit(to_json(report), false);
    }
    return report.all_passed() ? kExitOk : kExitCheckFailure;
  }

  if (opt.n < 1) throw invalid_input_error("need --graph FILE or --n N");
  std::uint64_t graphs = 0;
  json failures = json::array();
  for_each_graph(opt.n, [&](const Graph& g) {
    ++graphs;
    const VerificationReport report = check_theorems(g, opt.tmax, opt.mumax, budget);
    for (const CheckResult& c : report.checks)
      if (c.status == "fail")
        failures.push_back(json{{"graph", report.graph_id}, {"check", c.name},
                                {"details", c.details}});
  }, budget);
  const json out{{"mode", "sweep"}, {"n", opt.n}, {"graphs", graphs},
                 {"tmax", opt.tmax}, {"mumax", opt.mumax},
                 {"failures", failures}, {"all_passed", failures.empty()}};
  emit(out, opt.pretty);
  return failures.empty() ? kExitOk : kExitCheckFailure;
}

int run_trees(const Options& opt, const Budget& budget) {
  const TreeSweepReport report = tree_conjecture_sweep(opt.n, budget);
  json collisions = json::array();
  for (const auto& [a, b] : report.collisions) collisions.push_back({a, b});
  const json out{{"n", report.n},
                 {"labeled_trees", report.labeled_trees},
                 {"iso_classes", report.iso_classes},
                 {"chi_formula_ok", report.chi_formula_ok},
                 {"collisions", collisions}};
  emit(out, opt.pretty);
  return (report.collisions.empty() && report.chi_formula_ok) ? kExitOk
                                                              : kExitCheckFailure;
}

int run_bench(const Options& opt, const Budget& budget) {
  const Graph g = load_graph_argument(opt.graph_arg).graph;
  const BenchResult r = bench_expansions(g, budget);
  if (opt.pretty) {
    std::cout << "graph: n=" << g.vertex_count() << " m=" << g.edge_count() << "\n"
              << "  all-subgraphs  " << r.full_subsets << " subsets  " << r.full_ms
              << " ms\n"
              << "  nbc            " << r.nbc_subsets << " subsets  " << r.nbc_ms
              << " ms\n"
              << "  polynomials " << (r.agree ? "agree" : "DISAGREE") << "\n";
  } else {
    json out = to_json(r);
    out["n"] = g.vertex_count();
    out["m"] = g.edge_count();
    emit(out, false);
  }
  return r.agree ? kExitOk : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact chromatic polynomial / chromatic symmetric function toolkit"};
  app.require_subcommand(1);
  Options opt;

  auto add_graph = [&](CLI::App* sub, bool required = true) {
    auto* o = sub->add_option("--graph", opt.graph_arg,
                              "graph file (edge list or graph6) or fixture name");
    if (required) o->required();
  };

  CLI::App* chi = app.add_subcommand("chi", "chromatic polynomial or evaluation");
  add_graph(chi);
  chi->add_option("--method", opt.method, "count | subgraphs | nbc | delcon");
  chi->add_option("--at", opt.at, "evaluate at an integer t")
      ->each([&](const std::string&) { opt.has_at = true; });
  chi->add_flag("--pretty", opt.pretty);

  CLI::App* csf = app.add_subcommand("csf", "chromatic symmetric function (p-basis)");
  add_graph(csf);
  csf->add_option("--method", opt.method, "subgraphs | nbc");
  csf->add_flag("--omega", opt.apply_omega, "apply the omega involution");
  csf->add_option("--expand", opt.expand_mu, "expand into MU variables");
  csf->add_flag("--pretty", opt.pretty);

  CLI::App* acyclic = app.add_subcommand("acyclic", "acyclic orientation count");
  add_graph(acyclic);
  acyclic->add_flag("--list", opt.list, "list the orientations as +/- strings");
  acyclic->add_flag("--pretty", opt.pretty);

  CLI::App* compat = app.add_subcommand("compat", "compatible pair count");
  add_graph(compat);
  compat->add_option("--t", opt.t, "number of colors")->required();
  compat->add_flag("--check", opt.check, "cross-check against (-1)^n chi(-t)");
  compat->add_flag("--pretty", opt.pretty);

  CLI::App* bijection = app.add_subcommand("bijection", "orientation <-> NBC subset");
  add_graph(bijection);
  bijection->add_option("--phi", opt.phi_arg,
                        "orientation as +/- per edge (+ = low->high)");
  bijection->add_option("--psi", opt.psi_arg, "comma-separated 1-based edge indices");
  bijection->add_flag("--trace", opt.trace, "print every intermediate stage");
  bijection->add_flag("--pretty", opt.pretty);

  CLI::App* verify = app.add_subcommand("verify", "run the identity battery");
  add_graph(verify, false);
  verify->add_option("--n", opt.n, "sweep all graphs on n vertices");
  verify->add_option("--against", opt.against, "compare csf with another graph");
  verify->add_option("--tmax", opt.tmax, "largest color count checked");
  verify->add_option("--mumax", opt.mumax, "largest variable count checked");
  verify->add_flag("--pretty", opt.pretty);

  CLI::App* trees = app.add_subcommand("trees", "tree-distinguishing sweep");
  trees->add_option("--n", opt.n, "number of vertices")->required();
  trees->add_flag("--pretty", opt.pretty);

  CLI::App* bench = app.add_subcommand("bench", "all-subgraphs vs NBC expansion");
  add_graph(bench);
  bench->add_flag("--pretty", opt.pretty);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const chromabij::Budget budget = chromabij::Budget::from_env();
  try {
    if (app.got_subcommand(chi)) return run_chi(opt, budget);
    if (app.got_subcommand(csf)) return run_csf(opt, budget);
    if (app.got_subcommand(acyclic)) return run_acyclic(opt, budget);
    if (app.got_subcommand(compat)) return run_compat(opt, budget);
    if (app.got_subcommand(bijection)) return run_bijection(opt, budget);
    if (app.got_subcommand(verify)) return run_verify(opt, budget);
    if (app.got_subcommand(trees)) return run_trees(opt, budget);
    if (app.got_subcommand(bench)) return run_bench(opt, budget);
  } catch (const chromabij::budget_error& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const chromabij::parse_error& e) {
    std::cerr << "parse error at " << e.position() << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const chromabij::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
