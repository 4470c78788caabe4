#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "dlp/dlp.hpp"
#include "json.hpp"

using namespace dlp;

namespace {

struct Options {
  std::string file;
  std::string semantics = "weak";
  std::string kind = "weak";
  std::string set;
  std::string dot;
  std::size_t limit = 0;
  bool json = false;
  Limits limits;
};

Semantics semantics_of(const std::string& s) {
  if (auto v = parse_semantics(s)) return *v;
  throw CLI::ValidationError("--semantics", "expected weak, strong or canonical");
}

GraphKind kind_of(const std::string& s) {
  if (auto v = parse_graph_kind(s)) return *v;
  throw CLI::ValidationError("--kind", "expected weak, strong or canonical");
}

std::string braced(const DlProgram& k, const Interpretation& i) {
  return i.size() == 0 ? "∅" : "{" + k.format(i) + "}";
}

std::string listing(const DlProgram& k, const std::vector<Interpretation>& is) {
  if (is.empty()) return "none";
  std::string out;
  for (std::size_t n = 0; n < is.size(); ++n) out += (n ? ", " : "") + braced(k, is[n]);
  return out;
}

nlohmann::json stats_json(const SolveStats& s) {
  return {{"sat_calls", s.sat_calls},
          {"candidates", s.candidates},
          {"consistency_clauses", s.consistency_clauses},
          {"loop_formulas", s.loop_formulas},
          {"answer_sets", s.answer_sets}};
}

void print_answer_sets(const DlProgram& k, Semantics s, const std::vector<Interpretation>& is, const SolveStats& stats,
                       bool json) {
  if (!json) {
    for (const auto& i : is) std::cout << k.format(i) << "\n";
    return;
  }
  nlohmann::json sets = nlohmann::json::array();
  for (const auto& i : is) {
    nlohmann::json atoms = nlohmann::json::array();
    for (AtomId a : i.elements()) atoms.push_back(k.atom_name(a));
    sets.push_back(std::move(atoms));
  }
  nlohmann::json out{{"semantics", to_string(s)}, {"answer_sets", std::move(sets)}, {"stats", stats_json(stats)}};
  std::cout << out.dump(2) << "\n";
}

int run_solve(const Options& o) {
  DlProgram k = load_program(o.file, o.limits);
  Semantics s = semantics_of(o.semantics);
  SolveStats stats;
  auto is = answer_sets(k, s, o.limit, &stats);
  print_answer_sets(k, s, is, stats, o.json);
  return 0;
}

int run_oracle(const Options& o) {
  DlProgram k = load_program(o.file, o.limits);
  Semantics s = semantics_of(o.semantics);
  auto is = enumerate_answer_sets(k, s);
  if (o.limit && is.size() > o.limit) is.resize(o.limit);
  SolveStats stats;
  stats.candidates = std::size_t{1} << k.hb_size();
  stats.answer_sets = is.size();
  print_answer_sets(k, s, is, stats, o.json);
  return 0;
}

int run_check(const Options& o) {
  DlProgram k = load_program(o.file, o.limits);
  Semantics s = semantics_of(o.semantics);
  Interpretation i = k.interpretation(parse_atom_list(o.set));
  if (auto f = violated_formula(k, i, s)) {
    std::cout << "no\nviolated: " << to_string(k, *f) << "\n";
  } else {
    std::cout << "yes\n";
  }
  return 0;
}

int run_graph(const Options& o) {
  DlProgram k = load_program(o.file, o.limits);
  DepGraph g = dependency_graph(k, kind_of(o.kind));
  if (o.dot.empty()) {
    for (auto [u, v] : g.edges()) std::cout << k.atom_name(u) << " -> " << k.atom_name(v) << "\n";
    return 0;
  }
  std::string text = to_dot(k, g);
  if (o.dot == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream out(o.dot);
  if (!out) throw Error("cannot write " + o.dot);
  out << text;
  return 0;
}

int run_loops(const Options& o) {
  DlProgram k = load_program(o.file, o.limits);
  GraphKind kind = kind_of(o.kind);
  auto ls = loops(dependency_graph(k, kind), k.limits().max_loop_vertices);
  std::optional<Interpretation> m;
  if (!o.set.empty()) m = k.interpretation(parse_atom_list(o.set));
  for (const auto& l : ls) {
    std::cout << braced(k, l);
    switch (kind) {
      case GraphKind::Weak: std::cout << ": " << to_string(k, weak_loop_formula(k, l)); break;
      case GraphKind::Strong: std::cout << ": " << to_string(k, strong_loop_formula(k, l)); break;
      case GraphKind::Canonical:
        if (m) std::cout << ": " << to_string(k, canonical_loop_formula(k, l, *m));
        break;
    }
    std::cout << "\n";
  }
  return 0;
}

int run_classify(const Options& o) {
  DlProgram k = load_program(o.file, o.limits);
  for (std::size_t d = 0; d < k.dl_atoms().size(); ++d)
    std::cout << k.dl_atoms()[d].to_string() << " " << (is_monotonic(k, d) ? "monotonic" : "nonmonotonic") << "\n";
  return 0;
}

int run_diff(const Options& o) {
  DlProgram k = load_program(o.file, o.limits);
  auto weak = answer_sets(k, Semantics::Weak);
  auto strong = answer_sets(k, Semantics::Strong);
  auto canonical = answer_sets(k, Semantics::Canonical);
  std::vector<Interpretation> circular;
  for (const auto& i : strong)
    if (is_circular(k, i)) circular.push_back(i);
  std::cout << "weak: " << listing(k, weak) << "\n";
  std::cout << "strong: " << listing(k, strong);
  if (!circular.empty()) std::cout << " (circular: " << listing(k, circular) << ")";
  std::cout << "\n";
  std::cout << "canonical: " << listing(k, canonical) << "\n";
  return 0;
}

int run_explain(const Options& o) {
  DlProgram k = load_program(o.file, o.limits);
  for (const auto& f : completion(k)) std::cout << to_string(k, f) << "\n";
  if (!o.set.empty()) {
    Interpretation i = k.interpretation(parse_atom_list(o.set));
    auto f = violated_formula(k, i, semantics_of(o.semantics));
    std::cout << "set " << braced(k, i) << ": " << (f ? "violates " + to_string(k, *f) : "answer set") << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Answer sets of dl-programs"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("file", o.file, "Program file")->required()->check(CLI::ExistingFile);
    cmd->add_option("--max-hb", o.limits.max_herbrand, "Herbrand base bound for brute-force oracles");
    cmd->add_option("--max-input-atoms", o.limits.max_input_atoms, "Input atom bound per dl-atom");
  };
  auto add_semantics = [&](CLI::App* cmd) {
    cmd->add_option("--semantics,-s", o.semantics, "weak, strong or canonical")->capture_default_str();
  };
  auto add_kind = [&](CLI::App* cmd) {
    cmd->add_option("--kind,-k", o.kind, "weak, strong or canonical")->capture_default_str();
  };

  auto* solve = app.add_subcommand("solve", "Enumerate answer sets");
  add_common(solve);
  add_semantics(solve);
  solve->add_option("--limit", o.limit, "Stop after N answer sets (0 = all)");
  solve->add_flag("--json", o.json, "JSON output");

  auto* oracle = app.add_subcommand("oracle", "Enumerate answer sets by brute force");
  add_common(oracle);
  add_semantics(oracle);
  oracle->add_option("--limit", o.limit, "Print at most N answer sets (0 = all)");
  oracle->add_flag("--json", o.json, "JSON output");

  auto* check = app.add_subcommand("check", "Test one interpretation");
  add_common(check);
  add_semantics(check);
  check->add_option("--set", o.set, "Atoms of the interpretation, e.g. \"p(a),q(b)\"")->required();

  auto* graph = app.add_subcommand("graph", "Print a dependency graph");
  add_common(graph);
  add_kind(graph);
  graph->add_option("--dot", o.dot, "Write Graphviz output to a file (- for stdout)");

  auto* loop_cmd = app.add_subcommand("loops", "List loops and their loop formulas");
  add_common(loop_cmd);
  add_kind(loop_cmd);
  loop_cmd->add_option("--set", o.set, "Interpretation for canonical loop formulas");

  auto* classify = app.add_subcommand("classify", "Monotonicity of each dl-atom");
  add_common(classify);

  auto* diff = app.add_subcommand("diff", "Compare the three semantics");
  add_common(diff);

  auto* explain = app.add_subcommand("explain", "Print the completion, and why a set is rejected");
  add_common(explain);
  add_semantics(explain);
  explain->add_option("--set", o.set, "Atoms of an interpretation to explain");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*solve) return run_solve(o);
    if (*oracle) return run_oracle(o);
    if (*check) return run_check(o);
    if (*graph) return run_graph(o);
    if (*loop_cmd) return run_loops(o);
    if (*classify) return run_classify(o);
    if (*diff) return run_diff(o);
    if (*explain) return run_explain(o);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const TooLarge& e) {
    std::cerr << "resource bound: " << e.what() << "\n";
    return 2;
  } catch (const LoopBudgetExceeded& e) {
    std::cerr << "resource bound: " << e.what() << "\n";
    return 2;
  } catch (const SyntaxError& e) {
    std::cerr << o.file << ":" << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
