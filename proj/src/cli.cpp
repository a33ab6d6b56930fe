#include "perfcode/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "perfcode/catalogue.hpp"
#include "perfcode/error.hpp"
#include "perfcode/parser.hpp"

namespace perfcode {

using nlohmann::json;

namespace {

json id_list(const ElementSet& s) { return s.ids(); }

json label_list(const FiniteGroup& g, const ElementSet& s) {
  json out = json::array();
  for (ElementId a : s) out.push_back(g.label(a));
  return out;
}

json negative_to_json(const FiniteGroup& g, const NegativeWitness& w) {
  return std::visit(
      [&](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ObstructionWitness>) {
          return {{"kind", "obstruction"},
                  {"side", std::string(to_string(v.coset.side))},
                  {"representative", v.coset.representative},
                  {"elements", id_list(v.coset.elements)},
                  {"labels", label_list(g, v.coset.elements)}};
        } else if constexpr (std::is_same_v<T, ExhaustionWitness>) {
          return {{"kind", "exhaustion"}, {"nodes", v.nodes}};
        } else if constexpr (std::is_same_v<T, FailingElementWitness>) {
          return {{"kind", "failing_element"}, {"g", v.g}, {"label", g.label(v.g)}};
        } else {
          return {{"kind", "two_purity_violator"},
                  {"element", v.element},
                  {"label", g.label(v.element)}};
        }
      },
      w);
}

struct Settings {
  std::size_t order_bound = 512;
  std::uint64_t node_budget = 100'000'000;
  bool strict = false;

  DecideOptions decide() const {
    DecideOptions o;
    o.order_bound = order_bound;
    o.search.node_budget = node_budget;
    return o;
  }
};

std::size_t default_order_bound() {
  if (const char* env = std::getenv("PERFCODE_ORDER_BOUND")) {
    try {
      const auto v = std::stoull(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::Usage, "PERFCODE_ORDER_BOUND must be a positive integer");
  }
  return 512;
}

FiniteGroup load(const std::string& text, const Settings& s) {
  BuildOptions opts;
  opts.strict = s.strict;
  return build_group(parse_spec(text), opts);
}

void print_error(std::ostream& err, const std::exception& e) {
  json j;
  if (const auto* se = dynamic_cast<const SyntaxError*>(&e)) {
    j = {{"error", "SyntaxError"},
         {"message", se->what()},
         {"offset", se->offset()},
         {"expected", se->expected()}};
  } else if (const auto* pe = dynamic_cast<const Error*>(&e)) {
    j = {{"error", std::string(to_string(pe->kind()))}, {"message", pe->what()}};
  } else {
    j = {{"error", "Internal"}, {"message", e.what()}};
  }
  err << j.dump() << "\n";
}

int cmd_classify(const std::string& spec, bool verify, const Settings& s, std::ostream& out) {
  const auto g = load(spec, s);
  const auto r = is_code_perfect(g, verify ? CheckMode::Verify : CheckMode::Fast, s.decide());
  json j{{"code_perfect", r.code_perfect}, {"reason", r.reason}};
  j["order4_element"] = r.order4_element ? json(g.label(*r.order4_element)) : json(nullptr);
  j["non_code_subgroup"] =
      r.non_code_subgroup ? json(id_list(r.non_code_subgroup->elements())) : json(nullptr);
  j["verified"] = r.verified;
  if (r.verified) j["subgroups_checked"] = r.subgroups_checked;
  out << j.dump() << "\n";
  return r.code_perfect ? 0 : 1;
}

int cmd_subgroups(const std::string& spec, const Settings& s, std::ostream& out) {
  const auto g = load(spec, s);
  for (const auto& h : all_subgroups(g, s.order_bound)) {
    auto j = to_json(g, h);
    j["normal"] = is_normal(g, h);
    out << j.dump() << "\n";
  }
  return 0;
}

int cmd_codes(const std::string& spec, const Settings& s, std::ostream& out) {
  const auto g = load(spec, s);
  for (const auto& [h, d] : enumerate_codes(g, s.decide())) {
    auto j = to_json(g, h);
    j["decision"] = to_json(g, d);
    out << j.dump() << "\n";
  }
  return 0;
}

Subgroup subgroup_from(const FiniteGroup& g, const std::string& gens) {
  return generated_subgroup(g, parse_element_list(g, gens));
}

int cmd_decide(const std::string& spec, const std::string& gens, const Settings& s,
               std::ostream& out) {
  const auto g = load(spec, s);
  const auto h = subgroup_from(g, gens);
  const auto d = decide(g, h, s.decide());
  out << to_json(g, d).dump() << "\n";
  return d.verdict ? 0 : 1;
}

int cmd_witness(const std::string& spec, const std::string& gens, const Settings& s,
                std::ostream& out) {
  const auto g = load(spec, s);
  const auto h = subgroup_from(g, gens);
  const auto d = decide(g, h, s.decide());
  json j = to_json(g, h);
  j["verdict"] = d.verdict;
  j["method"] = std::string(to_string(d.method));
  if (d.witness) {
    j["connection_set"] = id_list(d.witness->elements());
    j["connection_labels"] = label_list(g, d.witness->elements());
    j["multiplicity"] = to_json(group_ring_product_check(g, *d.witness, h.elements()));
  } else {
    j["connection_set"] = nullptr;
    j["negative_witness"] =
        d.negative_witness ? negative_to_json(g, *d.negative_witness) : json(nullptr);
  }
  out << j.dump() << "\n";
  return d.verdict ? 0 : 1;
}

int cmd_verify(const std::string& spec, const std::string& s_text, const std::string& code_text,
               const Settings& s, std::ostream& out) {
  const auto g = load(spec, s);
  const auto conn = ConnectionSet::make(g, parse_element_list(g, s_text));
  const auto code = parse_element_list(g, code_text);
  const auto mu = group_ring_product_check(g, conn, code);
  const CayleyGraph graph(g, conn);
  const bool by_graph = is_perfect_code_graph(graph, code);
  const bool by_ring = mu.all_ones();
  json j{{"multiplicity", to_json(mu)},
         {"group_ring", by_ring},
         {"graph_domination", by_graph},
         {"agreement", by_graph == by_ring},
         {"perfect_code", by_graph && by_ring}};
  out << j.dump() << "\n";
  if (by_graph != by_ring) return 2;
  return by_ring ? 0 : 1;
}

int cmd_graph(const std::string& spec, const std::string& s_text, const std::string& highlight,
              const std::string& path, const Settings& s, std::ostream& out) {
  const auto g = load(spec, s);
  const CayleyGraph graph(g, ConnectionSet::make(g, parse_element_list(g, s_text)));
  const auto dot = export_dot(graph, parse_element_list(g, highlight));
  if (path.empty() || path == "-") {
    out << dot;
    return 0;
  }
  std::ofstream file(path);
  if (!file) throw Error(ErrorKind::Usage, "cannot write '" + path + "'");
  file << dot;
  const auto comp = graph.components();
  const std::size_t components =
      comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  out << json{{"path", path},
              {"vertices", graph.vertex_count()},
              {"edges", graph.edge_count()},
              {"components", components}}
             .dump()
      << "\n";
  return 0;
}

int cmd_catalogue(std::size_t max_order, const Settings& s, std::ostream& out) {
  const auto opts = s.decide();
  bool all_pass = true;
  out << std::left << std::setw(36) << "group" << std::right << std::setw(6) << "order"
      << std::setw(11) << "subgroups" << std::setw(7) << "codes" << std::setw(15)
      << "code-perfect" << "  result\n";
  for (const auto& entry : builtin_catalogue(max_order)) {
    BuildOptions bopts;
    bopts.strict = s.strict;
    const auto g = build_group(entry.spec, bopts);
    const auto all = all_subgroups(g, s.order_bound);
    std::size_t codes = 0;
    bool agree = true;
    bool every_code = true;
    for (const auto& h : all) {
      const auto d = decide(g, h, all, opts);
      const bool oracle = search_transversal(g, h, opts.search).found();
      agree = agree && d.verdict == oracle;
      every_code = every_code && oracle;
      codes += oracle ? 1 : 0;
    }
    const bool fast = !has_element_of_order_4(g);
    agree = agree && fast == every_code;
    all_pass = all_pass && agree;
    out << std::left << std::setw(36) << entry.name << std::right << std::setw(6) << g.order()
        << std::setw(11) << all.size() << std::setw(7) << codes << std::setw(15)
        << (fast ? "yes" : "no") << "  " << (agree ? "PASS" : "FAIL") << "\n";
  }
  out << (all_pass ? "all groups agree with the oracle\n" : "oracle disagreement found\n");
  return all_pass ? 0 : 1;
}

}  // namespace

json to_json(const FiniteGroup& g, const CodeDecision& d) {
  json j;
  j["verdict"] = d.verdict;
  j["method"] = std::string(to_string(d.method));
  j["witness"] = d.witness ? id_list(d.witness->elements()) : json(nullptr);
  j["negative_witness"] =
      d.negative_witness ? negative_to_json(g, *d.negative_witness) : json(nullptr);
  return j;
}

json to_json(const FiniteGroup& g, const Subgroup& h) {
  return {{"order", h.order()},
          {"index", h.index()},
          {"subgroup", id_list(h.elements())},
          {"labels", label_list(g, h.elements())}};
}

json to_json(const MultiplicityMap& m) { return m.counts; }

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Subgroup perfect codes in Cayley graphs of finite groups", "perfcode"};
  app.require_subcommand(1);
  app.fallthrough();

  Settings settings;
  std::optional<std::size_t> order_bound;
  app.add_option("--order-bound", order_bound,
                 "Largest group order for subgroup enumeration (default 512, "
                 "or PERFCODE_ORDER_BOUND)")
      ->check(CLI::PositiveNumber);
  app.add_option("--node-budget", settings.node_budget, "Transversal search node budget")
      ->check(CLI::PositiveNumber);
  app.add_flag("--strict", settings.strict, "Exhaustive associativity check for every group");

  std::string spec, subgroup, s_text, code_text, highlight, path;
  bool verify = false;
  std::size_t max_order = 64;

  auto* classify = app.add_subcommand("classify", "Decide whether the group is code-perfect");
  classify->add_option("spec", spec, "Group spec")->required();
  classify->add_flag("--verify", verify, "Cross-check every subgroup against the oracle");

  auto* subgroups = app.add_subcommand("subgroups", "List all subgroups as JSON lines");
  subgroups->add_option("spec", spec, "Group spec")->required();

  auto* codes = app.add_subcommand("codes", "Decide every subgroup, one JSON line each");
  codes->add_option("spec", spec, "Group spec")->required();

  auto* decide_cmd = app.add_subcommand("decide", "Decide whether <gens> is a perfect code");
  decide_cmd->add_option("spec", spec, "Group spec")->required();
  decide_cmd->add_option("--subgroup", subgroup, "Generators, e.g. x^3,y")->required();

  auto* witness = app.add_subcommand("witness", "Print a witness connection set");
  witness->add_option("spec", spec, "Group spec")->required();
  witness->add_option("--subgroup", subgroup, "Generators, e.g. x^4")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Check a (connection set, code) pair");
  verify_cmd->add_option("spec", spec, "Group spec")->required();
  verify_cmd->add_option("--s", s_text, "Connection set elements")->required();
  verify_cmd->add_option("--code", code_text, "Code elements")->required();

  auto* graph = app.add_subcommand("graph", "Export Cay(G, S) as DOT");
  graph->add_option("spec", spec, "Group spec")->required();
  graph->add_option("--s", s_text, "Connection set elements")->required();
  graph->add_option("--highlight", highlight, "Vertices to highlight");
  graph->add_option("-o,--out", path, "Output path (stdout when omitted)");

  auto* catalogue = app.add_subcommand("catalogue", "Run the oracle agreement suite");
  catalogue->add_option("--max-order", max_order, "Largest group order")
      ->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << json{{"error", "Usage"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  }

  try {
    settings.order_bound = order_bound ? *order_bound : default_order_bound();
    if (*classify) return cmd_classify(spec, verify, settings, out);
    if (*subgroups) return cmd_subgroups(spec, settings, out);
    if (*codes) return cmd_codes(spec, settings, out);
    if (*decide_cmd) return cmd_decide(spec, subgroup, settings, out);
    if (*witness) return cmd_witness(spec, subgroup, settings, out);
    if (*verify_cmd) return cmd_verify(spec, s_text, code_text, settings, out);
    if (*graph) return cmd_graph(spec, s_text, highlight, path, settings, out);
    if (*catalogue) return cmd_catalogue(max_order, settings, out);
  } catch (const std::exception& e) {
    print_error(err, e);
    return 2;
  }
  return 2;
}

}  // namespace perfcode
