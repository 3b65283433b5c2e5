#include "skeinlab/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "skeinlab/dsl.hpp"
#include "skeinlab/groups.hpp"
#include "skeinlab/petersen.hpp"
#include "skeinlab/skein.hpp"
#include "skeinlab/tensor_json.hpp"

namespace skeinlab {

namespace {

using nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

std::size_t default_guard() {
  if (const char* env = std::getenv("SKEINLAB_GUARD")) {
    try {
      std::size_t used = 0;
      unsigned long value = std::stoul(env, &used);
      if (used == std::string(env).size()) return value;
    } catch (const std::exception&) {
    }
    throw InvalidArgument(std::string("SKEINLAB_GUARD must be a non-negative integer, got '") + env + "'");
  }
  return kDefaultGuard;
}

struct EvalOptions {
  std::string file;
  std::string group;
  bool symbolic = false;
  bool dense = false;
  bool json = false;
  std::optional<std::size_t> guard;
  std::vector<std::string> bindings;
};

int cmd_eval(const EvalOptions& o, std::ostream& out, std::ostream& err) {
  ModelContext ctx(resolve_group(o.group));
  DiagramIR ir;
  try {
    ir = parse_diagram(read_file(o.file), ParseOptions{ctx.dim()});
  } catch (const ParseError& e) {
    err << o.file << ":" << e.what() << "\n";
    return kExitInput;
  }
  Bindings bindings;
  for (const auto& spec : o.bindings) {
    auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0) throw InvalidArgument("--bind expects name=file, got '" + spec + "'");
    bindings.insert_or_assign(spec.substr(0, eq), tensor_from_json(nlohmann::json::parse(read_file(spec.substr(eq + 1)))));
  }
  bool symbolic = o.symbolic;
  if (!o.symbolic && !o.dense) {
    symbolic = ir.is_closed() && ir.count(BoxKind::Custom) == 0;
  }
  if (symbolic) {
    ClosedEvaluation r = evaluate_closed(ctx, ir);
    if (o.json) {
      ordered_json j{{"value", to_string(r.value)}, {"s_boxes", r.s_boxes}, {"components", r.components}, {"terms_expanded", r.terms_expanded}};
      out << j.dump() << "\n";
    } else {
      out << to_string(r.value) << "\n";
    }
    return kExitOk;
  }
  ContractionPlan plan = compile(ir, o.guard.value_or(default_guard()));
  SparseTensor t = run(ctx, plan, bindings);
  if (o.json) {
    ordered_json j;
    if (t.rank() == 0) {
      j["value"] = to_string(t.scalar_value());
    } else {
      j["tensor"] = tensor_to_json(t);
    }
    j["peak_rank"] = plan.peak_rank;
    out << j.dump() << "\n";
  } else if (t.rank() == 0) {
    out << to_string(t.scalar_value()) << "\n";
  } else {
    for (const auto& [tuple, value] : t.entries()) {
      for (std::size_t k = 0; k < tuple.size(); ++k) out << (k ? " " : "") << tuple[k];
      out << " : " << to_string(value) << "\n";
    }
  }
  return kExitOk;
}

int cmd_dim(const std::string& group, unsigned n, std::ostream& out) {
  out << orbit_count(resolve_group(group), n).get_str() << "\n";
  return kExitOk;
}

int cmd_check(const std::string& group, std::uint64_t seed, bool json, std::ostream& out) {
  ModelContext ctx(resolve_group(group));
  RelationReport report = verify_relations(ctx, seed);
  if (json) {
    ordered_json checks = ordered_json::array();
    for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    out << ordered_json{{"group", group}, {"passed", report.all_passed()}, {"checks", checks}}.dump() << "\n";
  } else {
    for (const auto& c : report.checks) {
      out << (c.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(20) << c.name << c.detail << "\n";
    }
  }
  return report.all_passed() ? kExitOk : kExitFailure;
}

int cmd_petersen(bool json, std::ostream& out) {
  using namespace petersen;
  const KneserModel model = build_kneser();
  std::vector<IdentityCheck> checks;

  const GraphInvariants inv = graph_invariants(model);
  std::ostringstream graph;
  graph << inv.edges << " edges, degree " << inv.min_degree << "-" << inv.max_degree << ", " << inv.triangles << " triangles, "
        << inv.four_cycles << " 4-cycles, |G| = " << inv.group_order;
  checks.push_back(IdentityCheck{"graph", graph.str(), 0,
                                 inv.edges == 15 && inv.min_degree == 3 && inv.max_degree == 3 && inv.triangles == 0 &&
                                     inv.four_cycles == 0 && inv.group_order == 120 && inv.automorphisms});

  const ModelContext ctx(model.action);
  std::size_t visited = 0;
  const SparseTensor from_graph = molecule_from_graph(model, &visited);
  const SparseTensor residual = from_graph - molecule(ctx);
  checks.push_back(IdentityCheck{"molecule", std::to_string(from_graph.support_size()) + " entries, " + std::to_string(visited) + " search nodes",
                                 residual.support_size(), residual.is_zero()});

  for (const auto& report : {verify_b1(model), verify_b2(model)}) {
    checks.insert(checks.end(), report.checks.begin(), report.checks.end());
  }

  const GenerationReport gen = verify_generation(model);
  checks.insert(checks.end(), gen.identities.checks.begin(), gen.identities.checks.end());
  std::ostringstream ranks;
  for (std::size_t n = 0; n < gen.ranks.size(); ++n) ranks << (n ? " " : "ranks ") << gen.ranks[n] << "/" << gen.targets[n];
  ranks << ", " << gen.rounds << " rounds, " << gen.candidates << " candidates";
  checks.push_back(IdentityCheck{"generation", ranks.str(), 0, gen.ranks == gen.targets && !gen.budget_exhausted});
  checks.push_back(IdentityCheck{"crossing-generated", "R lies in the span generated by the 2-boxes", 0, gen.transposition_in_span});

  const bool ok = std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed; });
  if (json) {
    ordered_json rows = ordered_json::array();
    for (const auto& c : checks) {
      rows.push_back({{"name", c.name}, {"passed", c.passed}, {"residual_support", c.residual_support}, {"detail", c.detail}});
    }
    out << ordered_json{{"passed", ok}, {"checks", rows}}.dump() << "\n";
  } else {
    for (const auto& c : checks) {
      out << (c.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(24) << c.name << "residual " << std::setw(4)
          << c.residual_support << c.detail << "\n";
    }
  }
  return ok ? kExitOk : kExitFailure;
}

int cmd_export(const std::string& group, const std::string& what, std::ostream& out) {
  ModelContext ctx(resolve_group(group));
  if (what.rfind("basis:", 0) == 0) {
    unsigned n = static_cast<unsigned>(std::stoul(what.substr(6)));
    ordered_json list = ordered_json::array();
    for (const auto& e : orbit_basis(ctx, n)) list.push_back({{"representative", e.representative}, {"tensor", tensor_to_json(e.tensor)}});
    out << list.dump() << "\n";
    return kExitOk;
  }
  SparseTensor t = [&] {
    if (what == "R") return transposition(ctx);
    if (what == "S") return molecule(ctx);
    if (what.rfind("ghz:", 0) == 0) return ghz(ctx, std::stoul(what.substr(4)));
    if (what.rfind("orbit:", 0) == 0) {
      IndexTuple tuple;
      std::stringstream items(what.substr(6));
      for (std::string item; std::getline(items, item, ',');) {
        unsigned long v = std::stoul(item);
        if (v >= ctx.dim()) throw InvalidArgument("orbit index " + item + " out of range");
        tuple.push_back(static_cast<Index>(v));
      }
      return orbit_sum(ctx, tuple);
    }
    throw InvalidArgument("unknown export target '" + what + "' (expected R, S, ghz:k, orbit:i,j,... or basis:n)");
  }();
  out << tensor_to_json(t).dump() << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact evaluation and verification for group-action spin models", "skeinlab"};
  app.require_subcommand(1);

  EvalOptions eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a .skein diagram");
  eval_cmd->add_option("file", eval.file, "Diagram file")->required();
  eval_cmd->add_option("--group,-g", eval.group, "trivial:d, sym:d, cyclic:d, petersen, or a group file")->required();
  auto* sym_flag = eval_cmd->add_flag("--symbolic", eval.symbolic, "Closed-diagram evaluator");
  eval_cmd->add_flag("--dense", eval.dense, "Contraction-plan evaluator")->excludes(sym_flag);
  eval_cmd->add_option("--guard", eval.guard, "Largest intermediate rank allowed (default 8, or SKEINLAB_GUARD)");
  eval_cmd->add_option("--bind", eval.bindings, "Bind a named tensor: name=file.json");
  eval_cmd->add_flag("--json", eval.json, "JSON output");

  std::string dim_group;
  unsigned dim_n = 0;
  auto* dim_cmd = app.add_subcommand("dim", "Dimension of the invariant rank-n space");
  dim_cmd->add_option("group", dim_group)->required();
  dim_cmd->add_option("n", dim_n)->required();

  std::string check_group;
  std::uint64_t seed = 0;
  bool check_json = false;
  auto* check_cmd = app.add_subcommand("check", "Verify the skein relations for a group");
  check_cmd->add_option("group", check_group)->required();
  check_cmd->add_option("--seed", seed, "Seed for randomized samples");
  check_cmd->add_flag("--json", check_json);

  bool petersen_json = false;
  auto* petersen_cmd = app.add_subcommand("petersen", "Petersen graph model");
  auto* verify_cmd = petersen_cmd->add_subcommand("verify", "Run every Petersen check");
  verify_cmd->add_flag("--json", petersen_json);
  petersen_cmd->require_subcommand(1);

  std::string export_group, export_what;
  auto* export_cmd = app.add_subcommand("export", "Print a tensor as JSON");
  export_cmd->add_option("group", export_group)->required();
  export_cmd->add_option("what", export_what, "R, S, ghz:k, orbit:i,j,..., or basis:n")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (eval_cmd->parsed()) return cmd_eval(eval, out, err);
    if (dim_cmd->parsed()) return cmd_dim(dim_group, dim_n, out);
    if (check_cmd->parsed()) return cmd_check(check_group, seed, check_json, out);
    if (verify_cmd->parsed()) return cmd_petersen(petersen_json, out);
    if (export_cmd->parsed()) return cmd_export(export_group, export_what, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitInput;
  } catch (const GuardExceeded& e) {
    err << "guard exceeded: " << e.what() << "\n";
    return kExitGuard;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitGuard;
  } catch (const GroupError& e) {
    err << "group error: " << e.what() << "\n";
    return kExitGroup;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace skeinlab
