#include "subcomp/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "subcomp/edge_list.hpp"
#include "subcomp/errors.hpp"
#include "subcomp/oracle.hpp"
#include "subcomp/reduction.hpp"
#include "subcomp/solvers.hpp"

namespace subcomp::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Graph read_graph(const std::string& path, std::istream& in) {
  std::string text;
  if (path.empty() || path == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(file), {});
  }
  return parse_graph(text);
}

VertexSet parse_set(const std::string& text) {
  std::vector<Vertex> ids;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item.front() == '-')
      throw UsageError("bad vertex id '" + item + "' in --set");
    ids.push_back(static_cast<Vertex>(value));
  }
  return VertexSet(std::move(ids));
}

Json witness_json(const std::optional<VertexSet>& w) {
  if (!w) return nullptr;
  Json arr = Json::array();
  for (Vertex v : *w) arr.push_back(v);
  return arr;
}

Json target_json(TargetKind kind, std::size_t k) {
  return Json{{"kind", to_string(kind)}, {"k", k}};
}

Json stats_json(const BranchStats& s) {
  return Json{{"nodes", s.nodes},
              {"max_depth", s.max_depth},
              {"pruned_by_size", s.pruned_by_size},
              {"pruned_by_maxdeg", s.pruned_by_maxdeg},
              {"memo_hits", s.memo_hits}};
}

Json decision_json(const SolveOutcome& outcome, TargetKind kind, std::size_t k) {
  return Json{{"answer", outcome.answer ? "yes" : "no"},
              {"witness", witness_json(outcome.witness)},
              {"target", target_json(kind, k)}};
}

int emit(std::ostream& out, const Json& doc, bool answer) {
  out << doc.dump() << '\n';
  return answer ? kYes : kNo;
}

struct Common {
  std::string graph_path = "-";
  std::size_t k = 0;
  bool stats = false;
  bool parallel = false;
  bool no_memo = false;
};

void add_graph_arg(CLI::App* cmd, Common& c) {
  cmd->add_option("graph", c.graph_path, "Edge-list file, or - for stdin")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Subgraph complementation solvers for degree-constrained targets", "subcomp"};
  app.require_subcommand(1);

  Common c;
  std::string target_name;
  std::string set_text;
  std::string out_prefix;
  std::size_t cap = BruteForceOptions{}.capacity;

  auto* maxdeg = app.add_subcommand("maxdeg", "Decide whether some S gives max degree <= k");
  auto* mindeg = app.add_subcommand("mindeg", "Decide whether some S gives min degree >= k");
  auto* regular = app.add_subcommand("regular", "Decide whether some S gives a k-regular graph");
  for (auto* cmd : {maxdeg, mindeg, regular}) {
    add_graph_arg(cmd, c);
    cmd->add_option("--k", c.k, "Degree bound")->required();
    cmd->add_flag("--parallel", c.parallel, "Race root branches on threads (witness may vary)");
    cmd->add_flag("--no-memo", c.no_memo, "Disable visited-set memoization");
  }
  maxdeg->add_flag("--stats", c.stats, "Include search statistics");
  regular->add_flag("--stats", c.stats, "Include search statistics");

  auto* approx = app.add_subcommand("approx-maxdeg", "3-approximate the minimum reachable max degree");
  add_graph_arg(approx, c);

  auto* brute = app.add_subcommand("brute", "Exhaustive reference solver");
  add_graph_arg(brute, c);
  brute->add_option("--target", target_name, "maxdeg, mindeg or regular")
      ->required()
      ->check(CLI::IsMember({"maxdeg", "mindeg", "regular"}));
  brute->add_option("--k", c.k, "Degree bound")->required();
  brute->add_option("--cap", cap, "Refuse graphs with more vertices than this")
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Check a set against a target");
  add_graph_arg(verify, c);
  verify->add_option("--target", target_name, "maxdeg, mindeg or regular")
      ->required()
      ->check(CLI::IsMember({"maxdeg", "mindeg", "regular"}));
  verify->add_option("--k", c.k, "Degree bound")->required();
  verify->add_option("--set", set_text, "Comma-separated vertex ids")->required();

  auto* reduce = app.add_subcommand("reduce", "Emit the clique gadget instance for a regular graph");
  add_graph_arg(reduce, c);
  reduce->add_option("--k", c.k, "Clique size")->required();
  reduce->add_option("--out", out_prefix, "Writes PREFIX.graph and PREFIX.blocks.json")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kYes : kUsage;
  }

  try {
    const Graph g = read_graph(c.graph_path, in);
    SolverOptions options;
    options.memoize = !c.no_memo;
    options.parallel = c.parallel;

    if (maxdeg->parsed() || mindeg->parsed() || regular->parsed()) {
      TargetKind kind = TargetKind::MaxDegAtMost;
      SolveReport report;
      if (maxdeg->parsed()) {
        report = solve_max_deg_le(g, c.k, options);
      } else if (mindeg->parsed()) {
        kind = TargetKind::MinDegAtLeast;
        report = solve_min_deg_ge(g, c.k, options);
      } else {
        kind = TargetKind::Regular;
        report = solve_k_regular(g, c.k, options);
      }
      Json doc = decision_json(report.outcome, kind, c.k);
      if (c.stats) doc["stats"] = stats_json(report.stats);
      return emit(out, doc, report.outcome.answer);
    }

    if (approx->parsed()) {
      const ApproxResult r = approx_min_max_degree(g);
      Json doc{{"answer", "yes"},
               {"witness", witness_json(r.witness)},
               {"target", Json{{"kind", "approx-maxdeg"}}},
               {"achieved_max_degree", r.achieved_max_degree},
               {"lower_bound_k", r.lower_bound_k},
               {"exact", r.exact}};
      return emit(out, doc, true);
    }

    if (brute->parsed()) {
      const TargetPredicate target{*parse_target_kind(target_name), c.k};
      const SolveOutcome outcome = brute_force_solve(g, target, BruteForceOptions{cap});
      Json doc = decision_json(outcome, target.kind, c.k);
      doc["stats"] = Json{{"nodes_explored", outcome.nodes_explored}};
      return emit(out, doc, outcome.answer);
    }

    if (verify->parsed()) {
      const TargetPredicate target{*parse_target_kind(target_name), c.k};
      const VertexSet s = parse_set(set_text);
      const bool ok = check(g, s, target);
      Json doc{{"answer", ok ? "yes" : "no"},
               {"witness", witness_json(s)},
               {"target", target_json(target.kind, c.k)}};
      return emit(out, doc, ok);
    }

    // reduce
    const auto inst = build_crg_reduction(g, c.k);
    if (!inst) {
      Json doc{{"answer", "no"},
               {"trivially_no", true},
               {"reason", "k exceeds r + 1, so no k-clique exists"}};
      return emit(out, doc, false);
    }
    const std::string graph_file = out_prefix + ".graph";
    const std::string blocks_file = out_prefix + ".blocks.json";
    {
      std::ofstream gf(graph_file, std::ios::binary);
      std::ofstream bf(blocks_file, std::ios::binary);
      if (!gf || !bf) throw UsageError("cannot write output files with prefix " + out_prefix);
      gf << write_graph(inst->g_prime);
      bf << write_block_map(*inst);
    }
    const auto& p = inst->params;
    Json doc{{"k_prime", inst->k_prime},
             {"order", inst->g_prime.order()},
             {"edges", inst->g_prime.edge_count()},
             {"params", Json{{"n", p.n}, {"k", p.k}, {"r", p.r}, {"s", p.s},
                             {"t", p.t}, {"a", p.a}, {"b", p.b}}},
             {"graph", graph_file},
             {"blocks", blocks_file}};
    return emit(out, doc, true);
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kCapacity;
  } catch (const std::exception& e) {
    // ParseError, GraphError, PreconditionError and usage problems.
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace subcomp::cli
