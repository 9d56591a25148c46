// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "naive_oracle.hpp"
#include "subcomp/cli.hpp"
#include "subcomp/edge_list.hpp"
#include "subcomp/oracle.hpp"
#include "subcomp/reduction.hpp"
#include "subcomp/solvers.hpp"

namespace {

using namespace subcomp;
using Clock = std::chrono::steady_clock;

constexpr double kExhaustiveBudgetSeconds = 120.0;
constexpr double kRandomBudgetSeconds = 120.0;
constexpr double kReductionBudgetSeconds = 300.0;

struct Instance {
  Graph g;
  std::size_t k;
};

// Criterion 1: all labeled graphs on five vertices, k = 0..4.
std::vector<Instance> exhaustive_instances() {
  std::vector<Instance> out;
  for (std::uint64_t code = 0; code < 1024; ++code)
    for (std::size_t k = 0; k <= 4; ++k) out.push_back({testing::graph_from_code(5, code), k});
  return out;
}

// Criterion 2: 200 graphs G(8, p), p cycling through 0.2, 0.5, 0.8; k = 0..5.
std::vector<Graph> random_graphs() {
  std::mt19937_64 rng(20250101);
  constexpr std::array<double, 3> densities{0.2, 0.5, 0.8};
  std::vector<Graph> out;
  for (int i = 0; i < 200; ++i) out.push_back(testing::random_graph(8, densities[i % 3], rng));
  return out;
}

std::vector<Instance> random_instances(const std::vector<Graph>& graphs) {
  std::vector<Instance> out;
  for (const Graph& g : graphs)
    for (std::size_t k = 0; k <= 5; ++k) out.push_back({g, k});
  return out;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

class Report {
 public:
  void line(int id, const std::string& title, bool pass, const std::string& detail) {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << id << ": " << title << " -- "
              << detail << std::endl;
    all_pass_ = all_pass_ && pass;
  }
  bool all_pass() const { return all_pass_; }

 private:
  bool all_pass_ = true;
};

std::string verify_with_cli(const Graph& g, const VertexSet& s, const TargetPredicate& t,
                            int& code) {
  std::istringstream in(write_graph(g));
  std::ostringstream out, err;
  code = cli::run({"verify", "--target", std::string(to_string(t.kind)), "--k",
                   std::to_string(t.k), "--set", s.to_string()},
                  in, out, err);
  return out.str();
}

struct OracleRun {
  std::size_t comparisons = 0;
  std::size_t mismatches = 0;
  std::size_t invalid_witnesses = 0;
  std::size_t verify_failures = 0;
  double seconds = 0;
};

OracleRun compare_with_oracle(const std::vector<Instance>& instances, bool verify_cli) {
  OracleRun run;
  const auto start = Clock::now();
  for (const auto& [g, k] : instances) {
    const std::pair<TargetPredicate, SolveReport> results[] = {
        {TargetPredicate::max_deg_at_most(k), solve_max_deg_le(g, k)},
        {TargetPredicate::min_deg_at_least(k), solve_min_deg_ge(g, k)},
        {TargetPredicate::regular(k), solve_k_regular(g, k)},
    };
    for (const auto& [target, report] : results) {
      ++run.comparisons;
      if (report.outcome.answer != brute_force_solve(g, target).answer) ++run.mismatches;
      if (!report.outcome.answer) continue;
      if (!check(g, *report.outcome.witness, target)) ++run.invalid_witnesses;
      if (verify_cli) {
        int code = -1;
        verify_with_cli(g, *report.outcome.witness, target, code);
        if (code != cli::kYes) ++run.verify_failures;
      }
    }
  }
  run.seconds = seconds_since(start);
  return run;
}

// Structural audits over every witness the exhaustive oracle finds.
struct StructureAudit {
  std::size_t bounds_checked = 0;
  std::size_t bounds_violations = 0;
  std::size_t regular_witnesses = 0;
  std::size_t regular_components = 0;
  std::size_t regular_violations = 0;
};

void audit_witnesses(const Instance& inst, StructureAudit& audit) {
  const auto& [g, k] = inst;
  const auto at_most = TargetPredicate::max_deg_at_most(k);
  const auto regular = TargetPredicate::regular(k);
  const auto equal_k = vertices_by_degree(g, DegreeRelation::Equal, k).mask(g.order());
  for_each_subset(g.order(), [&](const VertexSet& s) {
    // Regular witnesses are also Δ ≤ k witnesses, so one pass covers both.
    if (!check(g, s, at_most)) return true;
    const bool has_low = std::any_of(s.begin(), s.end(), [&](Vertex v) { return g.degree(v) <= k; });
    if (has_low) {
      ++audit.bounds_checked;
      if (s.size() > 2 * k + 1 || max_degree(g) > 3 * k) ++audit.bounds_violations;
    }
    if (!check(g, s, regular)) return true;
    ++audit.regular_witnesses;
    std::size_t inside = 0;
    for (const VertexSet& comp : components_within(g, s)) {
      if (!std::all_of(comp.begin(), comp.end(), [&](Vertex v) { return equal_k[v]; })) continue;
      ++inside;
      ++audit.regular_components;
      // (|S| - 1) / 2 must be a whole number and every member's degree in G[C].
      const bool odd = s.size() % 2 == 1;
      for (Vertex v : comp) {
        std::size_t d = 0;
        for (Vertex u : comp) d += (u != v && g.adjacent(u, v));
        if (!odd || 2 * d != s.size() - 1) {
          ++audit.regular_violations;
          break;
        }
      }
    }
    if (inside > 1) ++audit.regular_violations;
    return true;
  });
}

// --------------------------------------------------------- CLI processes

struct Process {
  int code;
  std::string out;
};

Process run_binary(const std::string& args) {
  const std::string cmd = std::string(SUBCOMP_BIN) + " " + args + " 2>/dev/null";
  Process p{-1, {}};
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return p;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) p.out.append(buf.data(), got);
  const int status = pclose(pipe);
  p.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return p;
}

std::string write_temp(const std::filesystem::path& dir, const std::string& name,
                       const std::string& text) {
  const auto path = dir / name;
  std::ofstream(path, std::ios::binary) << text;
  return path.string();
}

}  // namespace

int main() {
  Report report;
  const auto exhaustive = exhaustive_instances();
  const auto graphs = random_graphs();
  const auto randomized = random_instances(graphs);

  // 1. Exhaustive oracle equivalence.
  {
    const auto r = compare_with_oracle(exhaustive, false);
    std::ostringstream d;
    d << r.comparisons << " comparisons over 1024 graphs x k=0..4, " << r.mismatches
      << " mismatches, " << r.invalid_witnesses << " invalid witnesses, " << r.seconds << "s (budget "
      << kExhaustiveBudgetSeconds << "s)";
    report.line(1, "oracle equivalence, exhaustive n=5",
                r.mismatches == 0 && r.invalid_witnesses == 0 && r.seconds < kExhaustiveBudgetSeconds,
                d.str());
  }

  // 2. Randomized oracle equivalence with CLI verification of every witness.
  {
    const auto r = compare_with_oracle(randomized, true);
    std::ostringstream d;
    d << r.comparisons << " comparisons over 200 G(8,p) x k=0..5, " << r.mismatches
      << " mismatches, " << r.verify_failures << " witnesses rejected by verify, " << r.seconds
      << "s (budget " << kRandomBudgetSeconds << "s)";
    report.line(2, "oracle equivalence, randomized n=8",
                r.mismatches == 0 && r.invalid_witnesses == 0 && r.verify_failures == 0 &&
                    r.seconds < kRandomBudgetSeconds,
                d.str());
  }

  // 3. Degree after complementation: exact value and lower bound.
  {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> order(1, 12);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    std::size_t violations = 0, in_set = 0;
    for (int i = 0; i < 1000; ++i) {
      const std::size_t n = order(rng);
      const Graph g = testing::random_graph(n, density(rng), rng);
      const VertexSet s = testing::random_subset(n, rng);
      const auto v = static_cast<Vertex>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
      const std::size_t d = degree_after_complement(g, s, v);
      if (d != subgraph_complement(g, s).degree(v)) ++violations;
      if (s.contains(v)) {
        ++in_set;
        const long size = long(s.size()), dg = long(g.degree(v));
        if (long(d) < std::max(size - dg - 1, dg - (size - 1))) ++violations;
      } else if (d != g.degree(v)) {
        ++violations;
      }
    }
    report.line(3, "degree after complementation", violations == 0,
                "1000 triples (" + std::to_string(in_set) + " with v in S), " +
                    std::to_string(violations) + " violations");
  }

  // 4 and 5. Structure of every brute-force witness from criteria 1 and 2.
  {
    StructureAudit audit;
    for (const auto& inst : exhaustive) audit_witnesses(inst, audit);
    for (const auto& inst : randomized) audit_witnesses(inst, audit);
    report.line(4, "size and degree bounds for witnesses with a low-degree vertex",
                audit.bounds_violations == 0 && audit.bounds_checked > 0,
                std::to_string(audit.bounds_checked) + " witnesses checked, " +
                    std::to_string(audit.bounds_violations) + " violations");
    report.line(5, "regular components of k-regular witnesses",
                audit.regular_violations == 0 && audit.regular_witnesses > 0,
                std::to_string(audit.regular_witnesses) + " witnesses, " +
                    std::to_string(audit.regular_components) + " components inside V_{=k}, " +
                    std::to_string(audit.regular_violations) + " violations");
  }

  // 6. Approximation ratio.
  {
    std::size_t checked = 0, violations = 0, exact_runs = 0;
    auto audit = [&](const Graph& g) {
      const auto r = approx_min_max_degree(g);
      const std::size_t opt = brute_force_min_max_degree(g).value;
      ++checked;
      if (max_degree_after_complement(g, r.witness) != r.achieved_max_degree) ++violations;
      if (r.achieved_max_degree > 3 * opt) ++violations;
      if (r.exact) {
        ++exact_runs;
        if (r.achieved_max_degree != opt) ++violations;
      }
    };
    for (std::uint64_t code = 0; code < 1024; ++code) audit(testing::graph_from_code(5, code));
    for (const Graph& g : graphs) audit(g);
    report.line(6, "3-approximation of the minimum reachable max degree", violations == 0,
                std::to_string(checked) + " graphs (" + std::to_string(exact_runs) +
                    " exact exits), " + std::to_string(violations) + " violations");
  }

  // 7. Reduction equivalence at desk scale.
  {
    const auto start = Clock::now();
    const std::pair<std::string, Graph> sources[] = {
        {"C4", families::cycle(4)},
        {"C5", families::cycle(5)},
        {"prism", families::triangular_prism()},
    };
    std::size_t failures = 0, cases = 0, cliques_checked = 0, extracted = 0;
    std::ostringstream d;
    for (const auto& [name, g] : sources) {
      for (std::size_t k : {2u, 3u}) {
        ++cases;
        const auto inst = build_crg_reduction(g, k);
        if (!inst) {
          ++failures;
          continue;
        }
        const auto cliques = all_cliques(g, k);
        SolverOptions options;
        options.memoize = true;
        const auto solved = solve_max_deg_le(inst->g_prime, inst->k_prime, options);
        if (solved.outcome.answer != !cliques.empty()) ++failures;
        for (const VertexSet& c : cliques) {
          ++cliques_checked;
          if (!check(inst->g_prime, forward_witness(*inst, c),
                     TargetPredicate::max_deg_at_most(inst->k_prime)))
            ++failures;
        }
        if (solved.outcome.answer) {
          try {
            const VertexSet c = extract_clique(*inst, *solved.outcome.witness);
            if (c.size() != k || !is_clique(g, c)) ++failures;
            ++extracted;
          } catch (const std::exception&) {
            ++failures;
          }
        }
        d << name << "/k=" << k << ":" << (solved.outcome.answer ? "yes" : "no") << "("
          << solved.stats.nodes << " nodes) ";
      }
    }
    const double secs = seconds_since(start);
    d << "| " << cliques_checked << " forward witnesses, " << extracted << " extractions, "
      << failures << " failures, " << secs << "s (budget " << kReductionBudgetSeconds << "s)";
    report.line(7, "clique reduction equivalence", failures == 0 && cases == 6 &&
                                                      secs < kReductionBudgetSeconds,
                d.str());
  }

  // 8. Complement identity for the min-degree solver.
  {
    std::size_t checked = 0, mismatches = 0;
    for (std::uint64_t code = 0; code < 1024; ++code) {
      const Graph g = testing::graph_from_code(5, code);
      const Graph co = complement_graph(g);
      for (std::size_t k = 1; k <= 4; ++k) {
        ++checked;
        if (solve_min_deg_ge(g, k).outcome.answer != solve_max_deg_le(co, 5 - k - 1).outcome.answer)
          ++mismatches;
      }
    }
    report.line(8, "min-degree answers equal max-degree answers on the complement", mismatches == 0,
                std::to_string(checked) + " pairs, " + std::to_string(mismatches) + " mismatches");
  }

  // 9. Determinism, serialization round trips and exit codes of the real binary.
  {
    const auto dir = std::filesystem::temp_directory_path() / "subcomp_acceptance";
    std::filesystem::create_directories(dir);
    std::size_t nondeterministic = 0, roundtrip_failures = 0, exit_mismatches = 0;

    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> order(0, 30);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
      const std::string text = write_graph(testing::random_graph(order(rng), density(rng), rng));
      if (write_graph(parse_graph(text)) != text) ++roundtrip_failures;
    }

    const std::string c4iso = write_temp(dir, "c4iso.graph", "5 4\n0 1\n1 2\n2 3\n0 3\n");
    const std::string star = write_temp(dir, "star.graph", write_graph(families::star(5)));
    const std::string c4 = write_temp(dir, "c4.graph", write_graph(families::cycle(4)));
    const std::vector<std::string> fixed = {
        "maxdeg --k 1 --stats " + star,
        "mindeg --k 3 " + c4iso,
        "regular --k 2 --stats " + c4iso,
        "approx-maxdeg " + star,
        "brute --target regular --k 2 " + c4iso,
        "verify --target regular --k 2 --set 0,1,4 " + c4iso,
        "reduce --k 2 --out " + (dir / "c4k2").string() + " " + c4,
        "maxdeg --k 5 --stats " + (dir / "c4k2.graph").string(),
    };
    for (const auto& args : fixed) {
      const Process a = run_binary(args);
      const Process b = run_binary(args);
      const Process c = run_binary(args);
      if (a.out.empty() || a.out != b.out || a.out != c.out || a.code != b.code) ++nondeterministic;
    }

    std::size_t spot = 0;
    for (std::size_t i = 0; i < 50; ++i) {
      const Graph& g = graphs[i * 4];
      const std::size_t k = i % 6;
      const std::string path = write_temp(dir, "spot" + std::to_string(i) + ".graph", write_graph(g));
      const std::array<std::pair<const char*, TargetKind>, 3> cmds{
          {{"maxdeg", TargetKind::MaxDegAtMost},
           {"mindeg", TargetKind::MinDegAtLeast},
           {"regular", TargetKind::Regular}}};
      const auto& [cmd, kind] = cmds[i % 3];
      const Process p = run_binary(std::string(cmd) + " --k " + std::to_string(k) + " " + path);
      ++spot;
      const bool says_yes = p.out.find("\"answer\":\"yes\"") != std::string::npos;
      const bool expected = brute_force_solve(g, {kind, k}).answer;
      if (p.code != (says_yes ? 0 : 1) || says_yes != expected) ++exit_mismatches;
      if (says_yes) {
        const auto open = p.out.find("\"witness\":[") + 11;
        const std::string ids = p.out.substr(open, p.out.find(']', open) - open);
        const Process v = run_binary(std::string("verify --target ") + cmd + " --k " +
                                     std::to_string(k) + " --set '" + ids + "' " + path);
        if (v.code != 0) ++exit_mismatches;
      }
    }
    std::filesystem::remove_all(dir);
    report.line(9, "determinism and I/O",
                nondeterministic == 0 && roundtrip_failures == 0 && exit_mismatches == 0,
                std::to_string(fixed.size()) + " fixed commands x3 runs (" +
                    std::to_string(nondeterministic) + " differ), 100 round trips (" +
                    std::to_string(roundtrip_failures) + " differ), " + std::to_string(spot) +
                    " spot exit codes (" + std::to_string(exit_mismatches) + " wrong)");
  }

  std::cout << (report.all_pass() ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED") << std::endl;
  return report.all_pass() ? 0 : 1;
}
