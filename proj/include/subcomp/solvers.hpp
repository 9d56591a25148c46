#pragma once

#include <cstddef>
#include <functional>
#include <optional>

#include "subcomp/graph.hpp"
#include "subcomp/oracle.hpp"
#include "subcomp/vertex_set.hpp"

namespace subcomp {

/// Search-tree counters reported by the branching solvers. They carry no
/// correctness weight.
struct BranchStats {
  std::size_t nodes = 0;
  /// Vertices added below the root along the deepest explored path.
  std::size_t max_depth = 0;
  std::size_t pruned_by_size = 0;
  std::size_t pruned_by_maxdeg = 0;
  std::size_t memo_hits = 0;
};

struct SolverOptions {
  /// Skip search nodes whose vertex set was already fully explored.
  bool memoize = true;
  /// Explore root branches on worker threads. The answer is unchanged but the
  /// witness is only guaranteed to be valid, not the first in DFS order.
  bool parallel = false;
  /// Called with every vertex set the search visits (sequential mode only).
  std::function<void(const VertexSet&)> on_node;
};

struct SolveReport {
  SolveOutcome outcome;
  BranchStats stats;
};

/// S = N[0]: isolates vertex 0, so δ(G ⊕ S) = 0 ≤ k. Throws PreconditionError on n = 0.
VertexSet trivial_low_min_degree_witness(const Graph& g, std::size_t k);

/// S = V ∖ N(0): makes vertex 0 universal, so Δ(G ⊕ S) = n-1 ≥ k.
/// Empty when k > n-1.
std::optional<VertexSet> trivial_high_max_degree_witness(const Graph& g, std::size_t k);

/// Exact decision for "is there S with Δ(G ⊕ S) ≤ k".
///
/// Every solution contains V_{>k}, since complementation cannot change the
/// degree of a vertex outside S. If V_{>k} alone does not work, any solution
/// also contains a vertex of degree ≤ k, which bounds |S| ≤ 2k+1 and
/// Δ(G) ≤ 3k. The search starts from V_{>k} and repeatedly takes the
/// smallest vertex still over the bound, branching on each of its neighbors
/// outside S (adding a neighbor is the only way to lower its degree).
SolveReport solve_max_deg_le(const Graph& g, std::size_t k, const SolverOptions& options = {});

/// Exact decision for "is there S with δ(G ⊕ S) ≥ k", via the complement
/// instance (Ḡ, n-k-1): δ(H) = n-1-Δ(H̄) and Ḡ ⊕ S is the complement of G ⊕ S.
/// Runs in time FPT in n-k-1.
SolveReport solve_min_deg_ge(const Graph& g, std::size_t k, const SolverOptions& options = {});

struct ApproxResult {
  std::size_t achieved_max_degree = 0;
  VertexSet witness;
  /// Loop threshold at exit; OPT ≥ lower_bound_k.
  std::size_t lower_bound_k = 0;
  /// True when the exit threshold passed its V_{>k} test, in which case the
  /// result is optimal.
  bool exact = false;
};

/// 3-approximation of min over S of Δ(G ⊕ S). Throws PreconditionError on n = 0.
ApproxResult approx_min_max_degree(const Graph& g);

/// Looks for a non-empty C, disjoint from N[S'], with |C| ≤ k and
/// G ⊕ (S' ∪ C) k-regular. Candidates are the subsets of B_{k-1}(v) ∖ N[S']
/// whose minimum is v, for each eligible v in increasing order, each in
/// size-then-lex order.
///
/// Requires |S'| ≤ k, Δ(G) ≤ 3k and that every component of G[S'] meets
/// V_{≠k}; throws PreconditionError otherwise.
std::optional<VertexSet> find_regular_extension(const Graph& g, const VertexSet& s_prime,
                                                std::size_t k);

/// Exact decision for "is there S with G ⊕ S k-regular".
SolveReport solve_k_regular(const Graph& g, std::size_t k, const SolverOptions& options = {});

}  // namespace subcomp
