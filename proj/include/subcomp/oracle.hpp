#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "subcomp/graph.hpp"
#include "subcomp/vertex_set.hpp"

namespace subcomp {

enum class TargetKind { MaxDegAtMost, MinDegAtLeast, Regular };

/// The target class of a complementation problem: Δ ≤ k, δ ≥ k, or k-regular.
struct TargetPredicate {
  TargetKind kind = TargetKind::MaxDegAtMost;
  std::size_t k = 0;

  static TargetPredicate max_deg_at_most(std::size_t k) { return {TargetKind::MaxDegAtMost, k}; }
  static TargetPredicate min_deg_at_least(std::size_t k) { return {TargetKind::MinDegAtLeast, k}; }
  static TargetPredicate regular(std::size_t k) { return {TargetKind::Regular, k}; }

  /// Whether a degree sequence satisfies the predicate.
  bool accepts(std::span<const std::size_t> degrees) const;

  friend bool operator==(const TargetPredicate&, const TargetPredicate&) = default;
};

/// Short name used on the command line and in JSON: maxdeg, mindeg, regular.
std::string_view to_string(TargetKind kind);
std::optional<TargetKind> parse_target_kind(std::string_view text);

/// Yes/no answer of a decision procedure. A yes always carries a witness.
struct SolveOutcome {
  bool answer = false;
  std::optional<VertexSet> witness;
  std::size_t nodes_explored = 0;

  static SolveOutcome yes(VertexSet w, std::size_t nodes) { return {true, std::move(w), nodes}; }
  static SolveOutcome no(std::size_t nodes) { return {false, std::nullopt, nodes}; }
};

/// True iff G ⊕ S satisfies `target`. Throws GraphError on an out-of-range member.
bool check(const Graph& g, const VertexSet& s, const TargetPredicate& target);

struct BruteForceOptions {
  /// Largest order the enumeration will accept.
  std::size_t capacity = 25;
};

/// Enumerates every S ⊆ V(G) by increasing size, lexicographic within a size,
/// and returns the first one that satisfies `target`. The returned witness is
/// therefore a minimum-cardinality one. Throws CapacityError when
/// g.order() > options.capacity.
SolveOutcome brute_force_solve(const Graph& g, const TargetPredicate& target,
                               const BruteForceOptions& options = {});

/// Calls `visit` for every S in size-then-lex order until it returns false.
/// Same capacity guard as brute_force_solve.
void for_each_subset(std::size_t n, const std::function<bool(const VertexSet&)>& visit,
                     const BruteForceOptions& options = {});

/// min over all S of Δ(G ⊕ S), together with the first S attaining it.
struct MinMaxDegree {
  std::size_t value = 0;
  VertexSet witness;
};
MinMaxDegree brute_force_min_max_degree(const Graph& g, const BruteForceOptions& options = {});

}  // namespace subcomp
