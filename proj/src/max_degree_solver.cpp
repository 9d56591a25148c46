#include <algorithm>
#include <atomic>
#include <unordered_set>

#include "parallel_roots.hpp"
#include "subcomp/errors.hpp"
#include "subcomp/solvers.hpp"

namespace subcomp {

namespace {

class MaxDegreeSearch {
 public:
  MaxDegreeSearch(const Graph& g, std::size_t k, const SolverOptions& options,
                  std::size_t root_size, const std::atomic<bool>* stop = nullptr)
      : g_(g), k_(k), options_(options), root_size_(root_size), stop_(stop) {}

  std::optional<VertexSet> explore(const VertexSet& s) {
    if (stop_ && stop_->load(std::memory_order_relaxed)) return std::nullopt;
    if (options_.memoize && !visited_.insert(s).second) {
      ++stats_.memo_hits;
      return std::nullopt;
    }
    ++stats_.nodes;
    stats_.max_depth = std::max(stats_.max_depth, s.size() - root_size_);
    if (options_.on_node && !stop_) options_.on_node(s);

    const Violations bad = violations(s);
    if (!bad.inside && !bad.outside) return s;
    if (bad.outside) {
      // Degrees outside S are fixed; nothing added later can repair this.
      ++stats_.pruned_by_maxdeg;
      return std::nullopt;
    }
    if (s.size() >= 2 * k_ + 1) {
      ++stats_.pruned_by_size;
      return std::nullopt;
    }
    for (const VertexSet& child : children(s, *bad.inside))
      if (auto found = explore(child)) return found;
    return std::nullopt;
  }

  struct Violations {
    std::optional<Vertex> inside;  // smallest v ∈ S with degree > k in G ⊕ S
    bool outside = false;          // some v ∉ S has degree > k
  };

  Violations violations(const VertexSet& s) const {
    const auto deg = degrees_after_complement(g_, s);
    Violations out;
    for (Vertex v = 0; v < deg.size(); ++v) {
      if (deg[v] <= k_) continue;
      if (!s.contains(v))
        out.outside = true;
      else if (!out.inside)
        out.inside = v;
    }
    return out;
  }

  std::vector<VertexSet> children(const VertexSet& s, Vertex violator) const {
    std::vector<VertexSet> out;
    for (Vertex w : g_.neighbors(violator))
      if (!s.contains(w)) out.push_back(s.with(w));
    return out;
  }

  const BranchStats& stats() const { return stats_; }

 private:
  const Graph& g_;
  std::size_t k_;
  const SolverOptions& options_;
  std::size_t root_size_;
  const std::atomic<bool>* stop_;
  std::unordered_set<VertexSet> visited_;
  BranchStats stats_;
};

void accumulate(BranchStats& into, const BranchStats& from, std::size_t depth_offset) {
  into.nodes += from.nodes;
  into.max_depth = std::max(into.max_depth, from.max_depth + depth_offset);
  into.pruned_by_size += from.pruned_by_size;
  into.pruned_by_maxdeg += from.pruned_by_maxdeg;
  into.memo_hits += from.memo_hits;
}

}  // namespace

VertexSet trivial_low_min_degree_witness(const Graph& g, std::size_t /*k*/) {
  if (g.order() == 0) throw PreconditionError("the empty graph has no vertex to isolate");
  return closed_neighborhood(g, Vertex{0});
}

std::optional<VertexSet> trivial_high_max_degree_witness(const Graph& g, std::size_t k) {
  if (g.order() == 0 || k > g.order() - 1) return std::nullopt;
  return set_difference(VertexSet::range(g.order()), open_neighborhood(g, Vertex{0}));
}

SolveReport solve_max_deg_le(const Graph& g, std::size_t k, const SolverOptions& options) {
  SolveReport report;
  BranchStats& stats = report.stats;

  const VertexSet forced = vertices_by_degree(g, DegreeRelation::Greater, k);
  stats.nodes = 1;
  if (max_degree_after_complement(g, forced) <= k) {
    report.outcome = SolveOutcome::yes(forced, stats.nodes);
    return report;
  }
  // From here any solution strictly contains V_{>k}, so it holds a vertex of
  // degree ≤ k and must satisfy |S| ≤ 2k+1 and Δ(G) ≤ 3k.
  if (max_degree(g) > 3 * k) {
    ++stats.pruned_by_maxdeg;
    report.outcome = SolveOutcome::no(stats.nodes);
    return report;
  }
  if (forced.size() > 2 * k) {
    ++stats.pruned_by_size;
    report.outcome = SolveOutcome::no(stats.nodes);
    return report;
  }

  std::optional<VertexSet> found;
  if (!options.parallel) {
    MaxDegreeSearch search(g, k, options, forced.size());
    found = search.explore(forced);
    stats = search.stats();
  } else {
    MaxDegreeSearch root(g, k, options, forced.size());
    const auto kids = root.children(forced, *root.violations(forced).inside);
    std::mutex mu;
    found = detail::race_children(kids, [&](const VertexSet& child, const std::atomic<bool>& stop) {
      MaxDegreeSearch search(g, k, options, child.size(), &stop);
      auto result = search.explore(child);
      std::lock_guard lock(mu);
      accumulate(stats, search.stats(), 1);
      return result;
    });
  }
  report.outcome = found ? SolveOutcome::yes(std::move(*found), stats.nodes)
                         : SolveOutcome::no(stats.nodes);
  return report;
}

SolveReport solve_min_deg_ge(const Graph& g, std::size_t k, const SolverOptions& options) {
  SolveReport report;
  report.stats.nodes = 1;
  const std::size_t n = g.order();
  // The order-0 graph satisfies δ ≥ k vacuously.
  if (k == 0 || n == 0) {
    report.outcome = SolveOutcome::yes(VertexSet{}, 1);
    return report;
  }
  if (k > n - 1) {
    report.outcome = SolveOutcome::no(1);
    return report;
  }
  return solve_max_deg_le(complement_graph(g), n - k - 1, options);
}

ApproxResult approx_min_max_degree(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) throw PreconditionError("approximation needs at least one vertex");
  const std::size_t delta = max_degree(g);
  for (std::size_t k = 0; k < n; ++k) {
    VertexSet forced = vertices_by_degree(g, DegreeRelation::Greater, k);
    const std::size_t achieved = max_degree_after_complement(g, forced);
    if (achieved <= k) return {achieved, std::move(forced), k, true};
    if (delta > 3 * k) continue;
    return {delta, VertexSet{}, k, false};
  }
  // k = n-1 always passes: V_{>n-1} is empty and Δ(G) ≤ n-1.
  throw InternalInconsistency("approximation loop ran past n-1");
}

}  // namespace subcomp
