#include <algorithm>
#include <atomic>
#include <numeric>
#include <string>
#include <unordered_set>

#include "parallel_roots.hpp"
#include "subcomp/errors.hpp"
#include "subcomp/solvers.hpp"

namespace subcomp {

namespace {

void require_extension_preconditions(const Graph& g, const VertexSet& s_prime, std::size_t k) {
  require_subset(g, s_prime);
  if (s_prime.size() > k)
    throw PreconditionError("extension search needs |S'| <= k, got |S'| = " +
                            std::to_string(s_prime.size()) + ", k = " + std::to_string(k));
  if (max_degree(g) > 3 * k)
    throw PreconditionError("extension search needs max degree <= 3k");
  const auto off_degree = vertices_by_degree(g, DegreeRelation::NotEqual, k).mask(g.order());
  for (const VertexSet& comp : components_within(g, s_prime)) {
    if (std::none_of(comp.begin(), comp.end(), [&](Vertex v) { return off_degree[v]; }))
      throw PreconditionError("component {" + comp.to_string() +
                              "} of G[S'] has no vertex of degree != k");
  }
}

class RegularSearch {
 public:
  RegularSearch(const Graph& g, std::size_t k, const SolverOptions& options,
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

    if (check(g_, s, TargetPredicate::regular(k_))) return s;
    if (s.size() <= k_) {
      if (auto extension = find_regular_extension(g_, s, k_)) return set_union(s, *extension);
    }
    if (s.size() >= 2 * k_ + 1) {
      ++stats_.pruned_by_size;
      return std::nullopt;
    }
    for (const VertexSet& child : children(s))
      if (auto found = explore(child)) return found;
    return std::nullopt;
  }

  std::vector<VertexSet> children(const VertexSet& s) const {
    std::vector<VertexSet> out;
    for (Vertex v : open_neighborhood(g_, s)) out.push_back(s.with(v));
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

}  // namespace

std::optional<VertexSet> find_regular_extension(const Graph& g, const VertexSet& s_prime,
                                                std::size_t k) {
  require_extension_preconditions(g, s_prime, k);
  if (k == 0) return std::nullopt;

  const auto blocked = closed_neighborhood(g, s_prime).mask(g.order());
  const TargetPredicate target = TargetPredicate::regular(k);

  for (Vertex v = 0; v < g.order(); ++v) {
    if (blocked[v]) continue;
    // Members other than v: unblocked ball vertices above v, so v = min(C).
    std::vector<Vertex> pool;
    for (Vertex u : ball(g, v, k - 1))
      if (u > v && !blocked[u]) pool.push_back(u);

    const std::size_t max_extra = std::min(k - 1, pool.size());
    for (std::size_t extra = 0; extra <= max_extra; ++extra) {
      std::vector<std::size_t> idx(extra);
      std::iota(idx.begin(), idx.end(), std::size_t{0});
      while (true) {
        std::vector<Vertex> members{v};
        for (std::size_t i : idx) members.push_back(pool[i]);
        VertexSet c = VertexSet::from_sorted(std::move(members));
        if (check(g, set_union(s_prime, c), target)) return c;

        std::size_t i = extra;
        while (i > 0 && idx[i - 1] == pool.size() - extra + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < extra; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
  }
  return std::nullopt;
}

SolveReport solve_k_regular(const Graph& g, std::size_t k, const SolverOptions& options) {
  SolveReport report;
  BranchStats& stats = report.stats;
  stats.nodes = 1;

  if (is_regular(g, k)) {
    report.outcome = SolveOutcome::yes(VertexSet{}, 1);
    return report;
  }
  if (k >= g.order()) {
    report.outcome = SolveOutcome::no(1);
    return report;
  }

  // Every solution contains V_{≠k}. Try it on its own before the Δ cut: the
  // cut is only sound for witnesses holding a vertex of degree ≤ k.
  const VertexSet root = vertices_by_degree(g, DegreeRelation::NotEqual, k);
  if (check(g, root, TargetPredicate::regular(k))) {
    report.outcome = SolveOutcome::yes(root, 1);
    return report;
  }
  if (max_degree(g) > 3 * k) {
    ++stats.pruned_by_maxdeg;
    report.outcome = SolveOutcome::no(1);
    return report;
  }

  std::optional<VertexSet> found;
  if (!options.parallel) {
    RegularSearch search(g, k, options, root.size());
    found = search.explore(root);
    stats = search.stats();
  } else {
    // The root node's own steps run here; only its children are raced.
    const SolverOptions head_options;
    RegularSearch head(g, k, head_options, root.size());
    if (root.size() <= k) found = [&]() -> std::optional<VertexSet> {
      if (auto c = find_regular_extension(g, root, k)) return set_union(root, *c);
      return std::nullopt;
    }();
    if (!found && root.size() < 2 * k + 1) {
      std::mutex mu;
      found = detail::race_children(
          head.children(root), [&](const VertexSet& child, const std::atomic<bool>& stop) {
            RegularSearch search(g, k, options, child.size(), &stop);
            auto result = search.explore(child);
            std::lock_guard lock(mu);
            stats.nodes += search.stats().nodes;
            stats.max_depth = std::max(stats.max_depth, search.stats().max_depth + 1);
            stats.pruned_by_size += search.stats().pruned_by_size;
            stats.memo_hits += search.stats().memo_hits;
            return result;
          });
    } else if (!found) {
      ++stats.pruned_by_size;
    }
  }
  report.outcome = found ? SolveOutcome::yes(std::move(*found), stats.nodes)
                         : SolveOutcome::no(stats.nodes);
  return report;
}

}  // namespace subcomp
