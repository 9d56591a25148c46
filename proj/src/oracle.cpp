#include "subcomp/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "subcomp/errors.hpp"

namespace subcomp {

bool TargetPredicate::accepts(std::span<const std::size_t> degrees) const {
  switch (kind) {
    case TargetKind::MaxDegAtMost:
      return std::all_of(degrees.begin(), degrees.end(), [&](std::size_t d) { return d <= k; });
    case TargetKind::MinDegAtLeast:
      return std::all_of(degrees.begin(), degrees.end(), [&](std::size_t d) { return d >= k; });
    case TargetKind::Regular:
      return std::all_of(degrees.begin(), degrees.end(), [&](std::size_t d) { return d == k; });
  }
  return false;
}

std::string_view to_string(TargetKind kind) {
  switch (kind) {
    case TargetKind::MaxDegAtMost: return "maxdeg";
    case TargetKind::MinDegAtLeast: return "mindeg";
    case TargetKind::Regular: return "regular";
  }
  return "";
}

std::optional<TargetKind> parse_target_kind(std::string_view text) {
  if (text == "maxdeg") return TargetKind::MaxDegAtMost;
  if (text == "mindeg") return TargetKind::MinDegAtLeast;
  if (text == "regular") return TargetKind::Regular;
  return std::nullopt;
}

bool check(const Graph& g, const VertexSet& s, const TargetPredicate& target) {
  return target.accepts(degrees_after_complement(g, s));
}

void for_each_subset(std::size_t n, const std::function<bool(const VertexSet&)>& visit,
                     const BruteForceOptions& options) {
  if (n > options.capacity)
    throw CapacityError("brute force refuses graphs with " + std::to_string(n) +
                        " vertices (capacity " + std::to_string(options.capacity) + ")");
  // Combinations of each size in lexicographic order: advance the rightmost
  // index that still has room, then reset everything after it.
  for (std::size_t size = 0; size <= n; ++size) {
    std::vector<Vertex> idx(size);
    std::iota(idx.begin(), idx.end(), Vertex{0});
    while (true) {
      if (!visit(VertexSet::from_sorted(idx))) return;
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
}

SolveOutcome brute_force_solve(const Graph& g, const TargetPredicate& target,
                               const BruteForceOptions& options) {
  SolveOutcome out;
  for_each_subset(
      g.order(),
      [&](const VertexSet& s) {
        ++out.nodes_explored;
        if (!check(g, s, target)) return true;
        out.answer = true;
        out.witness = s;
        return false;
      },
      options);
  return out;
}

MinMaxDegree brute_force_min_max_degree(const Graph& g, const BruteForceOptions& options) {
  MinMaxDegree best{max_degree(g), VertexSet{}};
  for_each_subset(
      g.order(),
      [&](const VertexSet& s) {
        const std::size_t d = max_degree_after_complement(g, s);
        if (d < best.value) best = {d, s};
        return best.value > 0;
      },
      options);
  return best;
}

}  // namespace subcomp
