#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace subcomp {

using Vertex = std::uint32_t;

/// A set of vertex ids kept in strictly increasing order.
///
/// The canonical order is what makes equality, hashing and every printed
/// witness deterministic, so all set-valued results in the library are
/// VertexSets rather than raw vectors.
class VertexSet {
 public:
  using const_iterator = std::vector<Vertex>::const_iterator;

  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids) : VertexSet(std::vector<Vertex>(ids)) {}
  explicit VertexSet(std::vector<Vertex> ids) : members_(std::move(ids)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  /// Builds from ids already strictly increasing; skips the sort.
  static VertexSet from_sorted(std::vector<Vertex> ids) {
    VertexSet s;
    s.members_ = std::move(ids);
    return s;
  }

  /// The set {0, 1, ..., n-1}.
  static VertexSet range(std::size_t n) {
    std::vector<Vertex> ids(n);
    for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<Vertex>(i);
    return from_sorted(std::move(ids));
  }

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const_iterator begin() const noexcept { return members_.begin(); }
  const_iterator end() const noexcept { return members_.end(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }
  Vertex front() const { return members_.front(); }
  Vertex back() const { return members_.back(); }
  std::span<const Vertex> ids() const noexcept { return members_; }

  bool contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
  }

  /// Returns a copy with `v` added.
  VertexSet with(Vertex v) const {
    VertexSet out = *this;
    auto it = std::lower_bound(out.members_.begin(), out.members_.end(), v);
    if (it == out.members_.end() || *it != v) out.members_.insert(it, v);
    return out;
  }

  /// Membership mask of length n; ids >= n are ignored.
  std::vector<char> mask(std::size_t n) const {
    std::vector<char> m(n, 0);
    for (Vertex v : members_)
      if (v < n) m[v] = 1;
    return m;
  }

  /// Comma-separated ids, e.g. "0,3,7".
  std::string to_string() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);

}  // namespace subcomp

template <>
struct std::hash<subcomp::VertexSet> {
  std::size_t operator()(const subcomp::VertexSet& s) const noexcept {
    std::size_t seed = s.size();
    for (subcomp::Vertex v : s) seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    return seed;
  }
};
