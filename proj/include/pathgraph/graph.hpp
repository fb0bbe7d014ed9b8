#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace pathgraph {

using VertexId = std::uint32_t;

/// Simple undirected graph over opaque ids 0..N-1 in compressed sparse row
/// form. Neighbor lists are sorted. Carries no labels.
class AbstractGraph {
 public:
  AbstractGraph() = default;

  /// Throws MalformedGraph on out-of-range ids, self loops, duplicate edges
  /// or asymmetric adjacency.
  static AbstractGraph from_adjacency(std::vector<std::vector<VertexId>> adjacency);

  /// Edges may be given in either orientation. Throws MalformedGraph on
  /// out-of-range ids, self loops or duplicates.
  static AbstractGraph from_edges(std::size_t vertex_count,
                                  std::span<const std::pair<VertexId, VertexId>> edges);

  std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return targets_.size() / 2; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(VertexId u, VertexId v) const;

  /// Edges (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<VertexId, VertexId>> edge_list() const;

  bool operator==(const AbstractGraph&) const = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> targets_;
};

/// Image of g under the vertex relabeling old -> new_id_of_old[old].
AbstractGraph relabel(const AbstractGraph& g, std::span<const VertexId> new_id_of_old);

/// Sorted intersection size of two neighbor lists, restricted to vertices
/// for which `keep` is true.
template <class Pred>
std::size_t count_common(std::span<const VertexId> x, std::span<const VertexId> y, Pred keep) {
  std::size_t i = 0, j = 0, count = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i] < y[j]) {
      ++i;
    } else if (y[j] < x[i]) {
      ++j;
    } else {
      if (keep(x[i])) ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

}  // namespace pathgraph
