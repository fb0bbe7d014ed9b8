#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pathgraph/edge_set.hpp"
#include "pathgraph/execution.hpp"
#include "pathgraph/geometry.hpp"

namespace pathgraph {

/// A non-crossing Hamiltonian path on the n convex points, stored in
/// canonical orientation (first point < last point) together with its edge
/// mask.
class SpanningPath {
 public:
  SpanningPath() = default;

  /// Validating constructor. Throws NotPermutation or CrossingEdges.
  static SpanningPath from_sequence(std::span<const PointId> seq, int n);

  /// Skips validation; the caller guarantees `seq` is a non-crossing
  /// permutation of 0..n-1.
  static SpanningPath from_trusted(std::span<const PointId> seq, int n);

  int points() const { return n_; }
  PointId at(int i) const { return seq_[static_cast<std::size_t>(i)]; }
  std::vector<PointId> sequence() const;

  /// Path edges in traversal order (not canonical rank order).
  std::vector<Edge> edge_list() const;

  const EdgeSet& edges() const { return edges_; }
  BoundaryMask boundary_mask() const { return boundary_; }

  /// Number of diagonals.
  int level() const;

  std::pair<PointId, PointId> endpoints() const { return {at(0), at(n_ - 1)}; }
  bool is_leaf(PointId p) const { return p == at(0) || p == at(n_ - 1); }

  bool operator==(const SpanningPath& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  int n_ = 0;
  std::array<std::uint8_t, kMaxPoints> seq_{};
  EdgeSet edges_;
  BoundaryMask boundary_ = 0;
};

/// Apply a symmetry of the n-gon; the image is re-canonicalized.
SpanningPath apply(const Dihedral& g, const SpanningPath& p);

/// Validate a point sequence; alias for SpanningPath::from_sequence.
SpanningPath validate_path(std::span<const PointId> seq, int n);

/// Throws UnsupportedN unless kMinPoints <= n <= kMaxPoints.
void check_supported(int n);

/// n * 2^(n-3).
std::uint64_t path_count(int n);

/// Every non-crossing spanning path, sorted by edge mask. Extends paths by
/// consuming one extreme of the contiguous interval of unvisited points.
std::vector<SpanningPath> enumerate_paths(int n, Policy policy = Policy::Parallel);

/// All valid paths differing from `p` in exactly two edges, sorted by mask.
/// Generated by deleting each edge and trying the reconnecting edges.
std::vector<SpanningPath> path_neighbors(const SpanningPath& p);

/// Same as path_neighbors(p).size(), without materializing the paths.
int count_path_neighbors(const SpanningPath& p);

/// k + l where the path starts with k-1 and ends with l-1 boundary edges;
/// nullopt when the path has fewer than two diagonals.
std::optional<int> path_type(const SpanningPath& p);

}  // namespace pathgraph
