#pragma once

// Recovery of every vertex's spanning path from the bare path graph, unique
// up to a symmetry of the n-gon.
//
// Pipeline (each stage throws ReconstructError tagged with its name):
//   infer_n -> find_boundary_vertices -> build_boundary_cycle -> fix_gauge
//   -> compute_levels -> recover_boundary_sets -> level 0 and 1 paths
//   -> levels >= 2 via recover_leaf + complete_path -> check_output

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "pathgraph/edge_set.hpp"
#include "pathgraph/execution.hpp"
#include "pathgraph/graph.hpp"
#include "pathgraph/paths.hpp"

namespace pathgraph {

/// A maximal run of consecutive boundary edges, from `first` counterclockwise
/// to `last`. Degenerate arcs hold a single point.
struct BoundaryArc {
  PointId first = 0;
  PointId last = 0;
  int edges = 0;

  bool degenerate() const { return edges == 0; }
  bool operator==(const BoundaryArc&) const = default;
};

/// Bijection between the recovered boundary cycle and the boundary edges:
/// cycle[i] is the boundary vertex whose path omits edge (i, i+1 mod n).
struct Gauge {
  std::vector<VertexId> cycle;

  int points() const { return static_cast<int>(cycle.size()); }
  bool operator==(const Gauge&) const = default;
};

/// Per-vertex records filled stage by stage.
struct ReconState {
  int n = 0;
  std::vector<VertexId> boundary;  // the set B, sorted
  Gauge gauge;
  std::vector<int> level;
  std::vector<BoundaryMask> brecord;  // boundary edges present in P(v)
  std::vector<std::pair<PointId, PointId>> endpoints;
  std::vector<SpanningPath> path;
};

struct ReconOptions {
  Policy policy = Policy::Parallel;
  // Also run the n-BFS reference boundary-set method and require agreement.
  bool cross_check_boundary_sets = false;
  // Verify that the recovered labels regenerate the input adjacency.
  bool check_output = true;
};

struct ReconResult {
  int n = 0;
  Gauge gauge;
  std::vector<SpanningPath> paths;  // indexed by abstract vertex id
  std::vector<int> level;
  // Neighbor-record reads times record width; a proxy for running time.
  std::uint64_t work = 0;
};

/// The unique n >= 5 with n * 2^(n-3) == vertex_count.
int infer_n(std::size_t vertex_count);

/// Vertices of degree 3n-7; exactly n of them, with every other degree
/// strictly smaller.
std::vector<VertexId> find_boundary_vertices(const AbstractGraph& g, int n);

/// Orders B into a cycle where consecutive vertices have no common neighbor
/// outside B (their omitted boundary edges share a point).
std::vector<VertexId> build_boundary_cycle(const AbstractGraph& g,
                                           std::span<const VertexId> boundary);

/// Canonical gauge: the smallest id omits (0,1), its smaller-id cycle
/// neighbor omits (1,2), and so on around the cycle.
Gauge fix_gauge(std::span<const VertexId> cycle);

/// Multi-source BFS distance to B, which equals the number of diagonals.
std::vector<int> compute_levels(const AbstractGraph& g, std::span<const VertexId> boundary, int n);

/// Boundary sets by intersecting B(u) over lower-level neighbors u, level by
/// level. `work` accumulates the record reads.
std::vector<BoundaryMask> recover_boundary_sets_fast(const AbstractGraph& g,
                                                     std::span<const int> level, const Gauge& gauge,
                                                     Policy policy = Policy::Parallel,
                                                     std::uint64_t* work = nullptr);

/// Boundary sets from n BFS runs: the missing edges of a level-d vertex v
/// are e_w for the boundary vertices w at distance exactly d.
std::vector<BoundaryMask> recover_boundary_sets_reference(const AbstractGraph& g,
                                                          std::span<const int> level,
                                                          const Gauge& gauge,
                                                          Policy policy = Policy::Parallel);

/// Maximal runs of present boundary edges in counterclockwise order,
/// starting with the arc after the lowest missing edge. `present` must miss
/// at least one edge.
std::vector<BoundaryArc> arc_decomposition(BoundaryMask present, int n);

/// The unique non-crossing spanning path whose boundary edges are exactly
/// the arcs and which has `leaf` as an endpoint. Throws NoCompletion or
/// AmbiguousCompletion.
SpanningPath complete_path(std::span<const BoundaryArc> arcs, PointId leaf, int n);

/// Distinct completions over every admissible leaf; at most arcs.size().
std::vector<SpanningPath> all_completions(std::span<const BoundaryArc> arcs, int n);

/// Full path of a level-1 vertex. Needs B(v') for its level-2 neighbors.
SpanningPath recover_level1(const AbstractGraph& g, const ReconState& state, VertexId v);

/// A leaf of P(v) for level >= 2. Needs records (boundary set and endpoints)
/// of all level(v)-1 neighbors.
PointId recover_leaf(const AbstractGraph& g, const ReconState& state, VertexId v);

/// Runs the full pipeline on an anonymized path graph.
ReconResult reconstruct_all(const AbstractGraph& g, const ReconOptions& options = {});

}  // namespace pathgraph
