#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "pathgraph/execution.hpp"
#include "pathgraph/graph.hpp"
#include "pathgraph/paths.hpp"

namespace pathgraph {

/// The labeled path graph: vertex i is the i-th spanning path in edge-mask
/// order, adjacent to every path differing from it in exactly two edges.
class PathGraph {
 public:
  /// Enumerates all paths and generates each vertex's neighbors directly.
  static PathGraph build(int n, Policy policy = Policy::Parallel);

  /// Pairs arbitrary labels with a graph (e.g. read back from files). Labels
  /// must be distinct paths on n points; adjacency is not checked.
  static PathGraph from_parts(int n, std::vector<SpanningPath> labels, AbstractGraph graph);

  int points() const { return n_; }
  std::size_t vertex_count() const { return labels_.size(); }
  const AbstractGraph& graph() const { return graph_; }
  const SpanningPath& label(VertexId v) const { return labels_[v]; }
  std::span<const SpanningPath> labels() const { return labels_; }

  std::optional<VertexId> find(const EdgeSet& key) const;
  std::optional<VertexId> find(const SpanningPath& p) const { return find(p.edges()); }

 private:
  int n_ = 0;
  std::vector<SpanningPath> labels_;
  // order_[i] is the vertex holding the i-th smallest key
  std::vector<VertexId> order_;
  AbstractGraph graph_;
};

struct Anonymized {
  AbstractGraph graph;
  // secret[abstract id] = original id
  std::vector<VertexId> secret;
};

/// Relabels vertices by seeded_permutation(N, seed).
Anonymized anonymize(const AbstractGraph& g, std::uint64_t seed);

struct StatsOptions {
  bool diameter = false;
  std::size_t diameter_cap = 10000;
  Policy policy = Policy::Parallel;
};

struct StatsReport {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::map<std::size_t, std::size_t> degree_histogram;
  std::size_t max_degree = 0;
  std::optional<int> diameter;
};

/// Throws DiameterTooExpensive if a diameter is requested above the cap, and
/// Disconnected if the graph is not connected.
StatsReport stats(const AbstractGraph& g, const StatsOptions& options = {});

/// Exact diameter by breadth-first search from every vertex.
int diameter(const AbstractGraph& g, Policy policy = Policy::Parallel);

/// Breadth-first distances from a set of sources; -1 for unreachable.
std::vector<int> bfs_distances(const AbstractGraph& g, std::span<const VertexId> sources);

struct CliqueClassification {
  int intersection_size = 0;
  int union_size = 0;
};

/// Sizes of I(u,v) = {w : w = (u & v) + e} and U(u,v) = {w : w = (u | v) - e}
/// through the edge (u, v). Every common neighbor must fall into exactly one
/// of them. Throws NotAnEdge.
CliqueClassification classify_edge_cliques(const PathGraph& g, VertexId u, VertexId v);

}  // namespace pathgraph
