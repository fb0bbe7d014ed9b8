#include "pathgraph/pathgraph.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <string>

#include "pathgraph/error.hpp"
#include "pathgraph/random.hpp"

namespace pathgraph {

PathGraph PathGraph::build(int n, Policy policy) {
  PathGraph g;
  g.n_ = n;
  g.labels_ = enumerate_paths(n, policy);
  g.order_.resize(g.labels_.size());
  std::iota(g.order_.begin(), g.order_.end(), VertexId{0});

  std::vector<std::vector<VertexId>> adjacency(g.labels_.size());
  for_each_index(policy, static_cast<std::int64_t>(g.labels_.size()), [&](std::int64_t i) {
    const auto v = static_cast<VertexId>(i);
    auto& list = adjacency[v];
    for (const SpanningPath& q : path_neighbors(g.labels_[v])) {
      const auto w = g.find(q);
      if (!w) throw Error(ErrorCode::InconsistentOutput, "neighbor path missing from enumeration");
      list.push_back(*w);
    }
  });
  g.graph_ = AbstractGraph::from_adjacency(std::move(adjacency));
  return g;
}

PathGraph PathGraph::from_parts(int n, std::vector<SpanningPath> labels, AbstractGraph graph) {
  check_supported(n);
  if (labels.size() != graph.vertex_count()) {
    throw Error(ErrorCode::MalformedLabels, "label count " + std::to_string(labels.size()) +
                                                " does not match vertex count " +
                                                std::to_string(graph.vertex_count()));
  }
  PathGraph g;
  g.n_ = n;
  g.labels_ = std::move(labels);
  g.graph_ = std::move(graph);
  g.order_.resize(g.labels_.size());
  std::iota(g.order_.begin(), g.order_.end(), VertexId{0});
  for (const auto& p : g.labels_) {
    if (p.points() != n) throw Error(ErrorCode::MalformedLabels, "label has wrong point count");
  }
  std::sort(g.order_.begin(), g.order_.end(), [&](VertexId x, VertexId y) {
    return g.labels_[x].edges() < g.labels_[y].edges();
  });
  for (std::size_t i = 1; i < g.order_.size(); ++i) {
    if (g.labels_[g.order_[i - 1]] == g.labels_[g.order_[i]]) {
      throw Error(ErrorCode::MalformedLabels,
                  "vertices " + std::to_string(g.order_[i - 1]) + " and " +
                      std::to_string(g.order_[i]) + " carry the same path");
    }
  }
  return g;
}

std::optional<VertexId> PathGraph::find(const EdgeSet& key) const {
  auto it = std::lower_bound(order_.begin(), order_.end(), key,
                             [&](VertexId v, const EdgeSet& k) { return labels_[v].edges() < k; });
  if (it == order_.end() || labels_[*it].edges() != key) return std::nullopt;
  return *it;
}

Anonymized anonymize(const AbstractGraph& g, std::uint64_t seed) {
  const auto perm = seeded_permutation(g.vertex_count(), seed);
  Anonymized out;
  out.graph = relabel(g, perm);
  out.secret.resize(perm.size());
  for (VertexId old = 0; old < perm.size(); ++old) out.secret[perm[old]] = old;
  return out;
}

std::vector<int> bfs_distances(const AbstractGraph& g, std::span<const VertexId> sources) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::vector<VertexId> frontier;
  for (const VertexId s : sources) {
    if (dist[s] < 0) {
      dist[s] = 0;
      frontier.push_back(s);
    }
  }
  // the frontier vector doubles as the FIFO queue
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const VertexId v = frontier[head];
    for (const VertexId w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        frontier.push_back(w);
      }
    }
  }
  return dist;
}

int diameter(const AbstractGraph& g, Policy policy) {
  const auto count = static_cast<std::int64_t>(g.vertex_count());
  std::vector<int> eccentricity(g.vertex_count(), 0);
  for_each_index(policy, count, [&](std::int64_t s) {
    const VertexId source = static_cast<VertexId>(s);
    const auto dist = bfs_distances(g, std::span<const VertexId>(&source, 1));
    int ecc = 0;
    for (const int d : dist) {
      if (d < 0) throw Error(ErrorCode::Disconnected, "graph is disconnected");
      ecc = std::max(ecc, d);
    }
    eccentricity[static_cast<std::size_t>(s)] = ecc;
  });
  return eccentricity.empty() ? 0 : *std::max_element(eccentricity.begin(), eccentricity.end());
}

StatsReport stats(const AbstractGraph& g, const StatsOptions& options) {
  StatsReport report;
  report.vertices = g.vertex_count();
  report.edges = g.edge_count();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const std::size_t d = g.degree(v);
    ++report.degree_histogram[d];
    report.max_degree = std::max(report.max_degree, d);
  }
  if (options.diameter) {
    if (g.vertex_count() > options.diameter_cap) {
      throw Error(ErrorCode::DiameterTooExpensive,
                  "diameter requested for N=" + std::to_string(g.vertex_count()) +
                      " above cap " + std::to_string(options.diameter_cap));
    }
    report.diameter = diameter(g, options.policy);
  }
  return report;
}

CliqueClassification classify_edge_cliques(const PathGraph& g, VertexId u, VertexId v) {
  const auto& graph = g.graph();
  if (u >= graph.vertex_count() || v >= graph.vertex_count() || !graph.adjacent(u, v)) {
    throw Error(ErrorCode::NotAnEdge,
                "(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
  }
  const EdgeSet& eu = g.label(u).edges();
  const EdgeSet& ev = g.label(v).edges();
  const EdgeSet common = eu & ev;
  const EdgeSet both = eu | ev;

  CliqueClassification out{2, 2};
  const auto nu = graph.neighbors(u);
  const auto nv = graph.neighbors(v);
  std::size_t i = 0, j = 0;
  while (i < nu.size() && j < nv.size()) {
    if (nu[i] < nv[j]) {
      ++i;
    } else if (nv[j] < nu[i]) {
      ++j;
    } else {
      const EdgeSet& ew = g.label(nu[i]).edges();
      const bool intersection_form = common.is_subset_of(ew);
      const bool union_form = ew.is_subset_of(both);
      if (intersection_form == union_form) {
        throw Error(ErrorCode::InconsistentOutput,
                    "common neighbor " + std::to_string(nu[i]) + " of (" + std::to_string(u) +
                        "," + std::to_string(v) + ") fits neither clique form uniquely");
      }
      ++(intersection_form ? out.intersection_size : out.union_size);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace pathgraph
