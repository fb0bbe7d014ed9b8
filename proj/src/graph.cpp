#include "pathgraph/graph.hpp"

#include <algorithm>
#include <string>

#include "pathgraph/error.hpp"

namespace pathgraph {

AbstractGraph AbstractGraph::from_adjacency(std::vector<std::vector<VertexId>> adjacency) {
  const std::size_t n = adjacency.size();
  AbstractGraph g;
  g.offsets_.reserve(n + 1);
  g.offsets_.push_back(0);
  for (std::size_t v = 0; v < n; ++v) {
    auto& list = adjacency[v];
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw Error(ErrorCode::MalformedGraph, "duplicate neighbor of vertex " + std::to_string(v));
    }
    for (const VertexId w : list) {
      if (w >= n) throw Error(ErrorCode::MalformedGraph, "neighbor id out of range");
      if (w == v) throw Error(ErrorCode::MalformedGraph, "self loop at " + std::to_string(v));
    }
    g.targets_.insert(g.targets_.end(), list.begin(), list.end());
    g.offsets_.push_back(g.targets_.size());
  }
  for (VertexId v = 0; v < n; ++v) {
    for (const VertexId w : g.neighbors(v)) {
      if (!g.adjacent(w, v)) {
        throw Error(ErrorCode::MalformedGraph, "asymmetric adjacency between " +
                                                   std::to_string(v) + " and " + std::to_string(w));
      }
    }
  }
  return g;
}

AbstractGraph AbstractGraph::from_edges(std::size_t vertex_count,
                                        std::span<const std::pair<VertexId, VertexId>> edges) {
  std::vector<std::size_t> degree(vertex_count, 0);
  for (const auto& [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) {
      throw Error(ErrorCode::MalformedGraph, "edge endpoint out of range");
    }
    if (u == v) throw Error(ErrorCode::MalformedGraph, "self loop at " + std::to_string(u));
    ++degree[u];
    ++degree[v];
  }
  AbstractGraph g;
  g.offsets_.assign(vertex_count + 1, 0);
  for (std::size_t v = 0; v < vertex_count; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.targets_.resize(g.offsets_.back());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    g.targets_[fill[u]++] = v;
    g.targets_[fill[v]++] = u;
  }
  for (std::size_t v = 0; v < vertex_count; ++v) {
    auto first = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    if (std::adjacent_find(first, last) != last) {
      throw Error(ErrorCode::MalformedGraph, "duplicate edge at vertex " + std::to_string(v));
    }
  }
  return g;
}

bool AbstractGraph::adjacent(VertexId u, VertexId v) const {
  const auto list = neighbors(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<std::pair<VertexId, VertexId>> AbstractGraph::edge_list() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(edge_count());
  for (VertexId u = 0; u < vertex_count(); ++u) {
    for (const VertexId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

AbstractGraph relabel(const AbstractGraph& g, std::span<const VertexId> new_id_of_old) {
  auto edges = g.edge_list();
  for (auto& [u, v] : edges) {
    u = new_id_of_old[u];
    v = new_id_of_old[v];
  }
  return AbstractGraph::from_edges(g.vertex_count(), edges);
}

}  // namespace pathgraph
