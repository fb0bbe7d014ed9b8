#include "pathgraph/reconstruct.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <string>

#include "pathgraph/error.hpp"
#include "pathgraph/pathgraph.hpp"

namespace pathgraph {

namespace {

constexpr const char* kStageInferN = "infer_n";
constexpr const char* kStageBoundary = "find_boundary_vertices";
constexpr const char* kStageCycle = "build_boundary_cycle";
constexpr const char* kStageGauge = "fix_gauge";
constexpr const char* kStageLevels = "compute_levels";
constexpr const char* kStageBoundarySets = "recover_boundary_sets";
constexpr const char* kStageLevel1 = "recover_level1";
constexpr const char* kStageLeaf = "recover_leaf";
constexpr const char* kStageComplete = "complete_path";
constexpr const char* kStageCheck = "check_output";

[[noreturn]] void fail(ErrorCode code, const char* stage, const std::string& what) {
  throw ReconstructError(code, stage, what);
}

std::string vtext(VertexId v) { return "vertex " + std::to_string(v); }

bool has_edge(BoundaryMask mask, int index) { return (mask >> index) & 1U; }

std::vector<std::vector<VertexId>> level_buckets(std::span<const int> level) {
  int top = 0;
  for (const int l : level) top = std::max(top, l);
  std::vector<std::vector<VertexId>> buckets(static_cast<std::size_t>(top) + 1);
  for (VertexId v = 0; v < level.size(); ++v) buckets[static_cast<std::size_t>(level[v])].push_back(v);
  return buckets;
}

std::vector<BoundaryMask> level0_records(const Gauge& gauge, std::size_t vertex_count) {
  const int n = gauge.points();
  std::vector<BoundaryMask> rec(vertex_count, 0);
  for (int i = 0; i < n; ++i) {
    rec[gauge.cycle[static_cast<std::size_t>(i)]] = full_boundary(n) & ~(BoundaryMask{1} << i);
  }
  return rec;
}

SpanningPath boundary_path(int omitted, int n) {
  std::array<PointId, kMaxPoints> seq{};
  for (int j = 0; j < n; ++j) seq[static_cast<std::size_t>(j)] = (omitted + 1 + j) % n;
  return SpanningPath::from_trusted(std::span<const PointId>(seq.data(), static_cast<std::size_t>(n)), n);
}

// Appends the points of `arc` walking from `from` (one of its endpoints) to
// the other endpoint.
void walk_arc(const BoundaryArc& arc, PointId from, int n, std::array<PointId, kMaxPoints>& seq,
              int& pos) {
  const int step = from == arc.first ? 1 : n - 1;
  PointId p = from;
  for (int i = 0; i <= arc.edges; ++i) {
    seq[static_cast<std::size_t>(pos++)] = p;
    p = (p + step) % n;
  }
}

PointId other_end(const BoundaryArc& arc, PointId end) { return end == arc.first ? arc.last : arc.first; }

void check_arcs(std::span<const BoundaryArc> arcs, int n) {
  if (arcs.empty()) fail(ErrorCode::ArcStructureInvalid, kStageComplete, "no arcs");
  int covered = 0;
  for (std::size_t j = 0; j < arcs.size(); ++j) {
    const auto& arc = arcs[j];
    const auto& next = arcs[(j + 1) % arcs.size()];
    if (arc.edges < 0 || (arc.first + arc.edges) % n != arc.last) {
      fail(ErrorCode::ArcStructureInvalid, kStageComplete, "arc endpoints inconsistent with length");
    }
    if (arcs.size() > 1 && next.first != (arc.last + 1) % n) {
      fail(ErrorCode::ArcStructureInvalid, kStageComplete, "arcs are not cyclically contiguous");
    }
    covered += arc.edges + 1;
  }
  if (covered != n) fail(ErrorCode::ArcStructureInvalid, kStageComplete, "arcs do not cover all points");
}

BoundaryMask arcs_mask(std::span<const BoundaryArc> arcs, int n) {
  BoundaryMask mask = 0;
  for (const auto& arc : arcs) {
    for (int i = 0; i < arc.edges; ++i) mask |= BoundaryMask{1} << ((arc.first + i) % n);
  }
  return mask;
}

void check_output(const AbstractGraph& g, const ReconState& s, Policy policy) {
  const std::size_t count = g.vertex_count();
  for_each_index(policy, static_cast<std::int64_t>(count), [&](std::int64_t i) {
    const auto v = static_cast<VertexId>(i);
    const SpanningPath& p = s.path[v];
    const auto seq = p.sequence();
    try {
      (void)SpanningPath::from_sequence(seq, s.n);
    } catch (const Error& e) {
      fail(ErrorCode::InconsistentOutput, kStageCheck, vtext(v) + " has an invalid path: " + e.what());
    }
    if (p.level() != s.level[v] || p.boundary_mask() != s.brecord[v]) {
      fail(ErrorCode::InconsistentOutput, kStageCheck, vtext(v) + " path disagrees with its records");
    }
    for (const VertexId w : g.neighbors(v)) {
      if (v < w && distance(p.edges(), s.path[w].edges()) != 2) {
        fail(ErrorCode::InconsistentOutput, kStageCheck,
             "edge (" + std::to_string(v) + "," + std::to_string(w) +
                 ") joins paths that do not differ in exactly two edges");
      }
    }
    if (static_cast<std::size_t>(count_path_neighbors(p)) != g.degree(v)) {
      fail(ErrorCode::InconsistentOutput, kStageCheck,
           vtext(v) + " degree does not match the neighbors of its recovered path");
    }
  });

  std::vector<VertexId> order(count);
  for (VertexId v = 0; v < count; ++v) order[v] = v;
  std::sort(order.begin(), order.end(),
            [&](VertexId x, VertexId y) { return s.path[x].edges() < s.path[y].edges(); });
  for (std::size_t i = 1; i < count; ++i) {
    if (s.path[order[i - 1]] == s.path[order[i]]) {
      fail(ErrorCode::InconsistentOutput, kStageCheck,
           "vertices " + std::to_string(order[i - 1]) + " and " + std::to_string(order[i]) +
               " received the same path");
    }
  }
}

}  // namespace

int infer_n(std::size_t vertex_count) {
  for (int n = kMinPoints; n <= kMaxPoints; ++n) {
    const auto count = path_count(n);
    if (count == vertex_count) return n;
    if (count > vertex_count) break;
  }
  fail(ErrorCode::NotAPathGraphOrder, kStageInferN,
       "N=" + std::to_string(vertex_count) + " is not of the form n*2^(n-3) with " +
           std::to_string(kMinPoints) + " <= n <= " + std::to_string(kMaxPoints));
}

std::vector<VertexId> find_boundary_vertices(const AbstractGraph& g, int n) {
  const auto target = static_cast<std::size_t>(3 * n - 7);
  std::vector<VertexId> boundary;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto d = g.degree(v);
    if (d > target) {
      fail(ErrorCode::BoundaryCountMismatch, kStageBoundary,
           vtext(v) + " has degree " + std::to_string(d) + " above 3n-7=" + std::to_string(target));
    }
    if (d == target) boundary.push_back(v);
  }
  if (boundary.size() != static_cast<std::size_t>(n)) {
    fail(ErrorCode::BoundaryCountMismatch, kStageBoundary,
         std::to_string(boundary.size()) + " vertices of degree 3n-7=" + std::to_string(target) +
             ", expected " + std::to_string(n));
  }
  return boundary;
}

std::vector<VertexId> build_boundary_cycle(const AbstractGraph& g,
                                           std::span<const VertexId> boundary) {
  const std::size_t n = boundary.size();
  if (n < 3) fail(ErrorCode::NotACycle, kStageCycle, "fewer than three boundary vertices");
  std::vector<VertexId> sorted(boundary.begin(), boundary.end());
  std::sort(sorted.begin(), sorted.end());
  const auto in_boundary = [&](VertexId w) {
    return std::binary_search(sorted.begin(), sorted.end(), w);
  };

  std::vector<std::vector<std::size_t>> ring(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const VertexId u = sorted[i];
      const VertexId v = sorted[j];
      if (!g.adjacent(u, v)) {
        fail(ErrorCode::NotACycle, kStageCycle,
             "boundary vertices " + std::to_string(u) + " and " + std::to_string(v) + " are not adjacent");
      }
      // a common neighbor outside B means (u, v) lies in a 4-clique
      const auto outside = count_common(g.neighbors(u), g.neighbors(v),
                                        [&](VertexId w) { return !in_boundary(w); });
      if (outside == 0) {
        ring[i].push_back(j);
        ring[j].push_back(i);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (ring[i].size() != 2) {
      fail(ErrorCode::NotACycle, kStageCycle,
           "boundary " + vtext(sorted[i]) + " has " + std::to_string(ring[i].size()) +
               " cycle neighbors, expected 2");
    }
  }

  std::vector<VertexId> cycle;
  cycle.reserve(n);
  std::size_t prev = n;
  std::size_t cur = 0;
  for (std::size_t step = 0; step < n; ++step) {
    cycle.push_back(sorted[cur]);
    const std::size_t next = ring[cur][0] != prev ? ring[cur][0] : ring[cur][1];
    prev = cur;
    cur = next;
  }
  if (cur != 0) fail(ErrorCode::NotACycle, kStageCycle, "boundary graph is not a single cycle");
  std::vector<VertexId> check = cycle;
  std::sort(check.begin(), check.end());
  if (std::adjacent_find(check.begin(), check.end()) != check.end()) {
    fail(ErrorCode::NotACycle, kStageCycle, "boundary graph is not a single cycle");
  }
  return cycle;
}

Gauge fix_gauge(std::span<const VertexId> cycle) {
  const std::size_t n = cycle.size();
  if (n < 3) fail(ErrorCode::NotACycle, kStageGauge, "cycle too short");
  const auto start = static_cast<std::size_t>(
      std::min_element(cycle.begin(), cycle.end()) - cycle.begin());
  const VertexId forward = cycle[(start + 1) % n];
  const VertexId backward = cycle[(start + n - 1) % n];
  const std::size_t step = forward < backward ? 1 : n - 1;

  Gauge gauge;
  gauge.cycle.reserve(n);
  for (std::size_t i = 0; i < n; ++i) gauge.cycle.push_back(cycle[(start + i * step) % n]);
  return gauge;
}

std::vector<int> compute_levels(const AbstractGraph& g, std::span<const VertexId> boundary, int n) {
  auto level = bfs_distances(g, boundary);
  for (VertexId v = 0; v < level.size(); ++v) {
    if (level[v] < 0) fail(ErrorCode::Disconnected, kStageLevels, vtext(v) + " is unreachable from B");
    if (level[v] > n - 3) {
      fail(ErrorCode::LevelOutOfRange, kStageLevels,
           vtext(v) + " at distance " + std::to_string(level[v]) + " > n-3");
    }
  }
  return level;
}

std::vector<BoundaryMask> recover_boundary_sets_fast(const AbstractGraph& g,
                                                     std::span<const int> level, const Gauge& gauge,
                                                     Policy policy, std::uint64_t* work) {
  const int n = gauge.points();
  const BoundaryMask full = full_boundary(n);
  auto rec = level0_records(gauge, g.vertex_count());
  const auto buckets = level_buckets(level);

  std::atomic<std::uint64_t> reads{0};
  for (std::size_t d = 1; d < buckets.size(); ++d) {
    const auto& bucket = buckets[d];
    for_each_index(policy, static_cast<std::int64_t>(bucket.size()), [&](std::int64_t i) {
      const VertexId v = bucket[static_cast<std::size_t>(i)];
      BoundaryMask mask = full;
      std::uint64_t lower = 0;
      for (const VertexId u : g.neighbors(v)) {
        if (static_cast<std::size_t>(level[u]) + 1 == d) {
          mask &= rec[u];
          ++lower;
        }
      }
      reads.fetch_add(g.degree(v) * static_cast<std::uint64_t>(n), std::memory_order_relaxed);
      if (lower == 0) {
        fail(ErrorCode::EmptyLowerNeighborhood, kStageBoundarySets,
             vtext(v) + " at level " + std::to_string(d) + " has no lower-level neighbor");
      }
      if (static_cast<std::size_t>(std::popcount(full & ~mask)) != d + 1) {
        fail(ErrorCode::BoundarySetMismatch, kStageBoundarySets,
             vtext(v) + " at level " + std::to_string(d) + " misses " +
                 std::to_string(std::popcount(full & ~mask)) + " boundary edges, expected " +
                 std::to_string(d + 1));
      }
      rec[v] = mask;
    });
  }
  if (work) *work += reads.load();
  return rec;
}

std::vector<BoundaryMask> recover_boundary_sets_reference(const AbstractGraph& g,
                                                          std::span<const int> level,
                                                          const Gauge& gauge, Policy policy) {
  const int n = gauge.points();
  const std::size_t count = g.vertex_count();
  std::vector<std::vector<int>> dist(static_cast<std::size_t>(n));
  for_each_index(policy, n, [&](std::int64_t i) {
    const VertexId source = gauge.cycle[static_cast<std::size_t>(i)];
    dist[static_cast<std::size_t>(i)] = bfs_distances(g, std::span<const VertexId>(&source, 1));
  });

  std::vector<BoundaryMask> rec(count, 0);
  for_each_index(policy, static_cast<std::int64_t>(count), [&](std::int64_t i) {
    const auto v = static_cast<VertexId>(i);
    BoundaryMask missing = 0;
    for (int e = 0; e < n; ++e) {
      if (dist[static_cast<std::size_t>(e)][v] == level[v]) missing |= BoundaryMask{1} << e;
    }
    if (std::popcount(missing) != level[v] + 1) {
      fail(ErrorCode::BoundarySetMismatch, kStageBoundarySets,
           vtext(v) + ": " + std::to_string(std::popcount(missing)) +
               " boundary vertices at distance equal to its level, expected " +
               std::to_string(level[v] + 1));
    }
    rec[v] = full_boundary(n) & ~missing;
  });
  return rec;
}

std::vector<BoundaryArc> arc_decomposition(BoundaryMask present, int n) {
  const BoundaryMask missing = full_boundary(n) & ~present;
  if (missing == 0) fail(ErrorCode::ArcStructureInvalid, kStageComplete, "no missing boundary edge");
  std::vector<int> gaps;
  for (int i = 0; i < n; ++i) {
    if (has_edge(missing, i)) gaps.push_back(i);
  }
  std::vector<BoundaryArc> arcs;
  arcs.reserve(gaps.size());
  for (std::size_t j = 0; j < gaps.size(); ++j) {
    const int gap = gaps[j];
    const int next_gap = j + 1 < gaps.size() ? gaps[j + 1] : gaps[0] + n;
    arcs.push_back({(gap + 1) % n, next_gap % n, next_gap - gap - 1});
  }
  return arcs;
}

SpanningPath complete_path(std::span<const BoundaryArc> arcs, PointId leaf, int n) {
  check_arcs(arcs, n);
  const std::size_t k = arcs.size();
  std::size_t start = k;
  for (std::size_t j = 0; j < k; ++j) {
    if (!arcs[j].degenerate() && (arcs[j].first == leaf || arcs[j].last == leaf)) start = j;
  }
  if (start == k) {
    fail(ErrorCode::NoCompletion, kStageComplete,
         "point " + std::to_string(leaf) + " is not an endpoint of a non-degenerate arc");
  }

  std::array<PointId, kMaxPoints> seq{};
  int pos = 0;
  walk_arc(arcs[start], leaf, n, seq, pos);
  PointId end = other_end(arcs[start], leaf);

  // unvisited arcs: lo, lo+1, ..., lo+remaining-1 (mod k), a contiguous
  // cyclic interval; only its two extreme endpoints can take the next edge
  std::size_t lo = (start + 1) % k;
  std::size_t remaining = k - 1;
  while (remaining > 0) {
    const std::size_t hi = (lo + remaining - 1) % k;
    const PointId low_entry = arcs[lo].first;
    const PointId high_entry = arcs[hi].last;
    const bool low_ok = boundary_index(make_edge(end, low_entry), n) < 0;
    const bool high_ok =
        high_entry != low_entry && boundary_index(make_edge(end, high_entry), n) < 0;
    if (low_ok && high_ok) {
      fail(ErrorCode::AmbiguousCompletion, kStageComplete,
           "two admissible diagonals from point " + std::to_string(end));
    }
    if (!low_ok && !high_ok) {
      fail(ErrorCode::NoCompletion, kStageComplete,
           "no admissible diagonal from point " + std::to_string(end));
    }
    if (low_ok) {
      walk_arc(arcs[lo], low_entry, n, seq, pos);
      end = arcs[lo].last;
      lo = (lo + 1) % k;
    } else {
      walk_arc(arcs[hi], high_entry, n, seq, pos);
      end = arcs[hi].first;
    }
    --remaining;
  }

  auto path = SpanningPath::from_trusted(std::span<const PointId>(seq.data(), static_cast<std::size_t>(n)), n);
  if (path.boundary_mask() != arcs_mask(arcs, n)) {
    fail(ErrorCode::NoCompletion, kStageComplete, "completion changed the boundary edge set");
  }
  return path;
}

std::vector<SpanningPath> all_completions(std::span<const BoundaryArc> arcs, int n) {
  std::vector<SpanningPath> out;
  for (const auto& arc : arcs) {
    if (arc.degenerate()) continue;
    for (const PointId leaf : {arc.first, arc.last}) {
      try {
        auto p = complete_path(arcs, leaf, n);
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
      } catch (const ReconstructError& e) {
        if (e.code() != ErrorCode::NoCompletion) throw;
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const SpanningPath& x, const SpanningPath& y) { return x.edges() < y.edges(); });
  return out;
}

SpanningPath recover_level1(const AbstractGraph& g, const ReconState& state, VertexId v) {
  const int n = state.n;
  const auto arcs = arc_decomposition(state.brecord[v], n);
  if (arcs.size() != 2 || arcs[0].degenerate() || arcs[1].degenerate()) {
    fail(ErrorCode::ArcStructureInvalid, kStageLevel1,
         vtext(v) + " boundary set does not split into two non-degenerate arcs");
  }
  // prefer the arc holding the boundary edge of smallest rank
  const auto min_rank = [n](const BoundaryArc& arc) {
    int best = edge_count_for(kMaxPoints);
    for (int i = 0; i < arc.edges; ++i) {
      best = std::min(best, edge_rank(boundary_edge((arc.first + i) % n, n)));
    }
    return best;
  };
  std::size_t pick = 0;
  if (arcs[0].edges >= 2 && arcs[1].edges >= 2) {
    pick = min_rank(arcs[0]) < min_rank(arcs[1]) ? 0 : 1;
  } else if (arcs[1].edges >= 2) {
    pick = 1;
  } else if (arcs[0].edges < 2) {
    fail(ErrorCode::ArcStructureInvalid, kStageLevel1, vtext(v) + " has no arc with two edges");
  }
  const BoundaryArc& major = arcs[pick];
  const BoundaryArc& minor = arcs[1 - pick];
  const PointId a = major.first;
  const PointId c = major.last;
  const PointId d = minor.first;
  const PointId y = minor.last;
  const int ab = a;  // boundary index of (a, a+1)

  bool witness = false;
  for (const VertexId u : g.neighbors(v)) {
    if (state.level[u] == 2 && !has_edge(state.brecord[u], ab)) {
      witness = true;
      break;
    }
  }

  std::array<PointId, kMaxPoints> seq{};
  int pos = 0;
  if (witness) {
    // diagonal (a, d): c .. a, d .. y
    walk_arc(major, c, n, seq, pos);
    walk_arc(minor, d, n, seq, pos);
  } else {
    // diagonal (c, y): a .. c, y .. d
    walk_arc(major, a, n, seq, pos);
    walk_arc(minor, y, n, seq, pos);
  }
  return SpanningPath::from_trusted(std::span<const PointId>(seq.data(), static_cast<std::size_t>(n)), n);
}

PointId recover_leaf(const AbstractGraph& g, const ReconState& state, VertexId v) {
  const int n = state.n;
  const int lower = state.level[v] - 1;
  const auto arcs = arc_decomposition(state.brecord[v], n);

  // candidate leaf a, the far end c of its arc, and the boundary index of
  // the missing edge joining a to the neighboring arc
  struct Candidate {
    PointId a;
    PointId c;
    int link;
  };
  std::vector<Candidate> candidates;
  for (const auto& arc : arcs) {
    if (arc.degenerate()) continue;
    candidates.push_back({arc.first, arc.last, (arc.first + n - 1) % n});
    candidates.push_back({arc.last, arc.first, arc.last});
  }
  std::vector<char> passed(candidates.size(), 0);
  for (const VertexId u : g.neighbors(v)) {
    if (state.level[u] != lower) continue;
    const auto [e0, e1] = state.endpoints[u];
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const auto& cand = candidates[i];
      if (has_edge(state.brecord[u], cand.link) && (cand.c == e0 || cand.c == e1)) passed[i] = 1;
    }
  }
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (passed[i]) return candidates[i].a;
  }
  fail(ErrorCode::NoLeafFound, kStageLeaf, vtext(v) + " has no endpoint passing the leaf test");
}

ReconResult reconstruct_all(const AbstractGraph& g, const ReconOptions& options) {
  ReconState s;
  std::uint64_t work = 0;
  s.n = infer_n(g.vertex_count());
  const int n = s.n;
  s.boundary = find_boundary_vertices(g, n);
  const auto cycle = build_boundary_cycle(g, s.boundary);
  s.gauge = fix_gauge(cycle);
  s.level = compute_levels(g, s.boundary, n);
  s.brecord = recover_boundary_sets_fast(g, s.level, s.gauge, options.policy, &work);
  if (options.cross_check_boundary_sets) {
    const auto reference = recover_boundary_sets_reference(g, s.level, s.gauge, options.policy);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (reference[v] != s.brecord[v]) {
        fail(ErrorCode::BoundarySetMismatch, kStageBoundarySets,
             vtext(v) + ": intersection and distance methods disagree");
      }
    }
  }

  const std::size_t count = g.vertex_count();
  s.path.assign(count, SpanningPath{});
  s.endpoints.assign(count, {0, 0});
  const auto buckets = level_buckets(s.level);

  for (int i = 0; i < n; ++i) {
    const VertexId v = s.gauge.cycle[static_cast<std::size_t>(i)];
    s.path[v] = boundary_path(i, n);
    s.endpoints[v] = s.path[v].endpoints();
  }

  std::atomic<std::uint64_t> reads{0};
  const auto record = [&](VertexId v, SpanningPath p, const char* stage) {
    if (p.boundary_mask() != s.brecord[v]) {
      fail(ErrorCode::InconsistentOutput, stage, vtext(v) + " path disagrees with its boundary set");
    }
    s.endpoints[v] = p.endpoints();
    s.path[v] = std::move(p);
  };

  if (buckets.size() > 1) {
    const auto& bucket = buckets[1];
    for_each_index(options.policy, static_cast<std::int64_t>(bucket.size()), [&](std::int64_t i) {
      const VertexId v = bucket[static_cast<std::size_t>(i)];
      record(v, recover_level1(g, s, v), kStageLevel1);
      reads.fetch_add(g.degree(v) * static_cast<std::uint64_t>(n), std::memory_order_relaxed);
    });
  }
  // each level reads only completed records of the level below
  for (std::size_t d = 2; d < buckets.size(); ++d) {
    const auto& bucket = buckets[d];
    for_each_index(options.policy, static_cast<std::int64_t>(bucket.size()), [&](std::int64_t i) {
      const VertexId v = bucket[static_cast<std::size_t>(i)];
      const PointId leaf = recover_leaf(g, s, v);
      const auto arcs = arc_decomposition(s.brecord[v], n);
      record(v, complete_path(arcs, leaf, n), kStageComplete);
      reads.fetch_add(g.degree(v) * static_cast<std::uint64_t>(n), std::memory_order_relaxed);
    });
  }
  work += reads.load();

  if (options.check_output) check_output(g, s, options.policy);

  ReconResult result;
  result.n = n;
  result.gauge = std::move(s.gauge);
  result.paths = std::move(s.path);
  result.level = std::move(s.level);
  result.work = work;
  return result;
}

}  // namespace pathgraph
