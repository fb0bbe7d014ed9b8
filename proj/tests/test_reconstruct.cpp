#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "pathgraph/error.hpp"
#include "pathgraph/pathgraph.hpp"
#include "pathgraph/reconstruct.hpp"
#include "pathgraph/verify.hpp"

using namespace pathgraph;

namespace {

SpanningPath path_of(std::vector<PointId> seq) {
  return SpanningPath::from_sequence(seq, static_cast<int>(seq.size()));
}

// Records taken from the ground-truth labels, so single stages can be
// checked in isolation.
ReconState truth_state(const PathGraph& pg) {
  ReconState s;
  s.n = pg.points();
  for (const auto& p : pg.labels()) {
    s.level.push_back(p.level());
    s.brecord.push_back(p.boundary_mask());
    s.endpoints.push_back(p.endpoints());
    s.path.push_back(p);
  }
  return s;
}

std::string stage_of(const AbstractGraph& g) {
  try {
    reconstruct_all(g);
  } catch (const ReconstructError& e) {
    return e.stage();
  }
  return "accepted";
}

std::set<std::vector<Edge>> diagonal_sets(const std::vector<SpanningPath>& paths) {
  std::set<std::vector<Edge>> out;
  for (const auto& p : paths) {
    std::vector<Edge> d;
    for (const Edge e : p.edge_list())
      if (!is_boundary(e, p.points())) d.push_back(e);
    std::sort(d.begin(), d.end());
    out.insert(d);
  }
  return out;
}

}  // namespace

TEST_CASE("infer n") {
  CHECK(infer_n(20) == 5);
  CHECK(infer_n(48) == 6);
  CHECK(infer_n(1280) == 10);
  CHECK(infer_n(path_count(kMaxPoints)) == kMaxPoints);
  for (std::size_t bad : {std::size_t{0}, std::size_t{19}, std::size_t{21}, std::size_t{1000}}) {
    try {
      infer_n(bad);
      FAIL("accepted " << bad);
    } catch (const ReconstructError& e) {
      CHECK(e.code() == ErrorCode::NotAPathGraphOrder);
      CHECK(e.stage() == "infer_n");
    }
  }
}

TEST_CASE("boundary vertices are the boundary paths") {
  for (int n = 5; n <= 11; ++n) {
    const auto pg = PathGraph::build(n);
    const auto b = find_boundary_vertices(pg.graph(), n);
    REQUIRE(b.size() == static_cast<std::size_t>(n));
    for (VertexId v : b) CHECK(pg.label(v).level() == 0);
  }
}

TEST_CASE("boundary cycle follows the hull") {
  for (int n = 5; n <= 11; ++n) {
    const auto pg = PathGraph::build(n);
    const auto cycle = build_boundary_cycle(pg.graph(), find_boundary_vertices(pg.graph(), n));
    REQUIRE(cycle.size() == static_cast<std::size_t>(n));
    auto omitted = [&](VertexId v) {
      return std::countr_zero(~pg.label(v).boundary_mask() & full_boundary(n));
    };
    const int step = (omitted(cycle[1]) - omitted(cycle[0]) + n) % n;
    CHECK((step == 1 || step == n - 1));
    for (int i = 0; i < n; ++i) {
      const VertexId u = cycle[static_cast<std::size_t>(i)];
      const VertexId v = cycle[static_cast<std::size_t>((i + 1) % n)];
      CHECK((omitted(v) - omitted(u) + n) % n == step);
    }
  }
}

TEST_CASE("gauge is canonical") {
  const auto pg = PathGraph::build(7);
  const auto cycle = build_boundary_cycle(pg.graph(), find_boundary_vertices(pg.graph(), 7));
  const Gauge gauge = fix_gauge(cycle);
  CHECK(gauge.cycle[0] == *std::min_element(cycle.begin(), cycle.end()));
  CHECK(gauge.cycle[1] < gauge.cycle[6]);

  // reversing or rotating the input is absorbed entirely
  auto reversed = cycle;
  std::reverse(reversed.begin(), reversed.end());
  CHECK(fix_gauge(reversed) == gauge);
  auto rotated = cycle;
  std::rotate(rotated.begin(), rotated.begin() + 3, rotated.end());
  CHECK(fix_gauge(rotated) == gauge);
}

TEST_CASE("any cycle reading differs from the gauge by a symmetry") {
  const int n = 8;
  const auto pg = PathGraph::build(n);
  const auto cycle = build_boundary_cycle(pg.graph(), find_boundary_vertices(pg.graph(), n));
  const Gauge gauge = fix_gauge(cycle);
  for (int shift = 0; shift < n; ++shift) {
    for (bool flip : {false, true}) {
      std::vector<VertexId> raw = cycle;
      if (flip) std::reverse(raw.begin(), raw.end());
      std::rotate(raw.begin(), raw.begin() + shift, raw.end());
      const Gauge other{raw};
      int matches = 0;
      for (const auto& h : dihedral_elements(n)) {
        bool ok = true;
        for (int i = 0; i < n; ++i) ok = ok && other.cycle[i] == gauge.cycle[h.apply(i)];
        matches += ok ? 1 : 0;
      }
      CHECK(matches == 1);
    }
  }
}

TEST_CASE("levels count diagonals") {
  for (int n = 5; n <= 12; ++n) {
    const auto pg = PathGraph::build(n);
    const auto b = find_boundary_vertices(pg.graph(), n);
    const auto level = compute_levels(pg.graph(), b, n);
    int top = 0;
    for (VertexId v = 0; v < pg.vertex_count(); ++v) {
      CHECK(level[v] == pg.label(v).level());
      top = std::max(top, level[v]);
    }
    CHECK(top == n - 3);
  }
}

TEST_CASE("boundary set example") {
  const auto pg = PathGraph::build(5);
  const auto dist = oracle::all_distances(pg.graph());
  const VertexId v = *pg.find(path_of({1, 0, 2, 3, 4}));
  std::vector<VertexId> at_one;
  for (VertexId w = 0; w < pg.vertex_count(); ++w)
    if (pg.label(w).level() == 0 && dist[v][w] == 1) at_one.push_back(w);
  // the boundary paths one step away omit exactly (1,2) and (4,0)
  REQUIRE(at_one.size() == 2);
  BoundaryMask omitted = 0;
  for (VertexId w : at_one) omitted |= ~pg.label(w).boundary_mask() & full_boundary(5);
  CHECK(omitted == ((1U << 1) | (1U << 4)));
}

TEST_CASE("boundary sets: fast, reference and truth agree") {
  for (int n = 5; n <= 11; ++n) {
    CAPTURE(n);
    const auto pg = PathGraph::build(n);
    const auto anon = anonymize(pg.graph(), 100 + n);
    const auto b = find_boundary_vertices(anon.graph, n);
    const Gauge gauge = fix_gauge(build_boundary_cycle(anon.graph, b));
    const auto level = compute_levels(anon.graph, b, n);
    const auto fast = recover_boundary_sets_fast(anon.graph, level, gauge, Policy::Serial);
    CHECK(fast == recover_boundary_sets_fast(anon.graph, level, gauge, Policy::Parallel));
    CHECK(fast == recover_boundary_sets_reference(anon.graph, level, gauge));
    const Dihedral h = gauge_alignment(pg, anon.secret, gauge);
    for (VertexId v = 0; v < anon.graph.vertex_count(); ++v) {
      CHECK(apply(h, fast[v]) == pg.label(anon.secret[v]).boundary_mask());
    }
  }
}

TEST_CASE("arc decomposition") {
  // 0-1-2 and 3-4 on the pentagon
  const BoundaryMask m = (1U << 0) | (1U << 1) | (1U << 3);
  const auto arcs = arc_decomposition(m, 5);
  REQUIRE(arcs.size() == 2);
  CHECK(arcs[0] == BoundaryArc{3, 4, 1});
  CHECK(arcs[1] == BoundaryArc{0, 2, 2});

  // point 3 of the hexagon touches no hull edge
  const BoundaryMask lone = (1U << 0) | (1U << 1) | (1U << 4);
  const auto with_point = arc_decomposition(lone, 6);
  REQUIRE(with_point.size() == 3);
  CHECK(with_point[0] == BoundaryArc{3, 3, 0});
  CHECK(with_point[0].degenerate());

  CHECK_THROWS_AS(arc_decomposition(full_boundary(5), 5), Error);
}

TEST_CASE("arcs partition the points") {
  for (int n = 5; n <= 10; ++n) {
    for (const auto& p : enumerate_paths(n)) {
      if (p.level() == 0) continue;
      const auto arcs = arc_decomposition(p.boundary_mask(), n);
      CHECK(arcs.size() == static_cast<std::size_t>(p.level() + 1));
      int points = 0;
      for (const auto& a : arcs) points += a.edges + 1;
      CHECK(points == n);
    }
  }
}

TEST_CASE("completion example") {
  const std::vector<BoundaryArc> arcs{{3, 4, 1}, {0, 2, 2}};
  CHECK(complete_path(arcs, 0, 5) == path_of({0, 1, 2, 4, 3}));
  CHECK(complete_path(arcs, 3, 5) == path_of({0, 1, 2, 4, 3}));
  CHECK(complete_path(arcs, 4, 5) == path_of({4, 3, 0, 1, 2}));
  const auto all = all_completions(arcs, 5);
  CHECK(all.size() == 2);
  CHECK(diagonal_sets(all) == std::set<std::vector<Edge>>{{{2, 4}}, {{0, 3}}});
}

TEST_CASE("completion matches exhaustive diagonal search") {
  for (int n = 5; n <= 8; ++n) {
    CAPTURE(n);
    std::set<BoundaryMask> seen;
    for (const auto& p : enumerate_paths(n)) {
      if (p.level() == 0 || !seen.insert(p.boundary_mask()).second) continue;
      const auto arcs = arc_decomposition(p.boundary_mask(), n);
      const auto expected = oracle::completions(arcs, n);
      const auto got = all_completions(arcs, n);
      CHECK(got.size() <= arcs.size());
      std::set<std::vector<Edge>> want;
      for (auto d : expected) {
        std::sort(d.begin(), d.end());
        want.insert(d);
      }
      CHECK(diagonal_sets(got) == want);
    }
  }
}

TEST_CASE("completion from a true leaf reproduces the path") {
  for (int n = 5; n <= 12; ++n) {
    for (const auto& p : enumerate_paths(n)) {
      if (p.level() == 0) continue;
      const auto arcs = arc_decomposition(p.boundary_mask(), n);
      CHECK(complete_path(arcs, p.endpoints().first, n) == p);
      CHECK(complete_path(arcs, p.endpoints().second, n) == p);
    }
  }
}

TEST_CASE("level one example") {
  const auto pg = PathGraph::build(5);
  const auto s = truth_state(pg);
  const VertexId v = *pg.find(path_of({0, 1, 2, 4, 3}));
  const auto p = recover_level1(pg.graph(), s, v);
  CHECK(p.edges().contains({2, 4}));
  CHECK(p == path_of({0, 1, 2, 4, 3}));
}

TEST_CASE("level one recovery from true records") {
  for (int n = 5; n <= 10; ++n) {
    const auto pg = PathGraph::build(n);
    const auto s = truth_state(pg);
    for (VertexId v = 0; v < pg.vertex_count(); ++v) {
      if (s.level[v] == 1) CHECK(recover_level1(pg.graph(), s, v) == pg.label(v));
    }
  }
}

TEST_CASE("leaf recovery is sound") {
  for (int n = 5; n <= 10; ++n) {
    CAPTURE(n);
    const auto pg = PathGraph::build(n);
    const auto s = truth_state(pg);
    for (VertexId v = 0; v < pg.vertex_count(); ++v) {
      if (s.level[v] < 2) continue;
      const PointId leaf = recover_leaf(pg.graph(), s, v);
      CHECK(pg.label(v).is_leaf(leaf));
      CHECK(complete_path(arc_decomposition(s.brecord[v], n), leaf, n) == pg.label(v));
    }
  }
}

TEST_CASE("no neighbor holds a link between two inner arc ends") {
  for (int n = 6; n <= 9; ++n) {
    const auto pg = PathGraph::build(n);
    for (VertexId v = 0; v < pg.vertex_count(); ++v) {
      const auto& p = pg.label(v);
      if (p.level() < 2) continue;
      for (int i = 0; i < n; ++i) {
        const Edge e = boundary_edge(i, n);
        if (p.edges().contains(e) || p.is_leaf(e.a) || p.is_leaf(e.b)) continue;
        for (VertexId w : pg.graph().neighbors(v)) CHECK_FALSE(pg.label(w).edges().contains(e));
      }
    }
  }
}

TEST_CASE("round trip") {
  for (int n = 5; n <= 12; ++n) {
    CAPTURE(n);
    const auto pg = PathGraph::build(n);
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
      const auto anon = anonymize(pg.graph(), seed);
      const auto result = reconstruct_all(anon.graph);
      CHECK(result.n == n);
      CHECK_NOTHROW(check_reconstruction(pg, anon.secret, result.paths));
    }
  }
}

TEST_CASE("round trip with cross-checked boundary sets") {
  ReconOptions options;
  options.cross_check_boundary_sets = true;
  for (int n = 5; n <= 11; ++n) {
    const auto pg = PathGraph::build(n);
    const auto anon = anonymize(pg.graph(), 9);
    const auto result = reconstruct_all(anon.graph, options);
    CHECK_NOTHROW(check_reconstruction(pg, anon.secret, result.paths));
  }
}

TEST_CASE("reconstruction is idempotent") {
  for (int n = 5; n <= 10; ++n) {
    const auto pg = PathGraph::build(n);
    const auto anon = anonymize(pg.graph(), 4);
    const auto first = reconstruct_all(anon.graph);
    // rebuild the graph from the recovered labels alone
    const auto rebuilt = oracle::adjacency(first.paths);
    CHECK(rebuilt == anon.graph);
    const auto second = reconstruct_all(rebuilt);
    const auto again = PathGraph::from_parts(n, first.paths, rebuilt);
    CHECK(check_reconstruction(again, {}, second.paths) == Dihedral::identity(n));
  }
}

TEST_CASE("gauge covariance across relabelings") {
  for (int n = 5; n <= 10; ++n) {
    const auto pg = PathGraph::build(n);
    const auto a = anonymize(pg.graph(), 21);
    const auto b = anonymize(pg.graph(), 22);
    const auto ra = reconstruct_all(a.graph);
    const auto rb = reconstruct_all(b.graph);
    const Dihedral ga = check_reconstruction(pg, a.secret, ra.paths);
    const Dihedral gb = check_reconstruction(pg, b.secret, rb.paths);
    const Dihedral h = gb.inverse().compose(ga);

    std::vector<VertexId> b_of_original(pg.vertex_count());
    for (VertexId v = 0; v < b.secret.size(); ++v) b_of_original[b.secret[v]] = v;
    for (VertexId v = 0; v < a.secret.size(); ++v) {
      const VertexId w = b_of_original[a.secret[v]];
      CHECK(rb.paths[w] == apply(h, ra.paths[v]));
    }
  }
}

TEST_CASE("serial and parallel reconstruction agree") {
  for (int n = 5; n <= 12; ++n) {
    const auto pg = PathGraph::build(n);
    const auto anon = anonymize(pg.graph(), 5);
    ReconOptions serial;
    serial.policy = Policy::Serial;
    const auto rs = reconstruct_all(anon.graph, serial);
    const auto rp = reconstruct_all(anon.graph);
    CHECK(rs.gauge == rp.gauge);
    CHECK(rs.paths == rp.paths);
    CHECK(rs.work == rp.work);
  }
}

TEST_CASE("work grows like N log N") {
  double lo = 1e300, hi = 0;
  for (int n = 8; n <= 15; ++n) {
    const auto pg = PathGraph::build(n);
    const auto result = reconstruct_all(pg.graph());
    const double N = static_cast<double>(pg.vertex_count());
    const double ratio = static_cast<double>(result.work) / (N * std::log2(N));
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  CHECK(hi / lo <= 2.0);
}

TEST_CASE("rejections carry a stage") {
  const auto pg = PathGraph::build(6);
  const auto& g = pg.graph();
  CHECK(stage_of(AbstractGraph::from_edges(21, {})) == "infer_n");
  CHECK(stage_of(AbstractGraph::from_edges(48, {})) == "find_boundary_vertices");

  const auto b = find_boundary_vertices(g, 6);
  CHECK(stage_of(delete_edge(g, b[0], b[1])) == "find_boundary_vertices");

  // remove an edge between two interior paths
  for (const auto& [u, v] : g.edge_list()) {
    if (pg.label(u).level() >= 2 && pg.label(v).level() >= 2) {
      const std::string stage = stage_of(delete_edge(g, u, v));
      CHECK(stage != "accepted");
      break;
    }
  }
}
