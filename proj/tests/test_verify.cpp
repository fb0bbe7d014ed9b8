#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <sstream>
#include <vector>

#include "oracles.hpp"
#include "pathgraph/error.hpp"
#include "pathgraph/pathgraph.hpp"
#include "pathgraph/reconstruct.hpp"
#include "pathgraph/verify.hpp"

using namespace pathgraph;

TEST_CASE("honest reconstructions verify") {
  for (int n = 5; n <= 9; ++n) {
    const auto pg = PathGraph::build(n);
    const std::vector<SpanningPath> labels(pg.labels().begin(), pg.labels().end());
    CHECK(check_reconstruction(pg, {}, labels) == Dihedral::identity(n));
    for (const auto& g : dihedral_elements(n)) {
      std::vector<SpanningPath> moved;
      for (const auto& p : labels) moved.push_back(apply(g.inverse(), p));
      CHECK(check_reconstruction(pg, {}, moved) == g);
    }
  }
}

TEST_CASE("corrupted label is caught with a witness") {
  const auto pg = PathGraph::build(7);
  const auto anon = anonymize(pg.graph(), 3);
  const auto result = reconstruct_all(anon.graph);
  const Dihedral match = check_reconstruction(pg, anon.secret, result.paths);
  CHECK(match.points() == 7);

  const VertexId bad = 57;
  const auto corrupted = corrupt_label(result.paths, bad);
  try {
    check_reconstruction(pg, anon.secret, corrupted);
    FAIL("corruption accepted");
  } catch (const VerificationError& e) {
    CHECK(e.code() == ErrorCode::NoDihedralMatch);
    CHECK(e.witness() == bad);
  }
}

TEST_CASE("size mismatch is malformed input") {
  const auto pg = PathGraph::build(5);
  std::vector<SpanningPath> short_list(pg.labels().begin(), pg.labels().end() - 1);
  try {
    check_reconstruction(pg, {}, short_list);
    FAIL("short label list accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MalformedLabels);
  }
}

TEST_CASE("boundary mask images") {
  const Dihedral r(5, 1, false);
  CHECK(apply(r, BoundaryMask{1}) == BoundaryMask{2});
  const Dihedral s(5, 0, true);
  // (0,1) -> (0,4), which is edge index 4
  CHECK(apply(s, BoundaryMask{1}) == BoundaryMask{1} << 4);
  for (const auto& g : dihedral_elements(6)) {
    for (BoundaryMask m = 0; m < 64; ++m) CHECK(apply(g.inverse(), apply(g, m)) == m);
  }
}

TEST_CASE("automorphism groups are dihedral") {
  for (int n = 5; n <= 6; ++n) {
    CAPTURE(n);
    const auto pg = PathGraph::build(n);
    const auto& g = pg.graph();
    const auto group = automorphism_group(g);
    CHECK(group.size() == static_cast<std::size_t>(2 * n));
    CHECK(oracle::count_automorphisms(g) == group.size());

    std::set<Permutation> members(group.begin(), group.end());
    CHECK(members.size() == group.size());
    const auto cycle = build_boundary_cycle(g, find_boundary_vertices(g, n));
    for (const auto& sigma : group) {
      for (const auto& [u, v] : g.edge_list()) CHECK(g.adjacent(sigma[u], sigma[v]));
      CHECK(acts_dihedrally(sigma, cycle));
      // closure and inverses
      for (const auto& tau : group) {
        Permutation composed(sigma.size());
        for (VertexId v = 0; v < sigma.size(); ++v) composed[v] = sigma[tau[v]];
        CHECK(members.count(composed) == 1);
      }
      Permutation inverse(sigma.size());
      for (VertexId v = 0; v < sigma.size(); ++v) inverse[sigma[v]] = v;
      CHECK(members.count(inverse) == 1);
    }

    // each symmetry of the polygon induces one of them through the labels
    for (const auto& d : dihedral_elements(n)) {
      Permutation induced(pg.vertex_count());
      for (VertexId v = 0; v < pg.vertex_count(); ++v) induced[v] = *pg.find(apply(d, pg.label(v)));
      CHECK(members.count(induced) == 1);
    }
  }
}

TEST_CASE("automorphism search cap") {
  const auto g = PathGraph::build(7).graph();
  try {
    automorphism_group(g);
    FAIL("cap ignored");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }
}

TEST_CASE("acts_dihedrally") {
  const std::vector<VertexId> cycle{4, 1, 3, 0, 2};
  Permutation rotate(5), flip(5), swap(5);
  for (std::size_t i = 0; i < 5; ++i) {
    rotate[cycle[i]] = cycle[(i + 2) % 5];
    flip[cycle[i]] = cycle[(5 - i) % 5];
    swap[i] = static_cast<VertexId>(i);
  }
  std::swap(swap[4], swap[1]);
  CHECK(acts_dihedrally(rotate, cycle));
  CHECK(acts_dihedrally(flip, cycle));
  CHECK_FALSE(acts_dihedrally(swap, cycle));
}

TEST_CASE("fault injection") {
  const auto g = PathGraph::build(5).graph();
  const auto [u, v] = g.edge_list().front();
  const auto smaller = delete_edge(g, u, v);
  CHECK(smaller.edge_count() == g.edge_count() - 1);
  CHECK_FALSE(smaller.adjacent(u, v));
  CHECK(add_edge(smaller, u, v) == g);
  CHECK_THROWS_AS(delete_edge(smaller, u, v), Error);
  CHECK_THROWS_AS(add_edge(g, u, v), Error);
}

TEST_CASE("suite passes at n = 5") {
  const auto report = invariant_suite(5);
  CHECK(report.passed());
  CHECK(report.find("diameter")->value == "4");
  CHECK(report.find("automorphisms")->value == "10");
  CHECK(report.find("vertices")->value == "20");
  CHECK(report.find("degree_law")->value == "8");
  CHECK(report.find("nonexistent") == nullptr);
  for (const auto& c : report.checks) CHECK(c.status == CheckStatus::Pass);

  std::ostringstream text;
  write_report_text(text, report);
  CHECK(text.str().find("diameter=4 PASS") != std::string::npos);

  std::ostringstream kv;
  write_report_keyvalue(kv, report);
  CHECK(kv.str().find("diameter.status=PASS") != std::string::npos);
  CHECK(kv.str().find("diameter.value=4") != std::string::npos);
  CHECK(kv.str().find("passed=1") != std::string::npos);
}

TEST_CASE("suite gates expensive checks at n = 16") {
  SuiteConfig config;
  config.cross_check_boundary_sets = false;
  const auto report = invariant_suite(16, config);
  CHECK(report.passed());
  CHECK(report.find("diameter")->status == CheckStatus::Gated);
  CHECK(report.find("automorphisms")->status == CheckStatus::Gated);
  CHECK(report.find("clique_law")->status == CheckStatus::Gated);
  CHECK(report.find("vertices")->status == CheckStatus::Pass);
  CHECK(report.find("reconstruction")->status == CheckStatus::Pass);

  std::ostringstream text;
  write_report_text(text, report);
  CHECK(text.str().find("diameter=GATED") != std::string::npos);
}

TEST_CASE("edge ratio stays under the locked bound") {
  for (int n = 5; n <= 14; ++n) {
    const auto g = PathGraph::build(n).graph();
    const double ratio = static_cast<double>(g.edge_count()) / static_cast<double>(g.vertex_count());
    CHECK(ratio <= kEdgeRatioBound);
  }
}
