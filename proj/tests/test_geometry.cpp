#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <tuple>

#include "oracles.hpp"
#include "pathgraph/error.hpp"
#include "pathgraph/geometry.hpp"

using namespace pathgraph;

TEST_CASE("boundary edges of the pentagon") {
  CHECK(is_boundary({0, 1}, 5));
  CHECK(is_boundary({0, 4}, 5));
  CHECK_FALSE(is_boundary({0, 2}, 5));
  CHECK_FALSE(is_boundary({1, 3}, 5));
  CHECK(boundary_index({0, 4}, 5) == 4);
  CHECK(boundary_index({2, 3}, 5) == 2);
  CHECK(boundary_index({1, 3}, 5) == -1);
  for (int i = 0; i < 5; ++i) CHECK(boundary_index(boundary_edge(i, 5), 5) == i);
}

TEST_CASE("crossing examples") {
  CHECK(edges_cross({0, 2}, {1, 3}, 5));
  CHECK_FALSE(edges_cross({0, 2}, {2, 4}, 5));
  CHECK_FALSE(edges_cross({0, 1}, {2, 3}, 5));
  CHECK(edges_cross({0, 3}, {1, 4}, 6));
  CHECK_FALSE(edges_cross({0, 3}, {4, 5}, 6));
}

TEST_CASE("crossing agrees with planar segment intersection") {
  for (int n = 4; n <= 12; ++n) {
    for (PointId a = 0; a < n; ++a)
      for (PointId b = a + 1; b < n; ++b)
        for (PointId c = 0; c < n; ++c)
          for (PointId d = c + 1; d < n; ++d) {
            const bool expected = oracle::chords_cross({a, b}, {c, d}, n);
            CHECK(edges_cross({a, b}, {c, d}, n) == expected);
            CHECK(edges_cross_unchecked({a, b}, {c, d}) == expected);
          }
  }
}

TEST_CASE("crossing is symmetric and boundary edges cross nothing") {
  const int n = 9;
  for (PointId a = 0; a < n; ++a)
    for (PointId b = a + 1; b < n; ++b)
      for (PointId c = 0; c < n; ++c)
        for (PointId d = c + 1; d < n; ++d) {
          CHECK(edges_cross({a, b}, {c, d}, n) == edges_cross({c, d}, {a, b}, n));
          if (is_boundary({a, b}, n)) CHECK_FALSE(edges_cross({a, b}, {c, d}, n));
        }
}

TEST_CASE("edge validation") {
  CHECK(make_edge(3, 1) == Edge{1, 3});
  CHECK_THROWS_AS(make_edge(2, 2), Error);
  CHECK_THROWS_AS(make_edge(-1, 2), Error);
  CHECK_THROWS_AS(check_edge({1, 5}, 5), Error);
  CHECK_NOTHROW(check_edge({1, 4}, 5));
  CHECK_THROWS_AS(edges_cross({0, 7}, {1, 2}, 5), Error);
}

TEST_CASE("edge ranks are dense and distinct") {
  std::set<int> ranks;
  for (PointId b = 1; b < kMaxPoints; ++b)
    for (PointId a = 0; a < b; ++a) ranks.insert(edge_rank({a, b}));
  CHECK(ranks.size() == static_cast<std::size_t>(edge_count_for(kMaxPoints)));
  CHECK(*ranks.begin() == 0);
  CHECK(*ranks.rbegin() == edge_count_for(kMaxPoints) - 1);
}

TEST_CASE("dihedral examples") {
  CHECK(Dihedral(5, 1, false).apply(4) == 0);
  CHECK(Dihedral(5, 0, true).apply(Edge{1, 2}) == Edge{3, 4});
  CHECK(Dihedral(5, 2, true).apply(0) == 2);
  CHECK(Dihedral(5, -1, false) == Dihedral(5, 4, false));
  CHECK(dihedral_elements(7).size() == 14);
}

TEST_CASE("dihedral group axioms") {
  for (int n = 3; n <= 12; ++n) {
    const auto group = dihedral_elements(n);
    std::set<std::tuple<int, bool>> seen;
    for (const auto& g : group) seen.emplace(g.rotation(), g.reflected());
    CHECK(seen.size() == static_cast<std::size_t>(2 * n));

    for (const auto& g : group) {
      CHECK(g.compose(g.inverse()) == Dihedral::identity(n));
      CHECK(g.inverse().compose(g) == Dihedral::identity(n));
      for (const auto& h : group) {
        const Dihedral gh = g.compose(h);
        CHECK(seen.count({gh.rotation(), gh.reflected()}) == 1);
        for (PointId p = 0; p < n; ++p) CHECK(gh.apply(p) == g.apply(h.apply(p)));
      }
    }
  }
}

TEST_CASE("symmetries preserve boundary and crossing") {
  for (int n = 5; n <= 10; ++n) {
    for (const auto& g : dihedral_elements(n)) {
      for (PointId a = 0; a < n; ++a)
        for (PointId b = a + 1; b < n; ++b) {
          const Edge e{a, b};
          CHECK(is_boundary(g.apply(e), n) == is_boundary(e, n));
          for (PointId c = 0; c < n; ++c)
            for (PointId d = c + 1; d < n; ++d) {
              const Edge f{c, d};
              CHECK(edges_cross(g.apply(e), g.apply(f), n) == edges_cross(e, f, n));
            }
        }
    }
  }
}
