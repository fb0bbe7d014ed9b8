#pragma once

// Combinatorial model of n points in convex position. Points are labeled
// 0..n-1 counterclockwise around the hull, so every geometric predicate
// reduces to cyclic order.

#include <compare>
#include <cstdint>
#include <vector>

namespace pathgraph {

using PointId = int;

// Largest point count the fixed-width edge masks can represent.
inline constexpr int kMaxPoints = 20;

// Smallest n for which the path graph determines the paths up to symmetry.
inline constexpr int kMinPoints = 5;

struct Edge {
  PointId a = 0;
  PointId b = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Canonical form (min, max). Throws OutOfRange if a == b or either endpoint
/// is negative.
Edge make_edge(PointId x, PointId y);

/// Rank of a canonical edge among all point pairs; independent of n:
/// rank(a, b) = b(b-1)/2 + a.
constexpr int edge_rank(const Edge& e) { return e.b * (e.b - 1) / 2 + e.a; }

constexpr int edge_count_for(int n) { return n * (n - 1) / 2; }

void check_point(PointId p, int n);
void check_edge(const Edge& e, int n);

bool is_boundary(const Edge& e, int n);

/// Index i of a boundary edge (i, i+1 mod n); -1 for diagonals.
int boundary_index(const Edge& e, int n);

/// The boundary edge (i, i+1 mod n).
Edge boundary_edge(int index, int n);

/// True iff the endpoints strictly interleave in cyclic order. Edges that
/// share an endpoint never cross.
bool edges_cross(const Edge& e1, const Edge& e2, int n);

// Unchecked variant for inner loops; both edges must be canonical.
constexpr bool edges_cross_unchecked(const Edge& e1, const Edge& e2) {
  if (e1.a == e2.a || e1.a == e2.b || e1.b == e2.a || e1.b == e2.b) return false;
  const bool a_inside = e1.a < e2.a && e2.a < e1.b;
  const bool b_inside = e1.a < e2.b && e2.b < e1.b;
  return a_inside != b_inside;
}

/// One of the 2n symmetries of the regular n-gon:
/// i -> (i + rotation) mod n, or i -> (rotation - i) mod n when reflected.
class Dihedral {
 public:
  Dihedral(int n, int rotation, bool reflected);

  static Dihedral identity(int n) { return Dihedral(n, 0, false); }

  int points() const { return n_; }
  int rotation() const { return rotation_; }
  bool reflected() const { return reflected_; }

  PointId apply(PointId p) const;
  Edge apply(const Edge& e) const;

  /// (*this) after `inner`: x -> this(inner(x)).
  Dihedral compose(const Dihedral& inner) const;
  Dihedral inverse() const;

  bool operator==(const Dihedral&) const = default;

 private:
  int n_;
  int rotation_;
  bool reflected_;
};

/// All 2n elements: rotations first, then reflections, each by rotation.
std::vector<Dihedral> dihedral_elements(int n);

}  // namespace pathgraph
