#include "pathgraph/geometry.hpp"

#include <string>

#include "pathgraph/error.hpp"

namespace pathgraph {

namespace {

int mod(int x, int n) {
  const int r = x % n;
  return r < 0 ? r + n : r;
}

}  // namespace

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnsupportedN: return "UnsupportedN";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NotPermutation: return "NotPermutation";
    case ErrorCode::CrossingEdges: return "CrossingEdges";
    case ErrorCode::MalformedGraph: return "MalformedGraph";
    case ErrorCode::MalformedLabels: return "MalformedLabels";
    case ErrorCode::NotAnEdge: return "NotAnEdge";
    case ErrorCode::DiameterTooExpensive: return "DiameterTooExpensive";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Io: return "Io";
    case ErrorCode::NotAPathGraphOrder: return "NotAPathGraphOrder";
    case ErrorCode::BoundaryCountMismatch: return "BoundaryCountMismatch";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::LevelOutOfRange: return "LevelOutOfRange";
    case ErrorCode::BoundarySetMismatch: return "BoundarySetMismatch";
    case ErrorCode::EmptyLowerNeighborhood: return "EmptyLowerNeighborhood";
    case ErrorCode::ArcStructureInvalid: return "ArcStructureInvalid";
    case ErrorCode::NoLeafFound: return "NoLeafFound";
    case ErrorCode::AmbiguousCompletion: return "AmbiguousCompletion";
    case ErrorCode::NoCompletion: return "NoCompletion";
    case ErrorCode::InconsistentOutput: return "InconsistentOutput";
    case ErrorCode::NoDihedralMatch: return "NoDihedralMatch";
  }
  return "Unknown";
}

Edge make_edge(PointId x, PointId y) {
  if (x == y || x < 0 || y < 0) {
    throw Error(ErrorCode::OutOfRange,
                "invalid edge (" + std::to_string(x) + "," + std::to_string(y) + ")");
  }
  return x < y ? Edge{x, y} : Edge{y, x};
}

void check_point(PointId p, int n) {
  if (p < 0 || p >= n) {
    throw Error(ErrorCode::OutOfRange,
                "point " + std::to_string(p) + " out of range for n=" + std::to_string(n));
  }
}

void check_edge(const Edge& e, int n) {
  check_point(e.a, n);
  check_point(e.b, n);
  if (e.a >= e.b) {
    throw Error(ErrorCode::OutOfRange, "edge is not canonical");
  }
}

bool is_boundary(const Edge& e, int n) {
  check_edge(e, n);
  return boundary_index(e, n) >= 0;
}

int boundary_index(const Edge& e, int n) {
  if (e.b == e.a + 1) return e.a;
  if (e.a == 0 && e.b == n - 1) return n - 1;
  return -1;
}

Edge boundary_edge(int index, int n) {
  return make_edge(index, (index + 1) % n);
}

bool edges_cross(const Edge& e1, const Edge& e2, int n) {
  check_edge(e1, n);
  check_edge(e2, n);
  return edges_cross_unchecked(e1, e2);
}

Dihedral::Dihedral(int n, int rotation, bool reflected)
    : n_(n), rotation_(0), reflected_(reflected) {
  if (n < 3) {
    throw Error(ErrorCode::UnsupportedN, "dihedral group needs n >= 3");
  }
  rotation_ = mod(rotation, n);
}

PointId Dihedral::apply(PointId p) const {
  return reflected_ ? mod(rotation_ - p, n_) : mod(p + rotation_, n_);
}

Edge Dihedral::apply(const Edge& e) const {
  return make_edge(apply(e.a), apply(e.b));
}

Dihedral Dihedral::compose(const Dihedral& inner) const {
  // this(x) = s*x + r, inner(x) = t*x + q  =>  this(inner(x)) = s*t*x + s*q + r
  const int s = reflected_ ? -1 : 1;
  return Dihedral(n_, s * inner.rotation_ + rotation_, reflected_ != inner.reflected_);
}

Dihedral Dihedral::inverse() const {
  if (reflected_) return *this;
  return Dihedral(n_, -rotation_, false);
}

std::vector<Dihedral> dihedral_elements(int n) {
  std::vector<Dihedral> out;
  out.reserve(2 * static_cast<std::size_t>(n));
  for (const bool reflected : {false, true}) {
    for (int r = 0; r < n; ++r) out.emplace_back(n, r, reflected);
  }
  return out;
}

}  // namespace pathgraph
