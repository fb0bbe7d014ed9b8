#include "pathgraph/paths.hpp"

#include <algorithm>
#include <string>

#include "pathgraph/error.hpp"

namespace pathgraph {

namespace {

std::string edge_text(const Edge& e) {
  return "(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
}

// Calls fn(sequence) for every path obtained by deleting one edge of p and
// adding a different edge that reconnects the two pieces without crossings.
// Each (deleted, added) pair yields a distinct path, so no deduplication is
// needed.
template <class Fn>
void for_each_neighbor_sequence(const SpanningPath& p, Fn&& fn) {
  const int n = p.points();
  std::array<Edge, kMaxPoints> edges{};
  for (int i = 0; i + 1 < n; ++i) edges[i] = make_edge(p.at(i), p.at(i + 1));

  std::array<PointId, kMaxPoints> out{};
  for (int cut = 0; cut + 1 < n; ++cut) {
    const PointId left_ends[2] = {p.at(cut), p.at(0)};
    const PointId right_ends[2] = {p.at(cut + 1), p.at(n - 1)};
    const int left_count = cut == 0 ? 1 : 2;
    const int right_count = cut + 2 == n ? 1 : 2;

    for (int li = 0; li < left_count; ++li) {
      for (int ri = 0; ri < right_count; ++ri) {
        if (li == 0 && ri == 0) continue;  // the deleted edge itself
        const PointId x = left_ends[li];
        const PointId y = right_ends[ri];
        const Edge added = make_edge(x, y);
        bool crossing = false;
        for (int j = 0; j + 1 < n && !crossing; ++j) {
          crossing = j != cut && edges_cross_unchecked(added, edges[j]);
        }
        if (crossing) continue;

        int pos = 0;
        if (li == 0) {
          for (int k = 0; k <= cut; ++k) out[pos++] = p.at(k);
        } else {
          for (int k = cut; k >= 0; --k) out[pos++] = p.at(k);
        }
        if (ri == 0) {
          for (int k = cut + 1; k < n; ++k) out[pos++] = p.at(k);
        } else {
          for (int k = n - 1; k > cut; --k) out[pos++] = p.at(k);
        }
        fn(std::span<const PointId>(out.data(), static_cast<std::size_t>(n)));
      }
    }
  }
}

// Depth-first extension: the unvisited points always form the cyclic
// interval [lo, lo + remaining), and the next point is one of its extremes.
void extend(int n, std::array<PointId, kMaxPoints>& seq, int depth, int lo, int remaining,
            std::vector<SpanningPath>& out) {
  if (remaining == 0) {
    if (seq[0] < seq[static_cast<std::size_t>(n - 1)]) {
      out.push_back(SpanningPath::from_trusted(
          std::span<const PointId>(seq.data(), static_cast<std::size_t>(n)), n));
    }
    return;
  }
  seq[static_cast<std::size_t>(depth)] = lo;
  extend(n, seq, depth + 1, (lo + 1) % n, remaining - 1, out);
  if (remaining > 1) {
    seq[static_cast<std::size_t>(depth)] = (lo + remaining - 1) % n;
    extend(n, seq, depth + 1, lo, remaining - 1, out);
  }
}

}  // namespace

SpanningPath SpanningPath::from_trusted(std::span<const PointId> seq, int n) {
  SpanningPath p;
  p.n_ = n;
  const bool reverse = seq.front() > seq.back();
  for (int i = 0; i < n; ++i) {
    const auto src = reverse ? static_cast<std::size_t>(n - 1 - i) : static_cast<std::size_t>(i);
    p.seq_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(seq[src]);
  }
  for (int i = 0; i + 1 < n; ++i) {
    const Edge e = make_edge(p.at(i), p.at(i + 1));
    p.edges_.insert(e);
    const int b = boundary_index(e, n);
    if (b >= 0) p.boundary_ |= BoundaryMask{1} << b;
  }
  return p;
}

SpanningPath SpanningPath::from_sequence(std::span<const PointId> seq, int n) {
  check_supported(n);
  if (seq.size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorCode::NotPermutation, "sequence has " + std::to_string(seq.size()) +
                                               " points, expected " + std::to_string(n));
  }
  std::array<bool, kMaxPoints> seen{};
  for (const PointId x : seq) {
    if (x < 0 || x >= n || seen[static_cast<std::size_t>(x)]) {
      throw Error(ErrorCode::NotPermutation,
                  "sequence is not a permutation of 0.." + std::to_string(n - 1));
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    const Edge e = make_edge(seq[i], seq[i + 1]);
    for (std::size_t j = i + 2; j + 1 < seq.size(); ++j) {
      const Edge f = make_edge(seq[j], seq[j + 1]);
      if (edges_cross_unchecked(e, f)) {
        throw Error(ErrorCode::CrossingEdges, edge_text(e) + " crosses " + edge_text(f));
      }
    }
  }
  return from_trusted(seq, n);
}

std::vector<PointId> SpanningPath::sequence() const {
  return {seq_.begin(), seq_.begin() + n_};
}

std::vector<Edge> SpanningPath::edge_list() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(n_ - 1));
  for (int i = 0; i + 1 < n_; ++i) out.push_back(make_edge(at(i), at(i + 1)));
  return out;
}

int SpanningPath::level() const {
  return n_ - 1 - std::popcount(boundary_);
}

SpanningPath apply(const Dihedral& g, const SpanningPath& p) {
  std::array<PointId, kMaxPoints> image{};
  const int n = p.points();
  for (int i = 0; i < n; ++i) image[static_cast<std::size_t>(i)] = g.apply(p.at(i));
  return SpanningPath::from_trusted(std::span<const PointId>(image.data(), static_cast<std::size_t>(n)), n);
}

SpanningPath validate_path(std::span<const PointId> seq, int n) {
  return SpanningPath::from_sequence(seq, n);
}

void check_supported(int n) {
  if (n < kMinPoints || n > kMaxPoints) {
    throw Error(ErrorCode::UnsupportedN, "n=" + std::to_string(n) + " outside supported range [" +
                                             std::to_string(kMinPoints) + "," +
                                             std::to_string(kMaxPoints) + "]");
  }
}

std::uint64_t path_count(int n) {
  return static_cast<std::uint64_t>(n) << (n - 3);
}

std::vector<SpanningPath> enumerate_paths(int n, Policy policy) {
  check_supported(n);
  std::vector<std::vector<SpanningPath>> per_start(static_cast<std::size_t>(n));
  for_each_index(policy, n, [&](std::int64_t start) {
    std::array<PointId, kMaxPoints> seq{};
    seq[0] = static_cast<PointId>(start);
    auto& bucket = per_start[static_cast<std::size_t>(start)];
    bucket.reserve(static_cast<std::size_t>(1) << (n - 2));
    extend(n, seq, 1, static_cast<int>((start + 1) % n), n - 1, bucket);
  });

  std::vector<SpanningPath> out;
  out.reserve(path_count(n));
  for (auto& bucket : per_start) out.insert(out.end(), bucket.begin(), bucket.end());
  std::sort(out.begin(), out.end(),
            [](const SpanningPath& x, const SpanningPath& y) { return x.edges() < y.edges(); });
  return out;
}

std::vector<SpanningPath> path_neighbors(const SpanningPath& p) {
  std::vector<SpanningPath> out;
  const int n = p.points();
  for_each_neighbor_sequence(p, [&](std::span<const PointId> seq) {
    out.push_back(SpanningPath::from_trusted(seq, n));
  });
  std::sort(out.begin(), out.end(),
            [](const SpanningPath& x, const SpanningPath& y) { return x.edges() < y.edges(); });
  return out;
}

int count_path_neighbors(const SpanningPath& p) {
  int count = 0;
  for_each_neighbor_sequence(p, [&](std::span<const PointId>) { ++count; });
  return count;
}

std::optional<int> path_type(const SpanningPath& p) {
  const int n = p.points();
  int first = -1;
  int last = -1;
  int diagonals = 0;
  for (int i = 0; i + 1 < n; ++i) {
    if (boundary_index(make_edge(p.at(i), p.at(i + 1)), n) < 0) {
      if (first < 0) first = i;
      last = i;
      ++diagonals;
    }
  }
  if (diagonals < 2) return std::nullopt;
  // k - 1 leading boundary edges, l - 1 trailing ones
  const int k = first + 1;
  const int l = (n - 2 - last) + 1;
  return k + l;
}

}  // namespace pathgraph
