#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "pathgraph/execution.hpp"
#include "pathgraph/geometry.hpp"
#include "pathgraph/graph.hpp"
#include "pathgraph/pathgraph.hpp"
#include "pathgraph/reconstruct.hpp"

namespace pathgraph {

/// The unique g in D_n with g(recovered[v]) == original.label(secret[v]) for
/// every abstract vertex v. An empty secret means the identity relabeling.
/// Throws VerificationError(NoDihedralMatch) whose witness is the first
/// vertex where the longest-surviving candidate failed.
Dihedral check_reconstruction(const PathGraph& original, std::span<const VertexId> secret,
                              std::span<const SpanningPath> recovered);

/// The symmetry taking gauge boundary edge i to the edge actually omitted
/// by the ground-truth label of gauge.cycle[i].
Dihedral gauge_alignment(const PathGraph& original, std::span<const VertexId> secret,
                         const Gauge& gauge);

/// Image of a boundary-edge mask under g.
BoundaryMask apply(const Dihedral& g, BoundaryMask mask);

using Permutation = std::vector<VertexId>;

/// Every adjacency-preserving bijection of g, by backtracking over colour
/// classes from iterated (degree, neighbour colours) refinement. Throws
/// TooLarge above `vertex_cap`.
std::vector<Permutation> automorphism_group(const AbstractGraph& g, std::size_t vertex_cap = 48);

/// True iff sigma maps `cycle` onto itself as a rotation or reflection.
bool acts_dihedrally(const Permutation& sigma, std::span<const VertexId> cycle);

// Fault injection for negative-path tests.
std::vector<SpanningPath> corrupt_label(std::span<const SpanningPath> paths, VertexId v);
AbstractGraph delete_edge(const AbstractGraph& g, VertexId u, VertexId v);
AbstractGraph add_edge(const AbstractGraph& g, VertexId u, VertexId v);

enum class CheckStatus { Pass, Fail, Gated };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string value;
  std::string witness;  // always set when status == Fail
  double millis = 0.0;
};

struct VerificationReport {
  int n = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
  const CheckResult* find(const std::string& name) const;
};

// |E|/N measured over 5 <= n <= 16: 2.25 at n = 5 and 6, then strictly
// decreasing (2.0015 at n = 16). Locked at the observed maximum.
inline constexpr double kEdgeRatioBound = 2.25;

struct SuiteConfig {
  std::uint64_t seed = 0;
  std::size_t diameter_cap = 10000;
  std::size_t automorphism_cap = 48;
  int clique_max_n = 8;
  int exhaustive_max_n = 10;
  bool cross_check_boundary_sets = true;
  Policy policy = Policy::Parallel;
};

/// Runs every quantitative check at size n. Expensive checks beyond their
/// caps are reported as Gated.
VerificationReport invariant_suite(int n, const SuiteConfig& config = {});

/// "name=value STATUS" per check; gated checks print "name=GATED".
void write_report_text(std::ostream& out, const VerificationReport& report);

/// key=value lines: name.status, name.value, name.witness, name.ms.
void write_report_keyvalue(std::ostream& out, const VerificationReport& report);

const char* to_string(CheckStatus status);

}  // namespace pathgraph
