#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "pathgraph/graph.hpp"

namespace pathgraph {

/// Identifier written into anonymized graph headers. The permutation is a
/// Fisher-Yates shuffle (i = N-1 down to 1, swap with j in [0, i]) driven by
/// std::mt19937_64 seeded with the 64-bit seed; j is drawn by rejecting raw
/// outputs below 2^64 mod (i+1) and reducing modulo i+1. Every step is fixed
/// by the C++ standard, so the result is identical on all platforms.
inline constexpr std::string_view kPermutationAlgorithm = "mt19937_64-fisher-yates-rejection-v1";

/// Uniform permutation of 0..count-1; element i is the new id of vertex i.
std::vector<VertexId> seeded_permutation(std::size_t count, std::uint64_t seed);

}  // namespace pathgraph
