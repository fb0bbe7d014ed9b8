#include "pathgraph/random.hpp"

#include <numeric>
#include <random>
#include <utility>

namespace pathgraph {

namespace {

std::uint64_t uniform_below(std::mt19937_64& engine, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  std::uint64_t x = engine();
  while (x < threshold) x = engine();
  return x % bound;
}

}  // namespace

std::vector<VertexId> seeded_permutation(std::size_t count, std::uint64_t seed) {
  std::vector<VertexId> perm(count);
  std::iota(perm.begin(), perm.end(), VertexId{0});
  std::mt19937_64 engine(seed);
  for (std::size_t i = count; i > 1; --i) {
    const auto j = static_cast<std::size_t>(uniform_below(engine, i));
    std::swap(perm[i - 1], perm[j]);
  }
  return perm;
}

}  // namespace pathgraph
