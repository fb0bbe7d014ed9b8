#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>

#include "pathgraph/geometry.hpp"

namespace pathgraph {

/// Fixed-width bitmask over all point pairs, indexed by edge_rank. Serves as
/// the canonical key of a spanning path (a path is determined by its edges).
class EdgeSet {
 public:
  static constexpr std::size_t kWords = (edge_count_for(kMaxPoints) + 63) / 64;

  constexpr void insert(const Edge& e) { set_bit(edge_rank(e)); }
  constexpr void erase(const Edge& e) { clear_bit(edge_rank(e)); }
  constexpr bool contains(const Edge& e) const { return test_bit(edge_rank(e)); }

  constexpr void set_bit(int rank) { words_[rank >> 6] |= std::uint64_t{1} << (rank & 63); }
  constexpr void clear_bit(int rank) { words_[rank >> 6] &= ~(std::uint64_t{1} << (rank & 63)); }
  constexpr bool test_bit(int rank) const { return (words_[rank >> 6] >> (rank & 63)) & 1U; }

  constexpr int size() const {
    int total = 0;
    for (auto w : words_) total += std::popcount(w);
    return total;
  }

  constexpr bool empty() const { return size() == 0; }

  constexpr EdgeSet operator^(const EdgeSet& o) const {
    EdgeSet r;
    for (std::size_t i = 0; i < kWords; ++i) r.words_[i] = words_[i] ^ o.words_[i];
    return r;
  }
  constexpr EdgeSet operator&(const EdgeSet& o) const {
    EdgeSet r;
    for (std::size_t i = 0; i < kWords; ++i) r.words_[i] = words_[i] & o.words_[i];
    return r;
  }
  constexpr EdgeSet operator|(const EdgeSet& o) const {
    EdgeSet r;
    for (std::size_t i = 0; i < kWords; ++i) r.words_[i] = words_[i] | o.words_[i];
    return r;
  }

  constexpr bool is_subset_of(const EdgeSet& o) const {
    for (std::size_t i = 0; i < kWords; ++i) {
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    }
    return true;
  }

  constexpr auto operator<=>(const EdgeSet&) const = default;

 private:
  std::array<std::uint64_t, kWords> words_{};
};

/// Size of the symmetric difference.
inline int distance(const EdgeSet& x, const EdgeSet& y) { return (x ^ y).size(); }

/// Bit i set iff the boundary edge (i, i+1 mod n) is present.
using BoundaryMask = std::uint32_t;

static_assert(kMaxPoints <= 32, "BoundaryMask must hold one bit per boundary edge");

constexpr BoundaryMask full_boundary(int n) {
  return n == 32 ? ~BoundaryMask{0} : (BoundaryMask{1} << n) - 1;
}

}  // namespace pathgraph
