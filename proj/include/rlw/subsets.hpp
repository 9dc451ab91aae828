#ifndef RLW_SUBSETS_HPP
#define RLW_SUBSETS_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace rlw {

// Subsets of a carrier 0..n-1, n <= 64.
using Mask = std::uint64_t;

inline constexpr int kMaxSubsetCarrier = 64;

inline Mask bit(int i) { return Mask{1} << i; }

inline bool contains(Mask m, int i) { return (m >> i) & 1u; }

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask full_mask(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline std::vector<int> mask_to_indices(Mask m) {
  std::vector<int> out;
  while (m) {
    int i = std::countr_zero(m);
    out.push_back(i);
    m &= m - 1;
  }
  return out;
}

inline Mask indices_to_mask(const std::vector<int>& xs) {
  Mask m = 0;
  for (int x : xs) m |= bit(x);
  return m;
}

// Calls fn(blocks) for every set partition of {0..n-1}, in restricted-growth
// order. blocks[i] is the block id of element i; ids appear in first-touch
// order, so block 0 always contains element 0.
template <typename Fn>
void for_each_partition(int n, Fn&& fn) {
  if (n == 0) return;
  std::vector<int> blocks(n, 0);
  auto rec = [&](auto&& self, int i, int max_block) -> void {
    if (i == n) {
      fn(static_cast<const std::vector<int>&>(blocks));
      return;
    }
    for (int b = 0; b <= max_block + 1; ++b) {
      blocks[i] = b;
      self(self, i + 1, std::max(max_block, b));
    }
  };
  rec(rec, 1, 0);
}

}  // namespace rlw

#endif
