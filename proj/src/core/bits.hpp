#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace kcw {

// Sets over index ranges of at most 64 elements, packed into one word.
using Mask = std::uint64_t;

inline Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
inline bool has_bit(Mask m, int i) { return (m >> i) & 1; }
inline Mask with_bit(Mask m, int i) { return m | (Mask{1} << i); }
inline int popcount(Mask m) { return std::popcount(m); }
inline bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

inline std::vector<int> mask_indices(Mask m) {
  std::vector<int> out;
  while (m) {
    int i = std::countr_zero(m);
    out.push_back(i);
    m &= m - 1;
  }
  return out;
}

}  // namespace kcw
