#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

namespace snark {

// Fixed-capacity edge-index set. Cubic graphs on <= 64 vertices have at most
// 96 base edges, so two words always suffice.
struct EdgeBits {
  static constexpr int kCapacity = 128;

  std::array<std::uint64_t, 2> w{0, 0};

  static EdgeBits all(int m) {
    EdgeBits b;
    for (int i = 0; i < m; ++i) b.set(i);
    return b;
  }
  static EdgeBits of(const std::vector<int>& ids) {
    EdgeBits b;
    for (int i : ids) b.set(i);
    return b;
  }

  void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  bool none() const { return w[0] == 0 && w[1] == 0; }
  bool any() const { return !none(); }
  int count() const { return std::popcount(w[0]) + std::popcount(w[1]); }

  // Lowest set index, or -1.
  int first() const {
    if (w[0]) return std::countr_zero(w[0]);
    if (w[1]) return 64 + std::countr_zero(w[1]);
    return -1;
  }
  // Lowest set index strictly greater than i, or -1.
  int next(int i) const {
    ++i;
    if (i >= kCapacity) return -1;
    if (i < 64) {
      std::uint64_t rest = w[0] & (~std::uint64_t{0} << i);
      if (rest) return std::countr_zero(rest);
      if (w[1]) return 64 + std::countr_zero(w[1]);
      return -1;
    }
    std::uint64_t rest = w[1] & (~std::uint64_t{0} << (i - 64));
    if (rest) return 64 + std::countr_zero(rest);
    return -1;
  }

  EdgeBits operator|(const EdgeBits& o) const { return {{w[0] | o.w[0], w[1] | o.w[1]}}; }
  EdgeBits operator&(const EdgeBits& o) const { return {{w[0] & o.w[0], w[1] & o.w[1]}}; }
  EdgeBits operator^(const EdgeBits& o) const { return {{w[0] ^ o.w[0], w[1] ^ o.w[1]}}; }
  EdgeBits operator~() const { return {{~w[0], ~w[1]}}; }
  EdgeBits& operator|=(const EdgeBits& o) { w[0] |= o.w[0]; w[1] |= o.w[1]; return *this; }
  EdgeBits& operator&=(const EdgeBits& o) { w[0] &= o.w[0]; w[1] &= o.w[1]; return *this; }
  EdgeBits& operator^=(const EdgeBits& o) { w[0] ^= o.w[0]; w[1] ^= o.w[1]; return *this; }

  bool operator==(const EdgeBits& o) const { return w == o.w; }
  bool operator!=(const EdgeBits& o) const { return w != o.w; }
  bool is_subset_of(const EdgeBits& o) const {
    return (w[0] & ~o.w[0]) == 0 && (w[1] & ~o.w[1]) == 0;
  }
  bool intersects(const EdgeBits& o) const {
    return (w[0] & o.w[0]) != 0 || (w[1] & o.w[1]) != 0;
  }

  std::vector<int> to_ids() const {
    std::vector<int> ids;
    for (int i = first(); i >= 0; i = next(i)) ids.push_back(i);
    return ids;
  }
};

// Lexicographic order on the ascending element lists, i.e. the set containing
// the smallest element of the symmetric difference comes first.
inline bool lex_less(const EdgeBits& a, const EdgeBits& b) {
  EdgeBits d = a ^ b;
  int i = d.first();
  if (i < 0) return false;
  return a.test(i);
}

}  // namespace snark
