#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace g2t {

/// Basis blade e^{i1..ik} of the exterior algebra over R^n, n <= 30, stored
/// as a bitset: basis index i (1-based) occupies bit i-1. The empty blade is
/// the scalar unit.
struct Blade {
  static constexpr int kMaxDim = 30;

  std::uint32_t mask = 0;

  Blade() = default;
  explicit Blade(std::uint32_t m) : mask(m) {}

  static Blade from_indices(const std::vector<int>& idx) {
    Blade b;
    for (int i : idx) {
      if (i < 1 || i > kMaxDim)
        throw std::invalid_argument("Blade: index out of range");
      std::uint32_t bit = 1u << (i - 1);
      if (b.mask & bit)
        throw std::invalid_argument("Blade: duplicate basis index");
      b.mask |= bit;
    }
    return b;
  }

  [[nodiscard]] int grade() const { return std::popcount(mask); }
  [[nodiscard]] bool contains(int i) const {
    return (mask >> (i - 1)) & 1u;
  }
  [[nodiscard]] Blade without(int i) const {
    return Blade(mask & ~(1u << (i - 1)));
  }

  [[nodiscard]] std::vector<int> indices() const {
    std::vector<int> out;
    for (int i = 1; i <= kMaxDim; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }

  friend bool operator==(Blade a, Blade b) { return a.mask == b.mask; }
  friend bool operator!=(Blade a, Blade b) { return a.mask != b.mask; }
};

/// Canonical blade order: grade first, then lexicographic on the sorted index
/// tuple. For equal grades the lexicographically smaller tuple is the one
/// owning the lowest bit at which the two masks differ.
struct BladeCanonicalLess {
  bool operator()(Blade a, Blade b) const {
    int ga = a.grade(), gb = b.grade();
    if (ga != gb) return ga < gb;
    std::uint32_t diff = a.mask ^ b.mask;
    if (diff == 0) return false;
    std::uint32_t low = diff & (~diff + 1);
    return (a.mask & low) != 0;
  }
};

/// Sign of e^a wedge e^b: 0 if the blades overlap, otherwise the parity of
/// the number of index pairs (i in a, j in b) with i > j (merge inversions).
inline int wedge_sign(Blade a, Blade b) {
  if (a.mask & b.mask) return 0;
  int inversions = 0;
  std::uint32_t bb = b.mask;
  while (bb) {
    int j = std::countr_zero(bb);  // 0-based bit of the next index of b
    inversions += std::popcount(a.mask >> (j + 1));
    bb &= bb - 1;
  }
  return (inversions & 1) ? -1 : 1;
}

/// Sign (-1)^{p-1} where p is the 1-based position of index i inside blade a.
/// Caller guarantees a.contains(i).
inline int interior_sign(int i, Blade a) {
  int below = std::popcount(a.mask & ((1u << (i - 1)) - 1u));
  return (below & 1) ? -1 : 1;
}

inline Blade full_blade(int dim) { return Blade((1u << dim) - 1u); }

inline Blade complement(Blade a, int dim) {
  return Blade(full_blade(dim).mask & ~a.mask);
}

/// All blades of the given grade in canonical (lexicographic) order.
std::vector<Blade> blades_of_grade(int dim, int grade);

}  // namespace g2t
