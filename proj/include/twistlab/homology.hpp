#pragma once

#include <array>
#include <cstdint>

#include "twistlab/word.hpp"

namespace twistlab {

// Exponent sums on (a1, b1, a2, b2).
using HomologyVector = std::array<std::int64_t, 4>;

HomologyVector abelianize(const Word& w);

inline HomologyVector operator+(HomologyVector u, const HomologyVector& v) {
  for (int i = 0; i < 4; ++i) u[i] += v[i];
  return u;
}

inline bool is_zero(const HomologyVector& v) {
  return v == HomologyVector{0, 0, 0, 0};
}

// Algebraic intersection pairing on H1, normalized so that the twist along
// a nonseparating curve g acts as x -> x + <x, g> g.
std::int64_t intersection(const HomologyVector& u, const HomologyVector& v);

// Integer 4x4 matrix acting on homology vectors (columns = generator images).
struct SymplecticMatrix {
  std::array<std::array<std::int64_t, 4>, 4> m{};

  static SymplecticMatrix identity();
  HomologyVector apply(const HomologyVector& v) const;
  SymplecticMatrix operator*(const SymplecticMatrix& rhs) const;
  bool preserves_pairing() const;
  std::int64_t det() const;

  friend bool operator==(const SymplecticMatrix&, const SymplecticMatrix&) = default;
};

// Transvection x -> x + <x, g> g along the class g.
SymplecticMatrix transvection(const HomologyVector& g);

}  // namespace twistlab
