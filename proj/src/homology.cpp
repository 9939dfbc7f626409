#include "twistlab/homology.hpp"

namespace twistlab {

HomologyVector abelianize(const Word& w) {
  HomologyVector v{0, 0, 0, 0};
  for (Letter l : w.letters()) v[static_cast<int>(l.gen())] += l.sign();
  return v;
}

std::int64_t intersection(const HomologyVector& u, const HomologyVector& v) {
  return u[1] * v[0] - u[0] * v[1] + u[3] * v[2] - u[2] * v[3];
}

SymplecticMatrix SymplecticMatrix::identity() {
  SymplecticMatrix s;
  for (int i = 0; i < 4; ++i) s.m[i][i] = 1;
  return s;
}

HomologyVector SymplecticMatrix::apply(const HomologyVector& v) const {
  HomologyVector out{0, 0, 0, 0};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i] += m[i][j] * v[j];
  return out;
}

SymplecticMatrix SymplecticMatrix::operator*(const SymplecticMatrix& rhs) const {
  SymplecticMatrix out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      std::int64_t s = 0;
      for (int k = 0; k < 4; ++k) s += m[i][k] * rhs.m[k][j];
      out.m[i][j] = s;
    }
  return out;
}

bool SymplecticMatrix::preserves_pairing() const {
  // columns are the images of the basis vectors
  auto col = [&](int j) {
    return HomologyVector{m[0][j], m[1][j], m[2][j], m[3][j]};
  };
  HomologyVector e[4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (intersection(col(i), col(j)) != intersection(e[i], e[j])) return false;
  return true;
}

std::int64_t SymplecticMatrix::det() const {
  const auto& a = m;
  auto det3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
    return a[r0][c0] * (a[r1][c1] * a[r2][c2] - a[r1][c2] * a[r2][c1]) -
           a[r0][c1] * (a[r1][c0] * a[r2][c2] - a[r1][c2] * a[r2][c0]) +
           a[r0][c2] * (a[r1][c0] * a[r2][c1] - a[r1][c1] * a[r2][c0]);
  };
  return a[0][0] * det3(1, 2, 3, 1, 2, 3) - a[0][1] * det3(1, 2, 3, 0, 2, 3) +
         a[0][2] * det3(1, 2, 3, 0, 1, 3) - a[0][3] * det3(1, 2, 3, 0, 1, 2);
}

SymplecticMatrix transvection(const HomologyVector& g) {
  SymplecticMatrix t = SymplecticMatrix::identity();
  HomologyVector e[4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  for (int j = 0; j < 4; ++j) {
    std::int64_t c = intersection(e[j], g);
    for (int i = 0; i < 4; ++i) t.m[i][j] = e[j][i] + c * g[i];
  }
  return t;
}

}  // namespace twistlab
