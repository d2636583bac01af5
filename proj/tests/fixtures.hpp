#pragma once

#include <random>

#include "nilgen/algebra.hpp"

namespace nilgen::testing {

/// [b1,b2] = b3.
inline NilAlgebra heisenberg(int p) {
  LieTable t(p, 3);
  t.set(0, 1, std::vector<Term>{{2, 1}});
  return NilAlgebra(t, {1, 1, 2}, {std::nullopt, std::nullopt, Definition{0, 1}});
}

/// Free nilpotent of class 3 on two generators: b3=[b1,b2], b4=[b1,b3], b5=[b2,b3].
inline NilAlgebra free_class3_rank2(int p) {
  LieTable t(p, 5);
  t.set(0, 1, std::vector<Term>{{2, 1}});
  t.set(0, 2, std::vector<Term>{{3, 1}});
  t.set(1, 2, std::vector<Term>{{4, 1}});
  return NilAlgebra(t, {1, 1, 2, 3, 3},
                    {std::nullopt, std::nullopt, Definition{0, 1}, Definition{0, 2}, Definition{1, 2}});
}

/// Free nilpotent of class 2 on three generators.
inline NilAlgebra free_class2_rank3(int p) {
  LieTable t(p, 6);
  t.set(0, 1, std::vector<Term>{{3, 1}});
  t.set(0, 2, std::vector<Term>{{4, 1}});
  t.set(1, 2, std::vector<Term>{{5, 1}});
  return NilAlgebra(t, {1, 1, 1, 2, 2, 2},
                    {std::nullopt, std::nullopt, std::nullopt, Definition{0, 1}, Definition{0, 2}, Definition{1, 2}});
}

/// Filiform of dimension 4: b3=[b1,b2], b4=[b1,b3]; type [2,1,1][1].
inline NilAlgebra filiform4(int p) {
  LieTable t(p, 4);
  t.set(0, 1, std::vector<Term>{{2, 1}});
  t.set(0, 2, std::vector<Term>{{3, 1}});
  return NilAlgebra(t, {1, 1, 2, 3}, {std::nullopt, std::nullopt, Definition{0, 1}, Definition{0, 2}});
}

/// Heisenberg plus a central line: type [3,1][2].
inline NilAlgebra heisenberg_plus_line(int p) {
  LieTable t(p, 4);
  t.set(0, 1, std::vector<Term>{{3, 1}});
  return NilAlgebra(t, {1, 1, 1, 2}, {std::nullopt, std::nullopt, std::nullopt, Definition{0, 1}});
}

inline Matrix random_invertible(int p, int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(0, p - 1);
  for (;;) {
    Matrix m(p, n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) m(r, c) = static_cast<Elem>(d(rng));
    if (inverse(m)) return m;
  }
}

inline Vec random_vec(int p, int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(0, p - 1);
  Vec v(n);
  for (auto& e : v) e = static_cast<Elem>(d(rng));
  return v;
}

}  // namespace nilgen::testing
