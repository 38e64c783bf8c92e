#pragma once

// Brute-force reference computations shared by the unit tests and the
// acceptance run.
#include <array>
#include <random>

#include "twocat/lattice.hpp"
#include "twocat/pgm.hpp"

namespace twocat::oracle {

// Z/2-labellings of the triangles of Δ^p that are 2-cocycles. For a
// one-object, one-1-cell category with 2-cells Z/2 these are the p-simplices.
inline long z2_cocycles(int p) {
  std::vector<std::array<int, 3>> tri;
  for (int i = 0; i <= p; ++i)
    for (int j = i + 1; j <= p; ++j)
      for (int k = j + 1; k <= p; ++k) tri.push_back({i, j, k});
  auto at = [&](long mask, int i, int j, int k) {
    for (std::size_t t = 0; t < tri.size(); ++t)
      if (tri[t] == std::array<int, 3>{i, j, k}) return int((mask >> t) & 1);
    return 0;
  };
  long n = 0;
  for (long mask = 0; mask < (1L << tri.size()); ++mask) {
    bool ok = true;
    for (int i = 0; i <= p && ok; ++i)
      for (int j = i + 1; j <= p && ok; ++j)
        for (int k = j + 1; k <= p && ok; ++k)
          for (int l = k + 1; l <= p && ok; ++l)
            ok = ((at(mask, j, k, l) + at(mask, i, k, l) + at(mask, i, j, l) + at(mask, i, j, k)) % 2) == 0;
    n += ok;
  }
  return n;
}

inline Int det(std::vector<std::vector<Int>> a) {
  // Bareiss
  const int n = int(a.size());
  Int sign = 1, prev = 1;
  for (int k = 0; k < n; ++k) {
    int p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

inline void subsets(int n, int k, int from, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (int(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = from; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Invariant factors as quotients of successive gcds of k×k minors.
inline std::vector<Int> divisor_factors(const IntMatrix& M) {
  std::vector<Int> out;
  Int prev = 1;
  for (int k = 1; k <= std::min(M.rows(), M.cols()); ++k) {
    std::vector<std::vector<int>> R, C;
    std::vector<int> cur;
    subsets(M.rows(), k, 0, cur, R);
    subsets(M.cols(), k, 0, cur, C);
    Int g = 0;
    for (auto& r : R)
      for (auto& c : C) {
        std::vector<std::vector<Int>> a(k, std::vector<Int>(k));
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) a[i][j] = M(r[i], c[j]);
        Int d = det(a);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

inline IntMatrix random_matrix(std::mt19937& rng, int trial) {
  std::uniform_int_distribution<int> ent(-9, 9), zero(0, 3);
  IntMatrix M(6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) M(i, j) = zero(rng) == 0 ? 0 : ent(rng);
  if (trial % 10 == 0)
    for (int j = 0; j < 6; ++j) M(5, j) = M(0, j) * 3 - M(1, j);  // force rank drops
  return M;
}

inline CommMonoid cyclic(int k) {
  CommMonoid M;
  for (int a = 0; a < k; ++a) M.names.push_back(std::to_string(a));
  M.add.assign(k, std::vector<int>(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) M.add[a][b] = (a + b) % k;
  return M;
}

inline CommMonoid max2() {
  CommMonoid M;
  M.names = {"0", "1"};
  M.add = {{0, 1}, {1, 1}};
  return M;
}

// U and U⁻¹ from random elementary operations
inline std::pair<IntMatrix, IntMatrix> unimodular(int g, std::mt19937& rng) {
  IntMatrix U = IntMatrix::identity(g), V = IntMatrix::identity(g);
  std::uniform_int_distribution<int> pick(0, g - 1), c(-2, 2);
  for (int step = 0; step < 3 * g; ++step) {
    const int i = pick(rng), j = pick(rng), k = c(rng);
    if (i == j || k == 0) continue;
    IntMatrix E = IntMatrix::identity(g), Ei = IntMatrix::identity(g);
    E(i, j) = k;
    Ei(i, j) = -k;
    U = E * U;
    V = V * Ei;
  }
  return {U, V};
}

inline IntMatrix power(const IntMatrix& A, int n) {
  IntMatrix R = IntMatrix::identity(A.rows());
  for (int i = 0; i < n; ++i) R = R * A;
  return R;
}

// Truncated colimit: the image of the 12th power of the product of all
// monoid elements, modulo rel. Every action here stabilizes by then.
inline FGAbGroup stable_image(const std::vector<IntMatrix>& acts, const IntMatrix& rel, int g) {
  IntMatrix P = IntMatrix::identity(g);
  for (auto& a : acts) P = P * a;
  const IntMatrix E = power(P, 12);
  return subquotient(IntMatrix::hcat(E, rel), rel, g).group;
}

struct LocalizationCase {
  int g = 0;
  IntMatrix rel;
  std::vector<IntMatrix> acts;
  CommMonoid M;
};

// Idempotent actions of {0<1} and permutation actions of Z/k, conjugated by
// a random unimodular matrix, on Z^g modulo n·I.
inline LocalizationCase random_localization(std::mt19937& rng, int trial) {
  std::uniform_int_distribution<int> gd(1, 4), nd(0, 4), kd(2, 4), bit(0, 1);
  LocalizationCase c;
  const bool idem = trial % 2 == 0;
  const int k = kd(rng);
  c.g = idem ? gd(rng) : k;
  const int n = nd(rng);
  c.rel = IntMatrix(c.g, n == 1 ? 0 : c.g);
  if (n != 1)
    for (int i = 0; i < c.g; ++i) c.rel(i, i) = n;
  auto [U, V] = unimodular(c.g, rng);
  if (idem) {
    IntMatrix D(c.g, c.g);
    for (int i = 0; i < c.g; ++i) D(i, i) = bit(rng);
    c.acts = {IntMatrix::identity(c.g), U * D * V};
    c.M = max2();
  } else {
    IntMatrix C(c.g, c.g);
    for (int i = 0; i < c.g; ++i) C((i + 1) % c.g, i) = 1;
    for (int j = 0; j < k; ++j) c.acts.push_back(U * power(C, j) * V);
    c.M = cyclic(k);
  }
  return c;
}

}  // namespace twocat::oracle
