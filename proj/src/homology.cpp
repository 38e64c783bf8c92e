#include "twocat/homology.hpp"

#include <stdexcept>

#include "twocat/two_category.hpp"

namespace twocat {

void require_trusted(int n, int N) {
  if (n < 0 || n > N - 1)
    throw AxiomError("truncation", "H_" + std::to_string(n) + " needs nerve level " + std::to_string(n + 1) +
                                       " but the truncation is " + std::to_string(N));
}

ChainComplex chain_complex(const TruncSimplicialSet& X) {
  ChainComplex C;
  C.N = X.N;
  C.basis.resize(X.N + 1);
  C.pos.resize(X.N + 1);
  C.d.resize(X.N + 1);
  for (int n = 0; n <= X.N; ++n) {
    C.pos[n].assign(X.count[n], -1);
    for (int x = 0; x < X.count[n]; ++x)
      if (!X.degenerate[n][x]) {
        C.pos[n][x] = int(C.basis[n].size());
        C.basis[n].push_back(x);
      }
  }
  for (int n = 1; n <= X.N; ++n) {
    SparseIntMatrix d(C.rank(n - 1), C.rank(n));
    for (int c = 0; c < C.rank(n); ++c) {
      const int x = C.basis[n][c];
      for (int i = 0; i <= n; ++i) {
        const int r = C.pos[n - 1][X.face[n][i][x]];
        if (r >= 0) d.add(r, c, i % 2 ? -1 : 1);
      }
    }
    C.d[n] = std::move(d);
  }
  return C;
}

std::string check_boundary_squared(const ChainComplex& C) {
  for (int n = 2; n <= C.N; ++n) {
    // (d[n-1] d[n]) computed column by column through the row form of d[n-1].
    const SparseIntMatrix &a = C.d[n - 1], &b = C.d[n];
    std::vector<std::vector<std::pair<int, long>>> bcols(b.cols);
    for (int i = 0; i < b.rows; ++i)
      for (auto& [j, v] : b.entries[i]) bcols[j].push_back({i, v});
    std::vector<std::vector<std::pair<int, long>>> acols(a.cols);
    for (int i = 0; i < a.rows; ++i)
      for (auto& [j, v] : a.entries[i]) acols[j].push_back({i, v});
    for (int j = 0; j < b.cols; ++j) {
      std::vector<long> acc(a.rows, 0);
      for (auto& [k, v] : bcols[j])
        for (auto& [i, w] : acols[k]) acc[i] += v * w;
      for (long v : acc)
        if (v) return "boundary squared nonzero in degree " + std::to_string(n);
    }
  }
  return {};
}

FGAbGroup homology(const ChainComplex& C, int n) {
  require_trusted(n, C.N);
  const int rn = n >= 1 ? rank(C.d[n]) : 0;
  std::vector<Int> f = invariant_factors(C.d[n + 1]);
  FGAbGroup g;
  g.rank = C.rank(n) - rn - int(f.size());
  for (auto& d : f)
    if (d != 1) g.torsion.push_back(d);
  return g;
}

FGAbGroup homology(const TruncSimplicialSet& X, int n) { return homology(chain_complex(X), n); }

Subquotient homology_with_generators(const ChainComplex& C, int n) {
  require_trusted(n, C.N);
  const int g = C.rank(n);
  IntMatrix Z = n == 0 ? IntMatrix::identity(g) : kernel_basis(C.d[n].dense());
  return subquotient(Z, C.d[n + 1].dense(), g);
}

IntMatrix chain_map(const ChainComplex& A, const ChainComplex& B, const std::vector<int>& map_n, int n) {
  IntMatrix M(B.rank(n), A.rank(n));
  for (int c = 0; c < A.rank(n); ++c) {
    const int r = B.pos[n][map_n[A.basis[n][c]]];
    if (r >= 0) M(r, c) = 1;
  }
  return M;
}

LocalCoeffSystem constant_system(const TruncSimplicialSet& X, const FGAbGroup& A) {
  const int k = A.rank + int(A.torsion.size());
  IntMatrix rel(k, int(A.torsion.size()));
  for (int t = 0; t < int(A.torsion.size()); ++t) rel(A.rank + t, t) = A.torsion[t];
  const IntMatrix id = IntMatrix::identity(k);
  LocalCoeffSystem L;
  L.gens.resize(X.N + 1);
  L.rel.resize(X.N + 1);
  L.face.resize(X.N + 1);
  L.degen.resize(X.N + 1);
  for (int n = 0; n <= X.N; ++n) {
    L.gens[n].assign(X.count[n], k);
    L.rel[n].assign(X.count[n], rel);
    if (n >= 1) L.face[n].assign(n + 1, std::vector<IntMatrix>(X.count[n], id));
    if (n + 1 <= X.N) L.degen[n].assign(n + 1, std::vector<IntMatrix>(X.count[n], id));
  }
  return L;
}

namespace {

// Membership test v ∈ column span of R, with R's Smith data computed once.
struct SpanTest {
  SmithForm f;
  int rows;
  explicit SpanTest(const IntMatrix& R) : f(smith_normal_form(R)), rows(R.rows()) {}
  bool contains(const std::vector<Int>& v) const {
    if (rows == 0) return true;
    auto sv = f.S.apply(v);
    for (int i = 0; i < rows; ++i) {
      if (i < f.rank) {
        if (!mpz_divisible_p(sv[i].get_mpz_t(), f.diag[i].get_mpz_t())) return false;
      } else if (sv[i] != 0) {
        return false;
      }
    }
    return true;
  }
  bool contains_columns(const IntMatrix& M) const {
    for (int j = 0; j < M.cols(); ++j)
      if (!contains(M.column(j))) return false;
    return true;
  }
};

IntMatrix diff(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
  return c;
}

}  // namespace

std::string check_functoriality(const TruncSimplicialSet& X, const LocalCoeffSystem& L) {
  auto where = [](const std::string& what, int n, int x) {
    return what + " at level " + std::to_string(n) + " simplex " + std::to_string(x);
  };
  std::vector<std::vector<SpanTest>> span(X.N + 1);
  for (int n = 0; n <= X.N; ++n)
    for (int x = 0; x < X.count[n]; ++x) span[n].emplace_back(L.rel[n][x]);
  for (int n = 1; n <= X.N; ++n)
    for (int i = 0; i <= n; ++i)
      for (int x = 0; x < X.count[n]; ++x) {
        const int y = X.face[n][i][x];
        const IntMatrix& M = L.face[n][i][x];
        if (M.rows() != L.gens[n - 1][y] || M.cols() != L.gens[n][x]) return where("face matrix shape", n, x);
        if (!span[n - 1][y].contains_columns(M * L.rel[n][x])) return where("face map not well defined", n, x);
      }
  for (int n = 0; n + 1 <= X.N; ++n)
    for (int i = 0; i <= n; ++i)
      for (int x = 0; x < X.count[n]; ++x) {
        const int y = X.degen[n][i][x];
        const IntMatrix& M = L.degen[n][i][x];
        if (M.rows() != L.gens[n + 1][y] || M.cols() != L.gens[n][x]) return where("degeneracy matrix shape", n, x);
        if (!span[n + 1][y].contains_columns(M * L.rel[n][x])) return where("degeneracy map not well defined", n, x);
      }
  auto Fd = [&](int n, int i, int x) -> const IntMatrix& { return L.face[n][i][x]; };
  auto Fs = [&](int n, int i, int x) -> const IntMatrix& { return L.degen[n][i][x]; };
  for (int n = 2; n <= X.N; ++n)
    for (int x = 0; x < X.count[n]; ++x)
      for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i) {
          const int t = X.face[n - 1][i][X.face[n][j][x]];
          const IntMatrix a = Fd(n - 1, i, X.face[n][j][x]) * Fd(n, j, x);
          const IntMatrix b = Fd(n - 1, j - 1, X.face[n][i][x]) * Fd(n, i, x);
          if (!span[n - 2][t].contains_columns(diff(a, b))) return where("L(d_i d_j)", n, x);
        }
  for (int n = 0; n + 1 <= X.N; ++n)
    for (int x = 0; x < X.count[n]; ++x)
      for (int j = 0; j <= n; ++j) {
        const int y = X.degen[n][j][x];
        for (int i = 0; i <= n + 1; ++i) {
          const IntMatrix a = Fd(n + 1, i, y) * Fs(n, j, x);
          IntMatrix b;
          int t = X.face[n + 1][i][y];
          if (i == j || i == j + 1) {
            b = IntMatrix::identity(L.gens[n][x]);
          } else if (i < j) {
            b = Fs(n - 1, j - 1, X.face[n][i][x]) * Fd(n, i, x);
          } else {
            b = Fs(n - 1, j, X.face[n][i - 1][x]) * Fd(n, i - 1, x);
          }
          if (a.rows() != b.rows() || a.cols() != b.cols()) return where("L(d_i s_j) shape", n, x);
          if (!span[n][t].contains_columns(diff(a, b))) return where("L(d_i s_j)", n, x);
        }
        if (n + 2 <= X.N)
          for (int i = 0; i <= j; ++i) {
            const int t = X.degen[n + 1][i][y];
            const IntMatrix a = Fs(n + 1, i, y) * Fs(n, j, x);
            const IntMatrix b = Fs(n + 1, j + 1, X.degen[n][i][x]) * Fs(n, i, x);
            if (!span[n + 2][t].contains_columns(diff(a, b))) return where("L(s_i s_j)", n, x);
          }
      }
  return {};
}

namespace {

struct LocalComplex {
  std::vector<int> offset_total;
  std::vector<std::vector<int>> offset;  // per level, per basis position
  std::vector<int> size;
};

}  // namespace

FGAbGroup homology_local(const TruncSimplicialSet& X, const LocalCoeffSystem& L, int n) {
  require_trusted(n, X.N);
  const ChainComplex C = chain_complex(X);
  LocalComplex lc;
  lc.offset.resize(X.N + 1);
  lc.size.assign(X.N + 1, 0);
  for (int k = 0; k <= std::min(X.N, n + 1); ++k)
    for (int c = 0; c < C.rank(k); ++c) {
      lc.offset[k].push_back(lc.size[k]);
      lc.size[k] += L.gens[k][C.basis[k][c]];
    }
  auto relations = [&](int k) {
    int m = 0;
    for (int c = 0; c < C.rank(k); ++c) m += L.rel[k][C.basis[k][c]].cols();
    IntMatrix R(lc.size[k], m);
    int col = 0;
    for (int c = 0; c < C.rank(k); ++c) {
      const IntMatrix& r = L.rel[k][C.basis[k][c]];
      for (int j = 0; j < r.cols(); ++j, ++col)
        for (int i = 0; i < r.rows(); ++i) R(lc.offset[k][c] + i, col) = r(i, j);
    }
    return R;
  };
  auto boundary = [&](int k) {
    IntMatrix D(lc.size[k - 1], lc.size[k]);
    for (int c = 0; c < C.rank(k); ++c) {
      const int x = C.basis[k][c];
      for (int i = 0; i <= k; ++i) {
        const int r = C.pos[k - 1][X.face[k][i][x]];
        if (r < 0) continue;
        const IntMatrix& M = L.face[k][i][x];
        for (int a = 0; a < M.rows(); ++a)
          for (int b = 0; b < M.cols(); ++b)
            if (M(a, b) != 0) {
              Int v = M(a, b);
              if (i % 2) v = -v;
              D(lc.offset[k - 1][r] + a, lc.offset[k][c] + b) += v;
            }
      }
    }
    return D;
  };
  const IntMatrix empty(0, lc.size[n]);
  return homology_presented(n == 0 ? empty : boundary(n), boundary(n + 1),
                            n == 0 ? IntMatrix(0, 0) : relations(n - 1), relations(n), lc.size[n]);
}

FGAbGroup homology_presented(const IntMatrix& d_in, const IntMatrix& d_out, const IntMatrix& rel_prev,
                             const IntMatrix& rel, int g) {
  IntMatrix Z;
  if (d_in.rows() == 0) {
    Z = IntMatrix::identity(g);
  } else {
    IntMatrix Rm = rel_prev;
    for (int i = 0; i < Rm.rows(); ++i)
      for (int j = 0; j < Rm.cols(); ++j) Rm(i, j) = -Rm(i, j);
    Z = kernel_basis(IntMatrix::hcat(d_in, Rm)).rows_range(0, g);
  }
  return subquotient(Z, IntMatrix::hcat(d_out, rel), g).group;
}

IntMatrix order_relations(const Subquotient& q) {
  const int k = int(q.orders.size());
  IntMatrix R(k, k);
  for (int i = 0; i < k; ++i) R(i, i) = q.orders[i];
  return R;
}

bool is_morphism_inverting(const TruncSimplicialSet& X, const LocalCoeffSystem& L) {
  std::vector<std::vector<Subquotient>> G(X.N + 1);
  for (int n = 0; n <= X.N; ++n)
    for (int x = 0; x < X.count[n]; ++x)
      G[n].push_back(subquotient(IntMatrix::identity(L.gens[n][x]), L.rel[n][x], L.gens[n][x]));
  for (int n = 1; n <= X.N; ++n)
    for (int i = 0; i <= n; ++i)
      for (int x = 0; x < X.count[n]; ++x) {
        const Subquotient &s = G[n][x], &t = G[n - 1][X.face[n][i][x]];
        if (!induced_is_iso(s, t, induced_map(s, t, L.face[n][i][x]))) return false;
      }
  for (int n = 0; n + 1 <= X.N; ++n)
    for (int i = 0; i <= n; ++i)
      for (int x = 0; x < X.count[n]; ++x) {
        const Subquotient &s = G[n][x], &t = G[n + 1][X.degen[n][i][x]];
        if (!induced_is_iso(s, t, induced_map(s, t, L.degen[n][i][x]))) return false;
      }
  return true;
}

}  // namespace twocat
