#include "twocat/specseq.hpp"

#include "twocat/fixtures.hpp"

#include <algorithm>

namespace twocat {

namespace {

Simplex image_simplex(const TwoFunctor& F, const Simplex& x, int q) {
  const SimplexLayout& L = layout(q);
  Simplex y(L.size);
  for (int i = 0; i <= q; ++i) {
    y[i] = F.on0[x[i]];
    for (int j = i + 1; j <= q; ++j) {
      y[L.edge(i, j)] = F.on1[x[L.edge(i, j)]];
      for (int k = j + 1; k <= q; ++k) y[L.tri(i, j, k)] = F.on2[x[L.tri(i, j, k)]];
    }
  }
  return y;
}

std::vector<int> delete_vertex(int n, int i) {
  std::vector<int> phi;
  for (int k = 0; k <= n; ++k)
    if (k != i) phi.push_back(k);
  return phi;
}

std::vector<int> repeat_vertex(int n, int i) {
  std::vector<int> phi;
  for (int k = 0; k <= n; ++k) {
    phi.push_back(k);
    if (k == i) phi.push_back(k);
  }
  return phi;
}

std::vector<int> key_of(int omega, const Simplex& delta) {
  std::vector<int> k{omega};
  k.insert(k.end(), delta.begin(), delta.end());
  return k;
}

}  // namespace

int Bisimplicial::find(int p, int q, int omega, const Simplex& delta) const {
  if (!has(p, q)) return -1;
  return key_find(B[p][q].ix, key_of(omega, delta));
}

Bisimplicial build_B(const TwoFunctor& F, int P, int Q, int T) {
  Bisimplicial R;
  R.F = F;
  R.P = P;
  R.Q = Q;
  R.T = T;
  const TwoCategory& D = *F.target;
  R.NC = nerve(F.source, Q);
  R.ND = nerve(F.target, P);
  R.B.assign(P + 1, std::vector<Bisimplicial::Level>(Q + 1));
  for (int p = 0; p <= P; ++p)
    for (int q = 0; q <= Q; ++q) {
      if (!R.has(p, q)) continue;
      auto& Lv = R.B[p][q];
      Lv.built = true;
      const int n = q + 1 + p;
      const SimplexLayout &Ln = layout(n), &Lq = layout(q), &Lp = layout(p);
      for (int w = 0; w < int(R.NC.simplices[q].size()); ++w) {
        const Simplex Fw = image_simplex(F, R.NC.simplices[q][w], q);
        for (int s = 0; s < int(R.ND.simplices[p].size()); ++s) {
          const Simplex& sg = R.ND.simplices[p][s];
          std::vector<int> fixed(Ln.size, -1);
          for (int i = 0; i <= q; ++i) {
            fixed[i] = Fw[i];
            for (int j = i + 1; j <= q; ++j) {
              fixed[Ln.edge(i, j)] = Fw[Lq.edge(i, j)];
              for (int k = j + 1; k <= q; ++k) fixed[Ln.tri(i, j, k)] = Fw[Lq.tri(i, j, k)];
            }
          }
          const int o = q + 1;
          for (int i = 0; i <= p; ++i) {
            fixed[o + i] = sg[i];
            for (int j = i + 1; j <= p; ++j) {
              fixed[Ln.edge(o + i, o + j)] = sg[Lp.edge(i, j)];
              for (int k = j + 1; k <= p; ++k) fixed[Ln.tri(o + i, o + j, o + k)] = sg[Lp.tri(i, j, k)];
            }
          }
          enumerate_simplices(D, n, &fixed, [&](const Simplex& d) {
            Lv.ix[key_of(w, d)] = Lv.size();
            Lv.omega.push_back(w);
            Lv.sigma.push_back(s);
            Lv.delta.push_back(d);
          });
        }
      }
    }

  auto locate = [&](int p, int q, int w, const Simplex& d) {
    const int r = R.find(p, q, w, d);
    if (r < 0) throw AxiomError("bisimplicial", "operator image missing at (" + std::to_string(p) + "," + std::to_string(q) + ")");
    return r;
  };
  for (int p = 0; p <= P; ++p)
    for (int q = 0; q <= Q; ++q) {
      if (!R.has(p, q)) continue;
      auto& Lv = R.B[p][q];
      const int n = q + 1 + p, m = Lv.size();
      if (p >= 1) {
        Lv.dH.assign(p + 1, std::vector<int>(m));
        for (int i = 0; i <= p; ++i) {
          const auto phi = delete_vertex(n, q + 1 + i);
          for (int x = 0; x < m; ++x) Lv.dH[i][x] = locate(p - 1, q, Lv.omega[x], pull_simplex(D, Lv.delta[x], n, phi));
        }
      }
      if (R.has(p + 1, q)) {
        Lv.sH.assign(p + 1, std::vector<int>(m));
        for (int i = 0; i <= p; ++i) {
          const auto phi = repeat_vertex(n, q + 1 + i);
          for (int x = 0; x < m; ++x) Lv.sH[i][x] = locate(p + 1, q, Lv.omega[x], pull_simplex(D, Lv.delta[x], n, phi));
        }
      }
      if (q >= 1) {
        Lv.dV.assign(q + 1, std::vector<int>(m));
        for (int i = 0; i <= q; ++i) {
          const auto phi = delete_vertex(n, i);
          for (int x = 0; x < m; ++x)
            Lv.dV[i][x] = locate(p, q - 1, R.NC.sset.face[q][i][Lv.omega[x]], pull_simplex(D, Lv.delta[x], n, phi));
        }
      }
      if (R.has(p, q + 1)) {
        Lv.sV.assign(q + 1, std::vector<int>(m));
        for (int i = 0; i <= q; ++i) {
          const auto phi = repeat_vertex(n, i);
          for (int x = 0; x < m; ++x)
            Lv.sV[i][x] = locate(p, q + 1, R.NC.sset.degen[q][i][Lv.omega[x]], pull_simplex(D, Lv.delta[x], n, phi));
        }
      }
    }
  for (int p = 0; p <= P; ++p)
    for (int q = 0; q <= Q; ++q) {
      if (!R.has(p, q)) continue;
      auto& Lv = R.B[p][q];
      Lv.vdegenerate.assign(Lv.size(), 0);
      if (q >= 1)
        for (auto& s : R.B[p][q - 1].sV)
          for (int x : s) Lv.vdegenerate[x] = 1;
    }
  return R;
}

TruncSimplicialSet column(const Bisimplicial& B, int p) {
  TruncSimplicialSet X;
  int N = 0;
  while (B.has(p, N + 1)) ++N;
  X.N = N;
  X.face.resize(N + 1);
  X.degen.resize(N + 1);
  for (int q = 0; q <= N; ++q) {
    const auto& Lv = B.at(p, q);
    X.count.push_back(Lv.size());
    if (q >= 1) X.face[q] = Lv.dV;
    if (q + 1 <= N) X.degen[q] = Lv.sV;
  }
  X.mark_degenerate();
  return X;
}

TruncSimplicialSet row(const Bisimplicial& B, int q) {
  TruncSimplicialSet X;
  int N = 0;
  while (B.has(N + 1, q)) ++N;
  X.N = N;
  X.face.resize(N + 1);
  X.degen.resize(N + 1);
  for (int p = 0; p <= N; ++p) {
    const auto& Lv = B.at(p, q);
    X.count.push_back(Lv.size());
    if (p >= 1) X.face[p] = Lv.dH;
    if (p + 1 <= N) X.degen[p] = Lv.sH;
  }
  X.mark_degenerate();
  return X;
}

std::string check_bisimplicial(const Bisimplicial& B) {
  for (int p = 0; p <= B.P; ++p)
    if (B.has(p, 0)) {
      auto e = check_simplicial_identities(column(B, p));
      if (!e.empty()) return "column " + std::to_string(p) + ": " + e;
    }
  for (int q = 0; q <= B.Q; ++q)
    if (B.has(0, q)) {
      auto e = check_simplicial_identities(row(B, q));
      if (!e.empty()) return "row " + std::to_string(q) + ": " + e;
    }
  auto where = [](const char* what, int p, int q) {
    return std::string(what) + " fails at (" + std::to_string(p) + "," + std::to_string(q) + ")";
  };
  for (int p = 0; p <= B.P; ++p)
    for (int q = 0; q <= B.Q; ++q) {
      if (!B.has(p, q)) continue;
      const auto& Lv = B.at(p, q);
      for (int x = 0; x < Lv.size(); ++x) {
        if (p >= 1 && q >= 1)
          for (int i = 0; i <= p; ++i)
            for (int j = 0; j <= q; ++j)
              if (B.at(p - 1, q).dV[j][Lv.dH[i][x]] != B.at(p, q - 1).dH[i][Lv.dV[j][x]]) return where("dH dV", p, q);
        if (p >= 1 && B.has(p, q + 1))
          for (int i = 0; i <= p; ++i)
            for (int j = 0; j <= q; ++j)
              if (B.at(p - 1, q).sV[j][Lv.dH[i][x]] != B.at(p, q + 1).dH[i][Lv.sV[j][x]]) return where("dH sV", p, q);
        if (q >= 1 && B.has(p + 1, q))
          for (int i = 0; i <= p; ++i)
            for (int j = 0; j <= q; ++j)
              if (B.at(p + 1, q).dV[j][Lv.sH[i][x]] != B.at(p, q - 1).sH[i][Lv.dV[j][x]]) return where("sH dV", p, q);
        if (B.has(p + 1, q + 1))
          for (int i = 0; i <= p; ++i)
            for (int j = 0; j <= q; ++j)
              if (B.at(p + 1, q).sV[j][Lv.sH[i][x]] != B.at(p, q + 1).sH[i][Lv.sV[j][x]]) return where("sH sV", p, q);
      }
    }
  return {};
}

namespace {

// The (q')-simplex of a nerve of a diagram comma corresponding to a triple.
// For the p-filtration the comma is ldar(F, σ) and the bisimplicial level is
// (p, q'); for the q-filtration it is oprdar(F∘ω, Id) at level (p', q).
Simplex comma_simplex_p(const Bisimplicial& B, const DiagramComma& Ld, const TwoCategory& Op, int p, int q, int x) {
  const TwoCategory& D = *B.F.target;
  const auto& Lv = B.at(p, q);
  const Simplex& w = B.NC.simplices[q][Lv.omega[x]];
  const Simplex& d = Lv.delta[x];
  const int n = q + 1 + p;
  const SimplexLayout &Lq = layout(q), &Ln = layout(n);
  const int o = q + 1;
  Simplex out(Lq.size, -1);
  for (int i = 0; i <= q; ++i) {
    std::vector<int> key{w[i]};
    for (int j = 0; j <= p; ++j) key.push_back(d[Ln.edge(i, o + j)]);
    for (int f = 0; f < Op.num_one_cells(); ++f) {
      const auto path = oriental_path(Op, f);
      if (path.size() == 1) {
        key.push_back(D.id2(d[Ln.edge(i, o + path[0])]));
        continue;
      }
      int lam = d[Ln.tri(i, o + path[0], o + path[1])];
      for (std::size_t t = 2; t < path.size(); ++t) {
        const int g = d[Ln.edge(o + path[t - 1], o + path[t])];
        lam = D.vcompose(D.whisker_l(g, lam), d[Ln.tri(i, o + path[t - 1], o + path[t])]);
      }
      key.push_back(lam);
    }
    out[i] = key_find(Ld.ix0, key);
  }
  for (int i = 0; i <= q; ++i)
    for (int k = i + 1; k <= q; ++k) {
      std::vector<int> key{out[i], out[k], w[Lq.edge(i, k)]};
      for (int j = 0; j <= p; ++j) key.push_back(d[Ln.tri(i, k, o + j)]);
      out[Lq.edge(i, k)] = key_find(Ld.ix1, key);
    }
  for (int i = 0; i <= q; ++i)
    for (int j = i + 1; j <= q; ++j)
      for (int k = j + 1; k <= q; ++k) {
        const int comp = Ld.cat->compose(out[Lq.edge(j, k)], out[Lq.edge(i, j)]);
        out[Lq.tri(i, j, k)] = key_find(Ld.ix2, {out[Lq.edge(i, k)], comp, w[Lq.tri(i, j, k)]});
      }
  return out;
}

Simplex comma_simplex_q(const Bisimplicial& B, const DiagramComma& Lo, const TwoCategory& Oq, int p, int q, int x) {
  const TwoCategory& D = *B.F.target;
  const auto& Lv = B.at(p, q);
  const Simplex& s = B.ND.simplices[p][Lv.sigma[x]];
  const Simplex& d = Lv.delta[x];
  const int n = q + 1 + p;
  const SimplexLayout &Lp = layout(p), &Ln = layout(n);
  const int o = q + 1;
  Simplex out(Lp.size, -1);
  for (int j = 0; j <= p; ++j) {
    std::vector<int> key{s[j]};
    for (int i = 0; i <= q; ++i) key.push_back(d[Ln.edge(i, o + j)]);
    for (int f = 0; f < Oq.num_one_cells(); ++f) {
      const auto path = oriental_path(Oq, f);
      if (path.size() == 1) {
        key.push_back(D.id2(d[Ln.edge(path[0], o + j)]));
        continue;
      }
      int Gf = d[Ln.edge(path[0], path[1])];
      int g = d[Ln.tri(path[0], path[1], o + j)];
      for (std::size_t t = 2; t < path.size(); ++t) {
        const int step = d[Ln.tri(path[t - 1], path[t], o + j)];
        g = D.vcompose(D.whisker_r(step, Gf), g);
        Gf = D.compose(d[Ln.edge(path[t - 1], path[t])], Gf);
      }
      key.push_back(g);
    }
    out[j] = key_find(Lo.ix0, key);
  }
  for (int j = 0; j <= p; ++j)
    for (int k = j + 1; k <= p; ++k) {
      std::vector<int> key{out[j], out[k], s[Lp.edge(j, k)]};
      for (int i = 0; i <= q; ++i) key.push_back(d[Ln.tri(i, o + j, o + k)]);
      out[Lp.edge(j, k)] = key_find(Lo.ix1, key);
    }
  for (int i = 0; i <= p; ++i)
    for (int j = i + 1; j <= p; ++j)
      for (int k = j + 1; k <= p; ++k) {
        const int comp = Lo.cat->compose(out[Lp.edge(j, k)], out[Lp.edge(i, j)]);
        out[Lp.tri(i, j, k)] = key_find(Lo.ix2, {out[Lp.edge(i, k)], comp, s[Lp.tri(i, j, k)]});
      }
  return out;
}

// Shared bijection check: `members[l]` lists triples at level l of the
// varying direction, `image` maps a triple to a simplex of `Nv`.
std::string check_bijection(const Nerve& Nv, int top, const std::vector<std::vector<int>>& members,
                            const std::function<Simplex(int, int)>& image,
                            const std::function<const std::vector<std::vector<int>>*(int, bool)>& ops) {
  std::vector<std::unordered_map<int, int>> to(top + 1);
  for (int l = 0; l <= top; ++l) {
    std::vector<char> hit(Nv.sset.count[l], 0);
    for (int x : members[l]) {
      const Simplex y = image(l, x);
      if (std::find(y.begin(), y.end(), -1) != y.end()) return "triple has no comma cell at level " + std::to_string(l);
      const int k = Nv.find(l, y);
      if (k < 0) return "image is not a simplex at level " + std::to_string(l);
      if (hit[k]) return "two triples share a simplex at level " + std::to_string(l);
      hit[k] = 1;
      to[l][x] = k;
    }
    if (int(members[l].size()) != Nv.sset.count[l]) return "counts differ at level " + std::to_string(l);
  }
  for (int l = 1; l <= top; ++l) {
    const auto* faces = ops(l, true);
    for (int x : members[l])
      for (int i = 0; i <= l; ++i)
        if (to[l - 1].at((*faces)[i][x]) != Nv.sset.face[l][i][to[l][x]]) return "face mismatch at level " + std::to_string(l);
  }
  for (int l = 0; l < top; ++l) {
    const auto* degs = ops(l, false);
    for (int x : members[l])
      for (int i = 0; i <= l; ++i)
        if (to[l + 1].at((*degs)[i][x]) != Nv.sset.degen[l][i][to[l][x]]) return "degeneracy mismatch at level " + std::to_string(l);
  }
  return {};
}

}  // namespace

std::string filtration_check_p(const Bisimplicial& B, int p, int sigma, int q) {
  auto Op = materialize_oriental(p);
  const DiagramComma Ld = ldar(B.F, simplex_functor(Op, B.F.target, B.ND.simplices[p][sigma]));
  const Nerve Nv = nerve(Ld.cat, q);
  std::vector<std::vector<int>> members(q + 1);
  for (int l = 0; l <= q; ++l) {
    if (!B.has(p, l)) return "level outside the built range";
    const auto& Lv = B.at(p, l);
    for (int x = 0; x < Lv.size(); ++x)
      if (Lv.sigma[x] == sigma) members[l].push_back(x);
  }
  return check_bijection(
      Nv, q, members, [&](int l, int x) { return comma_simplex_p(B, Ld, *Op, p, l, x); },
      [&](int l, bool face) { return face ? &B.at(p, l).dV : &B.at(p, l).sV; });
}

std::string filtration_check_q(const Bisimplicial& B, int q, int omega, int p) {
  auto Oq = materialize_oriental(q);
  const TwoFunctor G = compose(B.F, simplex_functor(Oq, B.F.source, B.NC.simplices[q][omega]));
  const DiagramComma Lo = oprdar(G, identity_functor(B.F.target));
  const Nerve Nv = nerve(Lo.cat, p);
  std::vector<std::vector<int>> members(p + 1);
  for (int l = 0; l <= p; ++l) {
    if (!B.has(l, q)) return "level outside the built range";
    const auto& Lv = B.at(l, q);
    for (int x = 0; x < Lv.size(); ++x)
      if (Lv.omega[x] == omega) members[l].push_back(x);
  }
  return check_bijection(
      Nv, p, members, [&](int l, int x) { return comma_simplex_q(B, Lo, *Oq, l, q, x); },
      [&](int l, bool face) { return face ? &B.at(l, q).dH : &B.at(l, q).sH; });
}

SSPages pages(const Bisimplicial& B) {
  SSPages S;
  S.P = B.P;
  S.Q = B.Q;
  S.T = B.T;
  std::vector<ChainComplex> cols;
  std::map<std::pair<int, int>, Subquotient> E1;
  for (int p = 0; p <= B.P; ++p) {
    cols.push_back(chain_complex(column(B, p)));
    for (int q = 0; q <= B.Q; ++q)
      if (S.e1_trusted(p, q)) {
        E1.emplace(std::make_pair(p, q), homology_with_generators(cols[p], q));
        S.E1[{p, q}] = E1.at({p, q}).group;
      }
  }
  for (auto& [pq, sq] : E1) {
    auto [p, q] = pq;
    if (p == 0 || !E1.count({p - 1, q})) continue;
    const Subquotient& tgt = E1.at({p - 1, q});
    IntMatrix M(cols[p - 1].rank(q), cols[p].rank(q));
    for (int i = 0; i <= p; ++i) {
      const IntMatrix Mi = chain_map(cols[p], cols[p - 1], B.at(p, q).dH[i], q);
      for (int r = 0; r < M.rows(); ++r)
        for (int c = 0; c < M.cols(); ++c)
          if (Mi(r, c) != 0) M(r, c) += i % 2 ? -Mi(r, c) : Mi(r, c);
    }
    S.d1[pq] = induced_map(sq, tgt, M);
  }
  for (auto& [pq, M] : S.d1) {
    auto [p, q] = pq;
    auto it = S.d1.find({p - 1, q});
    if (it == S.d1.end()) continue;
    const IntMatrix C = it->second * M;
    const auto& ord = E1.at({p - 2, q}).orders;
    for (int r = 0; r < C.rows(); ++r)
      for (int c = 0; c < C.cols(); ++c) {
        const Int& v = C(r, c);
        if (ord[r] == 0 ? v != 0 : !mpz_divisible_p(v.get_mpz_t(), ord[r].get_mpz_t())) S.d1_squared_zero = false;
      }
  }
  for (int p = 0; p <= B.P; ++p)
    for (int q = 0; q <= B.Q; ++q) {
      if (!S.e2_trusted(p, q)) continue;
      const Subquotient& cur = E1.at({p, q});
      const int g = int(cur.orders.size());
      if (g == 0) {
        S.E2[{p, q}] = FGAbGroup{};
        continue;
      }
      const IntMatrix rel = order_relations(cur);
      const IntMatrix d_out = S.d1.at({p + 1, q});
      if (p == 0) {
        S.E2[{p, q}] = homology_presented(IntMatrix(0, g), d_out, IntMatrix(0, 0), rel, g);
      } else {
        const IntMatrix relp = order_relations(E1.at({p - 1, q}));
        const IntMatrix& d_in = S.d1.at({p, q});
        S.E2[{p, q}] = d_in.rows() == 0 ? homology_presented(IntMatrix(0, g), d_out, IntMatrix(0, 0), rel, g)
                                         : homology_presented(d_in, d_out, relp, rel, g);
      }
    }
  return S;
}

int tot_trusted_max(const Bisimplicial& B) { return std::min({B.P, B.Q, B.T}) - 1; }

FGAbGroup totalization_homology(const Bisimplicial& B, int n) {
  if (n < 0 || n > tot_trusted_max(B))
    throw AxiomError("truncation", "total degree " + std::to_string(n) + " is outside the trusted range");
  // Basis of Tot_m: V-nondegenerate triples at p+q = m.
  auto basis = [&](int m) {
    std::vector<std::array<int, 3>> b;  // p, q, x
    for (int p = 0; p <= m; ++p) {
      const int q = m - p;
      const auto& Lv = B.at(p, q);
      for (int x = 0; x < Lv.size(); ++x)
        if (!Lv.vdegenerate[x]) b.push_back({p, q, x});
    }
    return b;
  };
  auto boundary = [&](int m, const std::vector<std::array<int, 3>>& from, const std::vector<std::array<int, 3>>& to) {
    std::map<std::array<int, 3>, int> pos;
    for (int r = 0; r < int(to.size()); ++r) pos[to[r]] = r;
    SparseIntMatrix d(int(to.size()), int(from.size()));
    (void)m;
    for (int c = 0; c < int(from.size()); ++c) {
      auto [p, q, x] = from[c];
      const auto& Lv = B.at(p, q);
      if (p >= 1)
        for (int i = 0; i <= p; ++i) {
          auto it = pos.find({p - 1, q, Lv.dH[i][x]});
          if (it != pos.end()) d.add(it->second, c, i % 2 ? -1 : 1);
        }
      if (q >= 1)
        for (int j = 0; j <= q; ++j) {
          auto it = pos.find({p, q - 1, Lv.dV[j][x]});
          if (it != pos.end()) d.add(it->second, c, ((p + j) % 2) ? -1 : 1);
        }
    }
    return d;
  };
  const auto b0 = basis(n), b1 = basis(n + 1);
  const int rn = n >= 1 ? rank(boundary(n, b0, basis(n - 1))) : 0;
  const auto f = invariant_factors(boundary(n + 1, b1, b0));
  FGAbGroup g;
  g.rank = int(b0.size()) - rn - int(f.size());
  for (auto& t : f)
    if (t != 1) g.torsion.push_back(t);
  return g;
}

bool collapse_check(const Bisimplicial& B, int q) {
  const TruncSimplicialSet X = row(B, q);
  const int k = int(B.NC.simplices[q].size());
  for (int p = 0; p + 1 <= X.N; ++p) {
    const FGAbGroup h = homology(X, p);
    if (p == 0 ? h != FGAbGroup{k, {}} : !h.trivial()) return false;
  }
  return true;
}

namespace {

// Caches for the fiber coefficient system: comparison data per object of D,
// diagram commas and initial comparisons per simplex of D.
struct FiberCtx {
  const TwoFunctor& F;
  const OpfibrationCertificate& cert;
  const Nerve& ND;
  std::map<int, std::unique_ptr<ComparisonH>> comp;
  std::map<std::pair<int, int>, std::unique_ptr<DiagramComma>> commas;
  std::map<std::pair<int, int>, std::unique_ptr<InitialComparison>> init;
  std::map<int, OplaxInitialWitness> witness;

  FiberCtx(const TwoFunctor& f, const OpfibrationCertificate& c, const Nerve& n) : F(f), cert(c), ND(n) {}

  const ComparisonH& at(int y) {
    auto& slot = comp[y];
    if (!slot) slot = std::make_unique<ComparisonH>(comparison_H(F, point(F.target, y), cert));
    return *slot;
  }
  const DiagramComma& comma(int n, int x) {
    auto& slot = commas[{n, x}];
    if (!slot)
      slot = std::make_unique<DiagramComma>(ldar(F, simplex_functor(materialize_oriental(n), F.target, ND.simplices[n][x])));
    return *slot;
  }
  const OplaxInitialWitness& wit(int n) {
    auto it = witness.find(n);
    if (it != witness.end()) return it->second;
    auto w = find_oplax_initial(*materialize_oriental(n));
    if (!w || w->iota != 0) throw AxiomError("oriental", "O(" + std::to_string(n) + ") has no oplax initial witness at 0");
    return witness.emplace(n, *w).first->second;
  }
  const InitialComparison& initial(int n, int x) {
    auto& slot = init[{n, x}];
    if (!slot) slot = std::make_unique<InitialComparison>(lp_initial_maps(at(ND.simplices[n][x][0]).L, comma(n, x), wit(n)));
    return *slot;
  }
  // d;φ*;e : laco(F, σ(0)) → laco(F, φ*σ(0)).
  TwoFunctor transport(int n, int x, int m, int y, const std::vector<int>& phi) {
    const TwoFunctor u = oriental_map(materialize_oriental(m), materialize_oriental(n), phi);
    const TwoFunctor r = restrict_along(comma(n, x), comma(m, y), u);
    return compose(initial(m, y).e, compose(r, initial(n, x).d));
  }
};

// Visit every generator φ at every simplex of nerve(D, N).
void for_each_generator(const Nerve& ND, const std::function<void(int n, int x, int i, bool face)>& f) {
  for (int n = 0; n <= ND.N; ++n)
    for (int x = 0; x < ND.sset.count[n]; ++x) {
      if (n >= 1)
        for (int i = 0; i <= n; ++i) f(n, x, i, true);
      if (n + 1 <= ND.N)
        for (int i = 0; i <= n; ++i) f(n, x, i, false);
    }
}

void check_hypotheses(const TwoFunctor& F, const OpfibrationCertificate& cert) {
  const TwoCategory& D = *F.target;
  for (int a = 0; a < D.num_two_cells(); ++a)
    if (!D.invertible2(a)) throw AxiomError("hypothesis", "2-cell " + describe_two(D, a) + " of the base is not invertible");
  if (!cert) throw AxiomError("hypothesis", "the 2-functor is not a certified opfibration");
}

}  // namespace

FiberSystem fiber_coeff_system(const TwoFunctor& F, const OpfibrationCertificate& cert, int q, int N) {
  check_hypotheses(F, cert);
  FiberSystem out;
  out.ND = nerve(F.target, N);
  const Nerve& ND = out.ND;
  const TwoCategory& D = *F.target;
  FiberCtx ctx(F, cert, ND);

  std::vector<Nerve> fib;
  std::vector<ChainComplex> chains;
  std::vector<Subquotient> Hq;
  for (int y = 0; y < D.num_objects(); ++y) {
    const ComparisonH& c = ctx.at(y);
    fib.push_back(nerve(c.pb.cat, q + 1));
    chains.push_back(chain_complex(fib.back().sset));
    Hq.push_back(homology_with_generators(chains.back(), q));
    const FGAbGroup direct = homology(nerve(strict_fiber(F, y).cat, q + 1).sset, q);
    if (direct != Hq.back().group) throw AxiomError("fiber", "strict fiber and pullback disagree at " + D.object(y));
    out.fiber_homology.push_back(direct);
  }

  LocalCoeffSystem& L = out.L;
  L.gens.resize(N + 1);
  L.rel.resize(N + 1);
  L.face.resize(N + 1);
  L.degen.resize(N + 1);
  for (int n = 0; n <= N; ++n) {
    for (int x = 0; x < ND.sset.count[n]; ++x) {
      const int v = ND.simplices[n][x][0];
      L.gens[n].push_back(int(Hq[v].orders.size()));
      L.rel[n].push_back(order_relations(Hq[v]));
    }
    if (n >= 1) L.face[n].assign(n + 1, std::vector<IntMatrix>(ND.sset.count[n]));
    if (n + 1 <= N) L.degen[n].assign(n + 1, std::vector<IntMatrix>(ND.sset.count[n]));
  }
  for_each_generator(ND, [&](int n, int x, int i, bool face) {
    const int m = face ? n - 1 : n + 1;
    const int y = face ? ND.sset.face[n][i][x] : ND.sset.degen[n][i][x];
    const int a = ND.simplices[n][x][0], b = ND.simplices[m][y][0];
    const ComparisonH &ca = ctx.at(a), &cb = ctx.at(b);
    const TwoFunctor strict = compose(ctx.transport(n, x, m, y, face ? delete_vertex(n, i) : repeat_vertex(n, i)), ca.i);
    const NormalPseudofunctor total = compose(cb.H, NormalPseudofunctor(strict));
    const auto map = nerve_map(fib[a], fib[b], total);
    const IntMatrix M = induced_map(Hq[a], Hq[b], chain_map(chains[a], chains[b], map[q], q));
    (face ? L.face : L.degen)[n][i][x] = M;
  });
  return out;
}

std::string check_base_change_identification(const TwoFunctor& F, const OpfibrationCertificate& cert, int N) {
  check_hypotheses(F, cert);
  const Nerve ND = nerve(F.target, N);
  FiberCtx ctx(F, cert, ND);
  std::string err;
  for_each_generator(ND, [&](int n, int x, int i, bool face) {
    if (!err.empty()) return;
    const int m = face ? n - 1 : n + 1;
    const int y = face ? ND.sset.face[n][i][x] : ND.sset.degen[n][i][x];
    const auto phi = face ? delete_vertex(n, i) : repeat_vertex(n, i);
    const TwoFunctor t = ctx.transport(n, x, m, y, phi);
    const Simplex& s = ND.simplices[n][x];
    const int edge = simplex_edge(*F.target, s, n, 0, phi[0]);
    const TwoFunctor bc = base_change(ctx.at(s[0]).L, ctx.at(ND.simplices[m][y][0]).L, edge);
    if (!same_maps(t, bc))
      err = std::string(face ? "face " : "degeneracy ") + std::to_string(i) + " at " + simplex_name(*F.target, n, s);
  });
  return err;
}

bool e2_vs_local(const TwoFunctor& F, const OpfibrationCertificate& cert, int p, int q) {
  const Bisimplicial B = build_B(F, p + 1, q + 1, p + q + 2);
  const SSPages S = pages(B);
  const FiberSystem fs = fiber_coeff_system(F, cert, q, p + 1);
  return S.E2.at({p, q}) == homology_local(fs.ND.sset, fs.L, p);
}

}  // namespace twocat
