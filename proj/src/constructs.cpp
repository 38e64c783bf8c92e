#include "twocat/constructs.hpp"

#include <algorithm>
#include <map>

namespace twocat {

namespace {

TwoFunctor functor_between(TwoCatPtr s, TwoCatPtr t) {
  TwoFunctor F;
  F.source = s;
  F.target = t;
  F.on0.assign(s->num_objects(), -1);
  F.on1.assign(s->num_one_cells(), -1);
  F.on2.assign(s->num_two_cells(), -1);
  return F;
}

}  // namespace

Pullback pullback(const TwoFunctor& P, const TwoFunctor& F) {
  const TwoCategory &C = *P.source, &X = *F.source;
  Pullback pb;
  TwoCategoryBuilder b;
  auto nm = [](const std::string& a, const std::string& c) { return "(" + a + "," + c + ")"; };
  for (int c = 0; c < C.num_objects(); ++c)
    for (int x = 0; x < X.num_objects(); ++x)
      if (P.on0[c] == F.on0[x]) {
        pb.ix0[{c, x}] = int(pb.obj.size());
        pb.obj.push_back({c, x});
        b.add_object(nm(C.object(c), X.object(x)));
      }
  for (int s = 0; s < C.num_one_cells(); ++s)
    for (int t = 0; t < X.num_one_cells(); ++t)
      if (P.on1[s] == F.on1[t]) {
        pb.ix1[{s, t}] = int(pb.one.size());
        pb.one.push_back({s, t});
        b.add_one_cell(nm(C.one(s).id, X.one(t).id), pb.ix0.at({C.one(s).src, X.one(t).src}),
                       pb.ix0.at({C.one(s).tgt, X.one(t).tgt}));
      }
  for (int s = 0; s < C.num_two_cells(); ++s)
    for (int t = 0; t < X.num_two_cells(); ++t)
      if (P.on2[s] == F.on2[t]) {
        pb.ix2[{s, t}] = int(pb.two.size());
        pb.two.push_back({s, t});
        b.add_two_cell(nm(C.two(s).id, X.two(t).id), pb.ix1.at({C.two(s).src, X.two(t).src}),
                       pb.ix1.at({C.two(s).tgt, X.two(t).tgt}));
      }
  for (int i = 0; i < int(pb.obj.size()); ++i)
    b.set_id1(i, pb.ix1.at({C.id1(pb.obj[i][0]), X.id1(pb.obj[i][1])}));
  for (int i = 0; i < int(pb.one.size()); ++i)
    b.set_id2(i, pb.ix2.at({C.id2(pb.one[i][0]), X.id2(pb.one[i][1])}));
  b.fill(
      [&](int g, int f) { return pb.ix1.at({C.compose(pb.one[g][0], pb.one[f][0]), X.compose(pb.one[g][1], pb.one[f][1])}); },
      [&](int q, int p) {
        return pb.ix2.at({C.vcompose(pb.two[q][0], pb.two[p][0]), X.vcompose(pb.two[q][1], pb.two[p][1])});
      },
      [&](int k, int a) {
        return pb.ix2.at({C.whisker_l(pb.one[k][0], pb.two[a][0]), X.whisker_l(pb.one[k][1], pb.two[a][1])});
      },
      [&](int a, int h) {
        return pb.ix2.at({C.whisker_r(pb.two[a][0], pb.one[h][0]), X.whisker_r(pb.two[a][1], pb.one[h][1])});
      });
  auto cat = std::make_shared<TwoCategory>(b.finish());
  cat->construction = "pullback";
  pb.cat = cat;
  pb.p1 = functor_between(cat, P.source);
  pb.p2 = functor_between(cat, F.source);
  for (int i = 0; i < int(pb.obj.size()); ++i) pb.p1.on0[i] = pb.obj[i][0], pb.p2.on0[i] = pb.obj[i][1];
  for (int i = 0; i < int(pb.one.size()); ++i) pb.p1.on1[i] = pb.one[i][0], pb.p2.on1[i] = pb.one[i][1];
  for (int i = 0; i < int(pb.two.size()); ++i) pb.p1.on2[i] = pb.two[i][0], pb.p2.on2[i] = pb.two[i][1];
  return pb;
}

namespace {

Comma build_comma(const TwoFunctor& F, const TwoFunctor& G, Orientation orient) {
  const TwoCategory &X = *F.source, &Y = *F.target, &Z = *G.source;
  const bool lax = orient == Orientation::lax;
  Comma L;
  L.orientation = orient;
  L.F = F;
  L.G = G;

  for (int x = 0; x < X.num_objects(); ++x)
    for (int z = 0; z < Z.num_objects(); ++z)
      for (int f : Y.hom(F.on0[x], G.on0[z])) {
        L.ix0[{x, f, z}] = int(L.obj.size());
        L.obj.push_back({x, f, z});
      }

  // Domain and codomain of the α slot of a 1-cell [s, ·, t] from o to o'.
  auto alpha_ends = [&](int o, int o2, int s, int t) -> std::pair<int, int> {
    const int f = L.obj[o][1], f2 = L.obj[o2][1];
    const int a = Y.compose(G.on1[t], f), b = Y.compose(f2, F.on1[s]);
    return lax ? std::make_pair(a, b) : std::make_pair(b, a);
  };

  std::map<std::pair<int, int>, std::vector<int>> between;
  for (int o = 0; o < int(L.obj.size()); ++o)
    for (int o2 = 0; o2 < int(L.obj.size()); ++o2) {
      const auto &A = L.obj[o], &B = L.obj[o2];
      for (int s : X.hom(A[0], B[0]))
        for (int t : Z.hom(A[2], B[2])) {
          auto [d, c] = alpha_ends(o, o2, s, t);
          for (int al : Y.hom2(d, c)) {
            L.ix1[{o, o2, s, al, t}] = int(L.one.size());
            between[{o, o2}].push_back(int(L.one.size()));
            L.one.push_back({o, o2, s, al, t});
          }
        }
    }

  // 2-cell condition for [φ, γ]: u ⇒ u1.
  auto admissible = [&](int u, int u1, int phi, int gam) {
    const auto &U = L.one[u], &U1 = L.one[u1];
    const int f = L.obj[U[0]][1], f2 = L.obj[U[1]][1];
    const int Fphi = F.on2[phi], Ggam = G.on2[gam];
    if (lax)
      return Y.vcompose(Y.whisker_l(f2, Fphi), U[3]) == Y.vcompose(U1[3], Y.whisker_r(Ggam, f));
    return Y.vcompose(Y.whisker_r(Ggam, f), U[3]) == Y.vcompose(U1[3], Y.whisker_l(f2, Fphi));
  };
  for (auto& [ends, cells] : between)
    for (int u : cells)
      for (int u1 : cells) {
        const auto &U = L.one[u], &U1 = L.one[u1];
        for (int phi : X.hom2(U[2], U1[2]))
          for (int gam : Z.hom2(U[4], U1[4]))
            if (admissible(u, u1, phi, gam)) {
              L.ix2[{u, u1, phi, gam}] = int(L.two.size());
              L.two.push_back({u, u1, phi, gam});
            }
      }

  auto comp = [&](int v, int u) {
    const auto &U = L.one[u], &V = L.one[v];
    const int s = X.compose(V[2], U[2]), t = Z.compose(V[4], U[4]);
    const int left = Y.whisker_l(G.on1[V[4]], U[3]);   // Gt'∗α
    const int right = Y.whisker_r(V[3], F.on1[U[2]]);  // α'∗Fs
    const int al = lax ? Y.vcompose(right, left) : Y.vcompose(left, right);
    return key_find(L.ix1, {U[0], V[1], s, al, t});
  };

  TwoCategoryBuilder b;
  for (auto& o : L.obj) b.add_object(bracket({X.object(o[0]), Y.one(o[1]).id, Z.object(o[2])}));
  std::vector<std::string> n1, n2;
  for (auto& u : L.one) n1.push_back(bracket({X.one(u[2]).id, Y.two(u[3]).id, Z.one(u[4]).id}));
  uniquify(n1, [&](int i) {
    return bracket({bracket({X.object(L.obj[L.one[i][0]][0]), Y.one(L.obj[L.one[i][0]][1]).id,
                             Z.object(L.obj[L.one[i][0]][2])}),
                    bracket({X.object(L.obj[L.one[i][1]][0]), Y.one(L.obj[L.one[i][1]][1]).id,
                             Z.object(L.obj[L.one[i][1]][2])})});
  });
  for (int i = 0; i < int(L.one.size()); ++i) b.add_one_cell(n1[i], L.one[i][0], L.one[i][1]);
  for (auto& a : L.two) n2.push_back(bracket({X.two(a[2]).id, Z.two(a[3]).id}));
  uniquify(n2, [&](int i) { return bracket({n1[L.two[i][0]], n1[L.two[i][1]]}); });
  for (int i = 0; i < int(L.two.size()); ++i) b.add_two_cell(n2[i], L.two[i][0], L.two[i][1]);

  for (int o = 0; o < int(L.obj.size()); ++o) {
    const auto& A = L.obj[o];
    b.set_id1(o, L.ix1.at({o, o, X.id1(A[0]), Y.id2(A[1]), Z.id1(A[2])}));
  }
  for (int u = 0; u < int(L.one.size()); ++u) {
    const auto& U = L.one[u];
    b.set_id2(u, L.ix2.at({u, u, X.id2(U[2]), Z.id2(U[4])}));
  }
  b.fill(comp,
         [&](int q, int p) {
           return key_find(L.ix2, {L.two[p][0], L.two[q][1], X.vcompose(L.two[q][2], L.two[p][2]),
                                   Z.vcompose(L.two[q][3], L.two[p][3])});
         },
         [&](int k, int a) {
           const auto& A = L.two[a];
           const auto& K = L.one[k];
           return key_find(L.ix2, {comp(k, A[0]), comp(k, A[1]), X.whisker_l(K[2], A[2]), Z.whisker_l(K[4], A[3])});
         },
         [&](int a, int h) {
           const auto& A = L.two[a];
           const auto& H = L.one[h];
           return key_find(L.ix2, {comp(A[0], h), comp(A[1], h), X.whisker_r(A[2], H[2]), Z.whisker_r(A[3], H[4])});
         });
  auto cat = std::make_shared<TwoCategory>(b.finish());
  cat->construction = lax ? "laco" : "oplaco";
  L.cat = cat;

  L.pX = functor_between(cat, F.source);
  L.pZ = functor_between(cat, G.source);
  for (int o = 0; o < int(L.obj.size()); ++o) L.pX.on0[o] = L.obj[o][0], L.pZ.on0[o] = L.obj[o][2];
  for (int u = 0; u < int(L.one.size()); ++u) L.pX.on1[u] = L.one[u][2], L.pZ.on1[u] = L.one[u][4];
  for (int a = 0; a < int(L.two.size()); ++a) L.pX.on2[a] = L.two[a][2], L.pZ.on2[a] = L.two[a][3];

  L.pi.orientation = orient;
  L.pi.flavor = Flavor::lax;
  L.pi.source = compose(F, L.pX);
  L.pi.target = compose(G, L.pZ);
  for (auto& o : L.obj) L.pi.at0.push_back(o[1]);
  for (auto& u : L.one) L.pi.at1.push_back(u[3]);
  return L;
}

}  // namespace

Comma laco(const TwoFunctor& F, const TwoFunctor& G) { return build_comma(F, G, Orientation::lax); }
Comma oplaco(const TwoFunctor& F, const TwoFunctor& G) { return build_comma(F, G, Orientation::oplax); }

TwoFunctor mediate(const Comma& L, const TwoFunctor& R, const TwoFunctor& Q, const Transformation& lam) {
  const TwoCategory& K = *R.source;
  if (lam.orientation != L.orientation) throw AxiomError("mediator-typing", "orientation of λ does not match");
  TwoFunctor h = functor_between(R.source, L.cat);
  for (int k = 0; k < K.num_objects(); ++k) {
    h.on0[k] = L.find_obj(R.on0[k], lam.at0[k], Q.on0[k]);
    if (h.on0[k] < 0) throw AxiomError("mediator-typing", "component of λ at " + K.object(k));
  }
  for (int f = 0; f < K.num_one_cells(); ++f) {
    h.on1[f] = L.find_one(h.on0[K.one(f).src], h.on0[K.one(f).tgt], R.on1[f], lam.at1[f], Q.on1[f]);
    if (h.on1[f] < 0) throw AxiomError("mediator-typing", "component of λ at " + K.one(f).id);
  }
  for (int a = 0; a < K.num_two_cells(); ++a) {
    h.on2[a] = L.find_two(h.on1[K.two(a).src], h.on1[K.two(a).tgt], R.on2[a], Q.on2[a]);
    if (h.on2[a] < 0) throw AxiomError("mediator-typing", "2-cell " + K.two(a).id + " has no lift");
  }
  return h;
}

bool mediator_unique(const Comma& L, const TwoFunctor& R, const TwoFunctor& Q, const Transformation& lam) {
  const TwoCategory& K = *R.source;
  const TwoFunctor h = mediate(L, R, Q, lam);
  // A second mediator must agree with h after p_X, p_Z and π; count the candidates.
  for (int k = 0; k < K.num_objects(); ++k) {
    int n = 0;
    for (int o = 0; o < int(L.obj.size()); ++o)
      n += L.pX.on0[o] == R.on0[k] && L.pZ.on0[o] == Q.on0[k] && L.pi.at0[o] == lam.at0[k];
    if (n != 1) return false;
  }
  for (int f = 0; f < K.num_one_cells(); ++f) {
    int n = 0;
    for (int u = 0; u < int(L.one.size()); ++u)
      n += L.one[u][0] == h.on0[K.one(f).src] && L.one[u][1] == h.on0[K.one(f).tgt] && L.pX.on1[u] == R.on1[f] &&
           L.pZ.on1[u] == Q.on1[f] && L.pi.at1[u] == lam.at1[f];
    if (n != 1) return false;
  }
  for (int a = 0; a < K.num_two_cells(); ++a) {
    int n = 0;
    for (int c = 0; c < int(L.two.size()); ++c)
      n += L.two[c][0] == h.on1[K.two(a).src] && L.two[c][1] == h.on1[K.two(a).tgt] && L.pX.on2[c] == R.on2[a] &&
           L.pZ.on2[c] == Q.on2[a];
    if (n != 1) return false;
  }
  return same_maps(compose(L.pX, h), R) && same_maps(compose(L.pZ, h), Q);
}

TwoFunctor pullback_inclusion(const Pullback& pb, const Comma& L) {
  const TwoCategory& Y = *L.F.target;
  Transformation lam;
  lam.orientation = L.orientation;
  lam.flavor = Flavor::strict;
  lam.source = compose(L.F, pb.p1);
  lam.target = compose(L.G, pb.p2);
  for (auto& o : pb.obj) lam.at0.push_back(Y.id1(L.F.on0[o[0]]));
  for (auto& u : pb.one) lam.at1.push_back(Y.id2(L.F.on1[u[0]]));
  return mediate(L, pb.p1, pb.p2, lam);
}

TwoFunctor base_change(const Comma& from, const Comma& to, int phi) {
  const TwoCategory& Y = *from.F.target;
  TwoFunctor h = functor_between(from.cat, to.cat);
  for (int o = 0; o < int(from.obj.size()); ++o) {
    auto& A = from.obj[o];
    h.on0[o] = to.find_obj(A[0], Y.compose(phi, A[1]), A[2]);
  }
  for (int u = 0; u < int(from.one.size()); ++u) {
    auto& U = from.one[u];
    h.on1[u] = to.find_one(h.on0[U[0]], h.on0[U[1]], U[2], Y.whisker_l(phi, U[3]), U[4]);
  }
  for (int a = 0; a < int(from.two.size()); ++a) {
    auto& A = from.two[a];
    h.on2[a] = to.find_two(h.on1[A[0]], h.on1[A[1]], A[2], A[3]);
  }
  validate(h);
  return h;
}

Fiber strict_fiber(const TwoFunctor& P, int x) {
  const TwoCategory &C = *P.source, &D = *P.target;
  const int ix = D.id1(x), iix = D.id2(ix);
  std::vector<int> o0, o1, o2, r0(C.num_objects(), -1), r1(C.num_one_cells(), -1), r2(C.num_two_cells(), -1);
  for (int i = 0; i < C.num_objects(); ++i)
    if (P.on0[i] == x) r0[i] = int(o0.size()), o0.push_back(i);
  for (int i = 0; i < C.num_one_cells(); ++i)
    if (P.on1[i] == ix) r1[i] = int(o1.size()), o1.push_back(i);
  for (int i = 0; i < C.num_two_cells(); ++i)
    if (P.on2[i] == iix) r2[i] = int(o2.size()), o2.push_back(i);
  TwoCategoryBuilder b;
  for (int i : o0) b.add_object(C.object(i));
  for (int i : o1) b.add_one_cell(C.one(i).id, r0[C.one(i).src], r0[C.one(i).tgt]);
  for (int i : o2) b.add_two_cell(C.two(i).id, r1[C.two(i).src], r1[C.two(i).tgt]);
  for (int i = 0; i < int(o0.size()); ++i) b.set_id1(i, r1[C.id1(o0[i])]);
  for (int i = 0; i < int(o1.size()); ++i) b.set_id2(i, r2[C.id2(o1[i])]);
  b.fill([&](int g, int f) { return r1[C.compose(o1[g], o1[f])]; },
         [&](int q, int p) { return r2[C.vcompose(o2[q], o2[p])]; },
         [&](int k, int a) { return r2[C.whisker_l(o1[k], o2[a])]; },
         [&](int a, int h) { return r2[C.whisker_r(o2[a], o1[h])]; });
  Fiber fb;
  auto cat = std::make_shared<TwoCategory>(b.finish());
  cat->construction = "strict fiber over " + D.object(x);
  fb.cat = cat;
  fb.incl.source = cat;
  fb.incl.target = P.source;
  fb.incl.on0 = o0;
  fb.incl.on1 = o1;
  fb.incl.on2 = o2;
  return fb;
}

namespace {

// Backtracking search for h around a fixed candidate ι.
bool search_witness(const TwoCategory& E, int iota, OplaxInitialWitness& w) {
  const int n0 = E.num_objects(), n1 = E.num_one_cells();
  w.iota = iota;
  w.h0.assign(n0, -1);
  w.h1.assign(n1, -1);
  for (int j = 0; j < n0; ++j)
    if (E.hom(iota, j).empty()) return false;
  // 1-cells are assigned in index order; each constraint is checked once its
  // highest-index member is known.
  std::vector<std::vector<int>> nat_at(n1), comp_at(n1);
  for (int f = 0; f < n1; ++f)
    for (int th : E.two_from(f)) {
      const int f2 = E.two(th).tgt;
      nat_at[std::max(f, f2)].push_back(th);
    }
  std::vector<std::array<int, 2>> pairs;
  for (int f = 0; f < n1; ++f)
    for (int g : E.out_one(E.one(f).tgt)) {
      const int gf = E.compose(g, f);
      comp_at[std::max({f, g, gf})].push_back(int(pairs.size()));
      pairs.push_back({g, f});
    }

  auto ok_at = [&](int f) {
    for (int th : nat_at[f]) {
      const int a = E.two(th).src, a2 = E.two(th).tgt;
      const int i = E.one(a).src;
      if (E.vcompose(E.whisker_r(th, w.h0[i]), w.h1[a]) != w.h1[a2]) return false;
    }
    for (int p : comp_at[f]) {
      const int g = pairs[p][0], ff = pairs[p][1];
      if (w.h1[E.compose(g, ff)] != E.vcompose(E.whisker_l(g, w.h1[ff]), w.h1[g])) return false;
    }
    return true;
  };

  std::function<bool(int)> assign1 = [&](int f) -> bool {
    if (f == n1) return true;
    const int i = E.one(f).src, j = E.one(f).tgt;
    const int from = w.h0[j], to = E.compose(f, w.h0[i]);
    if (E.is_id1(f)) {
      if (from != to) return false;
      w.h1[f] = E.id2(from);
      return ok_at(f) && assign1(f + 1);
    }
    for (int c : E.hom2(from, to)) {
      w.h1[f] = c;
      if (ok_at(f) && assign1(f + 1)) return true;
    }
    w.h1[f] = -1;
    return false;
  };

  std::function<bool(int)> assign0 = [&](int j) -> bool {
    if (j == n0) return assign1(0);
    if (j == iota) {
      w.h0[j] = E.id1(iota);
      return assign0(j + 1);
    }
    for (int h : E.hom(iota, j)) {
      w.h0[j] = h;
      if (assign0(j + 1)) return true;
    }
    return false;
  };
  return assign0(0);
}

}  // namespace

std::optional<OplaxInitialWitness> find_oplax_initial(const TwoCategory& E) {
  for (int iota = 0; iota < E.num_objects(); ++iota) {
    OplaxInitialWitness w;
    if (search_witness(E, iota, w)) return w;
  }
  return std::nullopt;
}

std::optional<OplaxInitialWitness> find_oplax_terminal(const TwoCategory& E) {
  return find_oplax_initial(op_dual(E));
}

Transformation witness_transformation(TwoCatPtr E, const OplaxInitialWitness& w) {
  Transformation t;
  t.orientation = Orientation::oplax;
  TwoFunctor c = functor_between(E, E);
  c.on0.assign(E->num_objects(), w.iota);
  c.on1.assign(E->num_one_cells(), E->id1(w.iota));
  c.on2.assign(E->num_two_cells(), E->id2(E->id1(w.iota)));
  t.source = c;
  t.target = identity_functor(E);
  t.at0 = w.h0;
  t.at1 = w.h1;
  return t;
}

TwoFunctor dual_functor(const TwoFunctor& F, TwoCatPtr src, TwoCatPtr tgt) {
  TwoFunctor G = F;
  G.source = src;
  G.target = tgt;
  return G;
}

TwoFunctor comma_duality_iso(const Comma& L1, TwoCatPtr dual_of_L1, const Comma& L2, bool rev2) {
  TwoFunctor h = functor_between(dual_of_L1, L2.cat);
  for (int o = 0; o < int(L1.obj.size()); ++o) {
    auto& A = L1.obj[o];
    h.on0[o] = L2.find_obj(A[2], A[1], A[0]);
  }
  // 1-cells of both duals run backwards.
  for (int u = 0; u < int(L1.one.size()); ++u) {
    auto& U = L1.one[u];
    h.on1[u] = L2.find_one(h.on0[U[1]], h.on0[U[0]], U[4], U[3], U[2]);
  }
  for (int a = 0; a < int(L1.two.size()); ++a) {
    auto& A = L1.two[a];
    const int s = h.on1[A[0]], t = h.on1[A[1]];
    h.on2[a] = rev2 ? L2.find_two(t, s, A[3], A[2]) : L2.find_two(s, t, A[3], A[2]);
  }
  return h;
}

namespace {

// Shared enumeration for both diagram commas. In the lax-side case the
// object data are λ_e: Fc → Ge, λ_f: λ_e' ⇒ Gf∘λ_e; in the oplax-side case
// g_e: Ge → Fc, g_f: g_e ⇒ g_e'∘Gf.
DiagramComma build_diagram_comma(const TwoFunctor& F, const TwoFunctor& G, bool lax_side) {
  const TwoCategory &C = *F.source, &D = *F.target, &E = *G.source;
  const int e0 = E.num_objects(), e1 = E.num_one_cells();
  DiagramComma R;
  R.lax_side = lax_side;
  R.F = F;
  R.G = G;

  // Constraints on an object, indexed by the highest 1-cell slot they mention.
  std::vector<std::vector<int>> nat_at(e1), comp_at(e1);
  std::vector<std::array<int, 2>> pairs;
  for (int f = 0; f < e1; ++f)
    for (int th : E.two_from(f)) nat_at[std::max(f, E.two(th).tgt)].push_back(th);
  for (int f = 0; f < e1; ++f)
    for (int g : E.out_one(E.one(f).tgt)) {
      comp_at[std::max({f, g, E.compose(g, f)})].push_back(int(pairs.size()));
      pairs.push_back({g, f});
    }

  std::vector<int> cur(1 + e0 + e1, -1);
  auto comp0 = [&](int e) { return cur[1 + e]; };
  auto comp1 = [&](int f) { return cur[1 + e0 + f]; };
  auto ok_at = [&](int f) {
    for (int th : nat_at[f]) {
      const int a = E.two(th).src, a2 = E.two(th).tgt;
      const int Gth = G.on2[th];
      if (lax_side) {
        if (D.vcompose(D.whisker_r(Gth, comp0(E.one(a).src)), comp1(a)) != comp1(a2)) return false;
      } else {
        if (D.vcompose(D.whisker_l(comp0(E.one(a).tgt), Gth), comp1(a)) != comp1(a2)) return false;
      }
    }
    for (int p : comp_at[f]) {
      const int g = pairs[p][0], ff = pairs[p][1], gf = E.compose(g, ff);
      if (lax_side) {
        if (comp1(gf) != D.vcompose(D.whisker_l(G.on1[g], comp1(ff)), comp1(g))) return false;
      } else {
        if (comp1(gf) != D.vcompose(D.whisker_r(comp1(g), G.on1[ff]), comp1(ff))) return false;
      }
    }
    return true;
  };
  std::function<void(int)> assign1 = [&](int f) {
    if (f == e1) {
      R.ix0[cur] = int(R.obj.size());
      R.obj.push_back(cur);
      return;
    }
    const int i = E.one(f).src, j = E.one(f).tgt;
    int from, to;
    if (lax_side)
      from = comp0(j), to = D.compose(G.on1[f], comp0(i));
    else
      from = comp0(i), to = D.compose(comp0(j), G.on1[f]);
    if (E.is_id1(f)) {
      if (from != to) return;
      cur[1 + e0 + f] = D.id2(from);
      if (ok_at(f)) assign1(f + 1);
      return;
    }
    for (int c : D.hom2(from, to)) {
      cur[1 + e0 + f] = c;
      if (ok_at(f)) assign1(f + 1);
    }
  };
  std::function<void(int)> assign0 = [&](int e) {
    if (e == e0) {
      assign1(0);
      return;
    }
    const int Fc = F.on0[cur[0]], Ge = G.on0[e];
    for (int h : lax_side ? D.hom(Fc, Ge) : D.hom(Ge, Fc)) {
      cur[1 + e] = h;
      assign0(e + 1);
    }
  };
  for (int c = 0; c < C.num_objects(); ++c) {
    cur[0] = c;
    assign0(0);
  }

  // 1-cells [s, m] (lax side) or [α, t] (oplax side); the C-slot is s or t.
  auto one_ok = [&](const std::vector<int>& A, const std::vector<int>& B, int s, const std::vector<int>& m) {
    const int Fs = F.on1[s];
    for (int f = 0; f < e1; ++f) {
      const int i = E.one(f).src, j = E.one(f).tgt;
      if (lax_side) {
        // (Gf∗m_i)·λ_f = (λ'_f∗Fs)·m_j
        if (D.vcompose(D.whisker_l(G.on1[f], m[i]), A[1 + e0 + f]) != D.vcompose(D.whisker_r(B[1 + e0 + f], Fs), m[j]))
          return false;
      } else {
        // (α_j∗Gf)·g'_f = (Ft∗g_f)·α_i
        if (D.vcompose(D.whisker_r(m[j], G.on1[f]), B[1 + e0 + f]) != D.vcompose(D.whisker_l(Fs, A[1 + e0 + f]), m[i]))
          return false;
      }
    }
    return true;
  };
  std::map<std::pair<int, int>, std::vector<int>> between;
  for (int o = 0; o < int(R.obj.size()); ++o)
    for (int o2 = 0; o2 < int(R.obj.size()); ++o2) {
      const auto &A = R.obj[o], &B = R.obj[o2];
      for (int s : C.hom(A[0], B[0])) {
        const int Fs = F.on1[s];
        std::vector<int> m(e0, -1);
        std::function<void(int)> rec = [&](int e) {
          if (e == e0) {
            if (!one_ok(A, B, s, m)) return;
            std::vector<int> key{o, o2, s};
            key.insert(key.end(), m.begin(), m.end());
            R.ix1[key] = int(R.one.size());
            between[{o, o2}].push_back(int(R.one.size()));
            R.one.push_back(key);
            return;
          }
          const int from = lax_side ? A[1 + e] : B[1 + e];
          const int to = lax_side ? D.compose(B[1 + e], Fs) : D.compose(Fs, A[1 + e]);
          for (int c : D.hom2(from, to)) {
            m[e] = c;
            rec(e + 1);
          }
        };
        rec(0);
      }
    }

  for (auto& [ends, cells] : between)
    for (int u : cells)
      for (int u1 : cells) {
        const auto &U = R.one[u], &U1 = R.one[u1];
        const auto &A = R.obj[U[0]], &B = R.obj[U[1]];
        for (int phi : C.hom2(U[2], U1[2])) {
          const int Fphi = F.on2[phi];
          bool ok = true;
          for (int e = 0; e < e0 && ok; ++e) {
            if (lax_side)
              ok = D.vcompose(D.whisker_l(B[1 + e], Fphi), U[3 + e]) == U1[3 + e];
            else
              ok = D.vcompose(D.whisker_r(Fphi, A[1 + e]), U[3 + e]) == U1[3 + e];
          }
          if (ok) {
            R.ix2[{u, u1, phi}] = int(R.two.size());
            R.two.push_back({u, u1, phi});
          }
        }
      }

  auto comp = [&](int v, int u) {
    const auto &U = R.one[u], &V = R.one[v];
    std::vector<int> key{U[0], V[1], C.compose(V[2], U[2])};
    for (int e = 0; e < e0; ++e) {
      if (lax_side)
        key.push_back(D.vcompose(D.whisker_r(V[3 + e], F.on1[U[2]]), U[3 + e]));
      else
        key.push_back(D.vcompose(D.whisker_l(F.on1[V[2]], U[3 + e]), V[3 + e]));
    }
    return key_find(R.ix1, key);
  };

  TwoCategoryBuilder b;
  std::vector<std::string> n0, n1, n2;
  for (auto& A : R.obj) {
    std::vector<std::string> parts{C.object(A[0])};
    for (int e = 0; e < e0; ++e) parts.push_back(D.one(A[1 + e]).id);
    for (int f = 0; f < e1; ++f) parts.push_back(D.two(A[1 + e0 + f]).id);
    n0.push_back(bracket(parts));
  }
  uniquify(n0, [](int i) { return std::to_string(i); });
  for (auto& s : n0) b.add_object(s);
  for (auto& U : R.one) {
    std::vector<std::string> parts{C.one(U[2]).id};
    for (int e = 0; e < e0; ++e) parts.push_back(D.two(U[3 + e]).id);
    n1.push_back(bracket(parts));
  }
  uniquify(n1, [&](int i) { return bracket({n0[R.one[i][0]], n0[R.one[i][1]]}); });
  for (int i = 0; i < int(R.one.size()); ++i) b.add_one_cell(n1[i], R.one[i][0], R.one[i][1]);
  for (auto& A : R.two) n2.push_back(bracket({C.two(A[2]).id}));
  uniquify(n2, [&](int i) { return bracket({n1[R.two[i][0]], n1[R.two[i][1]]}); });
  for (int i = 0; i < int(R.two.size()); ++i) b.add_two_cell(n2[i], R.two[i][0], R.two[i][1]);
  for (int o = 0; o < int(R.obj.size()); ++o) {
    const auto& A = R.obj[o];
    std::vector<int> key{o, o, C.id1(A[0])};
    for (int e = 0; e < e0; ++e) key.push_back(D.id2(A[1 + e]));
    b.set_id1(o, R.ix1.at(key));
  }
  for (int u = 0; u < int(R.one.size()); ++u) b.set_id2(u, R.ix2.at({u, u, C.id2(R.one[u][2])}));
  b.fill(comp,
         [&](int q, int p) { return key_find(R.ix2, {R.two[p][0], R.two[q][1], C.vcompose(R.two[q][2], R.two[p][2])}); },
         [&](int k, int a) {
           return key_find(R.ix2, {comp(k, R.two[a][0]), comp(k, R.two[a][1]), C.whisker_l(R.one[k][2], R.two[a][2])});
         },
         [&](int a, int h) {
           return key_find(R.ix2, {comp(R.two[a][0], h), comp(R.two[a][1], h), C.whisker_r(R.two[a][2], R.one[h][2])});
         });
  auto cat = std::make_shared<TwoCategory>(b.finish());
  cat->construction = lax_side ? "ldar" : "oprdar";
  R.cat = cat;
  R.proj = functor_between(cat, F.source);
  for (int o = 0; o < int(R.obj.size()); ++o) R.proj.on0[o] = R.obj[o][0];
  for (int u = 0; u < int(R.one.size()); ++u) R.proj.on1[u] = R.one[u][2];
  for (int a = 0; a < int(R.two.size()); ++a) R.proj.on2[a] = R.two[a][2];
  return R;
}

}  // namespace

DiagramComma ldar(const TwoFunctor& F, const TwoFunctor& G) { return build_diagram_comma(F, G, true); }
DiagramComma oprdar(const TwoFunctor& G, const TwoFunctor& F) { return build_diagram_comma(F, G, false); }

TwoFunctor restrict_along(const DiagramComma& from, const DiagramComma& to, const TwoFunctor& u) {
  const TwoCategory& E = *u.source;
  const int e0 = E.num_objects(), e1 = E.num_one_cells();
  const int big0 = from.G.source->num_objects();
  TwoFunctor h = functor_between(from.cat, to.cat);
  for (int o = 0; o < int(from.obj.size()); ++o) {
    auto& A = from.obj[o];
    std::vector<int> key{A[0]};
    for (int e = 0; e < e0; ++e) key.push_back(A[1 + u.on0[e]]);
    for (int f = 0; f < e1; ++f) key.push_back(A[1 + big0 + u.on1[f]]);
    h.on0[o] = key_find(to.ix0, key);
  }
  for (int i = 0; i < int(from.one.size()); ++i) {
    auto& U = from.one[i];
    std::vector<int> key{h.on0[U[0]], h.on0[U[1]], U[2]};
    for (int e = 0; e < e0; ++e) key.push_back(U[3 + u.on0[e]]);
    h.on1[i] = key_find(to.ix1, key);
  }
  for (int a = 0; a < int(from.two.size()); ++a) {
    auto& A = from.two[a];
    h.on2[a] = key_find(to.ix2, {h.on1[A[0]], h.on1[A[1]], A[2]});
  }
  validate(h);
  return h;
}

InitialComparison lp_initial_maps(const Comma& L, const DiagramComma& Ld, const OplaxInitialWitness& w) {
  const TwoCategory &D = *Ld.F.target, &E = *Ld.G.source;
  const TwoFunctor& G = Ld.G;
  const int e0 = E.num_objects(), e1 = E.num_one_cells();
  InitialComparison r;
  r.d = functor_between(L.cat, Ld.cat);
  r.e = functor_between(Ld.cat, L.cat);
  const int star = 0;
  for (int o = 0; o < int(L.obj.size()); ++o) {
    const int c = L.obj[o][0], f = L.obj[o][1];
    std::vector<int> key{c};
    for (int j = 0; j < e0; ++j) key.push_back(D.compose(G.on1[w.h0[j]], f));
    for (int g = 0; g < e1; ++g) key.push_back(D.whisker_r(G.on2[w.h1[g]], f));
    r.d.on0[o] = key_find(Ld.ix0, key);
  }
  for (int u = 0; u < int(L.one.size()); ++u) {
    auto& U = L.one[u];
    std::vector<int> key{r.d.on0[U[0]], r.d.on0[U[1]], U[2]};
    for (int j = 0; j < e0; ++j) key.push_back(D.whisker_l(G.on1[w.h0[j]], U[3]));
    r.d.on1[u] = key_find(Ld.ix1, key);
  }
  for (int a = 0; a < int(L.two.size()); ++a)
    r.d.on2[a] = key_find(Ld.ix2, {r.d.on1[L.two[a][0]], r.d.on1[L.two[a][1]], L.two[a][2]});

  const TwoCategory& T = *L.G.source;
  for (int o = 0; o < int(Ld.obj.size()); ++o) r.e.on0[o] = L.find_obj(Ld.obj[o][0], Ld.obj[o][1 + w.iota], star);
  for (int u = 0; u < int(Ld.one.size()); ++u) {
    auto& U = Ld.one[u];
    r.e.on1[u] = L.find_one(r.e.on0[U[0]], r.e.on0[U[1]], U[2], U[3 + w.iota], T.id1(star));
  }
  for (int a = 0; a < int(Ld.two.size()); ++a)
    r.e.on2[a] = L.find_two(r.e.on1[Ld.two[a][0]], r.e.on1[Ld.two[a][1]], Ld.two[a][2], T.id2(T.id1(star)));

  for (auto* m : {&r.d.on0, &r.d.on1, &r.d.on2, &r.e.on0, &r.e.on1, &r.e.on2})
    if (std::find(m->begin(), m->end(), -1) != m->end())
      throw AxiomError("initial-comparison", "a cell has no image; the witness does not fit this diagram");

  const TwoFunctor de = compose(r.d, r.e);
  r.unit.orientation = Orientation::lax;
  r.unit.flavor = Flavor::strict;
  r.unit.source = identity_functor(Ld.cat);
  r.unit.target = de;
  const TwoCategory& K = *Ld.cat;
  for (int o = 0; o < int(Ld.obj.size()); ++o) {
    auto& A = Ld.obj[o];
    std::vector<int> key{o, de.on0[o], Ld.F.source->id1(A[0])};
    for (int j = 0; j < e0; ++j) key.push_back(A[1 + e0 + w.h0[j]]);
    r.unit.at0.push_back(key_find(Ld.ix1, key));
  }
  for (int u = 0; u < int(Ld.one.size()); ++u) {
    const int x = Ld.one[u][0], y = Ld.one[u][1];
    const int a = r.unit.at0[x], b = r.unit.at0[y];
    if (a < 0 || b < 0) throw AxiomError("initial-comparison", "unit component missing");
    const int lhs = K.compose(de.on1[u], a), rhs = K.compose(b, u);
    if (lhs != rhs) throw AxiomError("initial-comparison", "unit is not 2-natural at " + K.one(u).id);
    r.unit.at1.push_back(K.id2(lhs));
  }
  return r;
}

LpId lp_id(const TwoFunctor& G) {
  const TwoCategory& D = *G.target;
  const TwoCategory& E = *G.source;
  LpId r;
  r.L = laco(identity_functor(G.target), G);
  const Comma& L = r.L;
  Transformation lam;
  lam.orientation = Orientation::lax;
  lam.flavor = Flavor::strict;
  lam.source = G;
  lam.target = G;
  for (int z = 0; z < E.num_objects(); ++z) lam.at0.push_back(D.id1(G.on0[z]));
  for (int f = 0; f < E.num_one_cells(); ++f) lam.at1.push_back(D.id2(G.on1[f]));
  r.J = mediate(L, G, identity_functor(G.source), lam);

  const TwoCategory& K = *L.cat;
  const TwoFunctor Jp = compose(r.J, L.pZ);
  r.mu.orientation = Orientation::lax;
  r.mu.flavor = Flavor::lax;
  r.mu.source = identity_functor(L.cat);
  r.mu.target = Jp;
  for (int o = 0; o < int(L.obj.size()); ++o) {
    auto& A = L.obj[o];
    r.mu.at0.push_back(L.find_one(o, Jp.on0[o], A[1], D.id2(A[1]), E.id1(A[2])));
  }
  for (int u = 0; u < int(L.one.size()); ++u) {
    auto& U = L.one[u];
    const int a = r.mu.at0[U[0]], b = r.mu.at0[U[1]];
    r.mu.at1.push_back(L.find_two(K.compose(Jp.on1[u], a), K.compose(b, u), U[3], E.id2(U[4])));
  }
  return r;
}

}  // namespace twocat
