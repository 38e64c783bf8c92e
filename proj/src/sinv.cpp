#include "twocat/sinv.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "twocat/fixtures.hpp"

namespace twocat {

namespace {

void fail(const std::string& axiom, const std::string& detail) { throw AxiomError(axiom, detail); }

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) p[std::max(a, b)] = std::min(a, b);
  }
};

// Builder-side state shared by the composition callbacks.
struct Ctx {
  SInv& R;
  const PGM& P;
  const PGMAction& M;
  const TwoCategory &S, &X;
  Ctx(SInv& r) : R(r), P(*r.S), M(r.act), S(*r.S->S), X(*r.act.X) {}

  int ax(int a) const { return R.obj[a][0]; }
  int xx(int a) const { return R.obj[a][1]; }
  const std::array<int, 5>& c(int f) const { return R.one[f]; }

  int comp1(int g, int f) const {
    // (t,γ,ψ)∘(s,α,φ) = (t⊕s, γ∘tα, ψ∘tφ)
    const auto &F = c(f), &G = c(g);
    const int t = G[2];
    const int al = S.compose(G[3], P.lt1(t, F[3]));
    const int ph = X.compose(G[4], M.left[t].on1[F[4]]);
    const int r = R.find_one(F[0], P.sum[t][F[2]], al, ph);
    if (r < 0) fail("sinv-composition", "1-cell composite missing");
    return r;
  }

  int vrep(int c1, int c2, int c3, const std::array<int, 3>& b, const std::array<int, 3>& a) const {
    const int A0 = ax(c(c1)[0]), X0 = xx(c(c1)[0]);
    const int p = S.compose(b[0], a[0]);
    const int A = S.vcompose(S.whisker_r(b[1], P.rt1(a[0], A0)), a[1]);
    const int F = X.vcompose(X.whisker_r(b[2], M.right[X0].on1[a[0]]), a[2]);
    const int r = R.cls(c1, c3, p, A, F);
    if (r < 0) fail("sinv-vertical", "pasted triangle is not a 2-cell representative");
    (void)c2;
    return r;
  }

  // Both horizontal composite formulas; b on (t,γ,ψ) ⇒ (t',γ',ψ'),
  // a on (s,α,φ) ⇒ (s',α',φ').
  std::pair<int, int> hrep(int g, int g1, int f, int f1, const std::array<int, 3>& b, const std::array<int, 3>& a) const {
    const auto &Fa = c(f), &Fb = c(f1), &Ga = c(g), &Gb = c(g1);
    const int a0 = ax(Fa[0]), x0 = xx(Fa[0]);
    const int s = Fa[2], s1 = Fb[2], t = Ga[2], t1 = Gb[2];
    const int al = Fa[3], al1 = Fb[3], ph = Fa[4], ph1 = Fb[4];
    const int ga1 = Gb[3], ps1 = Gb[4];
    const int q = b[0], B = b[1], G = b[2], p = a[0], A = a[1], Fc = a[2];
    const int src = comp1(g, f), tgt = comp1(g1, f1);

    const int r = S.compose(P.rt1(q, s1), P.lt1(t, p));
    const int tpa = P.lt1(t, P.rt1(p, a0));
    const int C = S.vcompose(S.whisker_l(ga1, S.whisker_r(P.Sigma(q, al1), tpa)), S.hcompose(B, P.lt2(t, A)));
    const int tpx = M.left[t].on1[M.right[x0].on1[p]];
    const int H = X.vcompose(X.whisker_l(ps1, X.whisker_r(M.Sigma(q, ph1), tpx)), X.hcompose(G, M.left[t].on2[Fc]));

    const int r2 = S.compose(P.lt1(t1, p), P.rt1(q, s));
    const int qsa = P.rt1(q, P.sum[s][a0]);
    const int C2 = S.vcompose(S.whisker_l(ga1, S.whisker_r(P.lt2(t1, A), qsa)),
                              S.vcompose(S.whisker_l(ga1, P.Sigma(q, al)), S.whisker_r(B, P.lt1(t, al))));
    const int qsx = M.right[M.act[s][x0]].on1[q];
    const int H2 = X.vcompose(X.whisker_l(ps1, X.whisker_r(M.left[t1].on2[Fc], qsx)),
                              X.vcompose(X.whisker_l(ps1, M.Sigma(q, ph)), X.whisker_r(G, M.left[t].on1[ph])));
    const int k1 = R.cls(src, tgt, r, C, H), k2 = R.cls(src, tgt, r2, C2, H2);
    if (k1 < 0 || k2 < 0) fail("sinv-horizontal", "horizontal composite is not a 2-cell representative");
    return {k1, k2};
  }

  std::array<int, 3> idrep(int f) const { return {S.id1(c(f)[2]), S.id2(c(f)[3]), X.id2(c(f)[4])}; }

  int hcomp_checked(int b, int a) {
    const auto &Tb = R.two[b], &Ta = R.two[a];
    int out = -1;
    for (auto& rb : R.reps[b])
      for (auto& ra : R.reps[a]) {
        auto [k1, k2] = hrep(Tb[0], Tb[1], Ta[0], Ta[1], rb, ra);
        ++R.congruence_checks;
        if (k1 != k2) fail("sinv-quotient", "the two horizontal composite formulas give different classes");
        if (out >= 0 && k1 != out) fail("sinv-quotient", "horizontal composite depends on the representative");
        out = k1;
      }
    return out;
  }

  int whisker_l(int k, int a) {
    const auto& Ta = R.two[a];
    int out = -1;
    for (auto& ra : R.reps[a]) {
      auto [k1, k2] = hrep(k, k, Ta[0], Ta[1], idrep(k), ra);
      ++R.congruence_checks;
      if (k1 != k2) fail("sinv-quotient", "the two horizontal composite formulas give different classes");
      if (out >= 0 && k1 != out) fail("sinv-quotient", "whiskering depends on the representative");
      out = k1;
    }
    return out;
  }

  int whisker_r(int a, int h) {
    const auto& Ta = R.two[a];
    int out = -1;
    for (auto& ra : R.reps[a]) {
      auto [k1, k2] = hrep(Ta[0], Ta[1], h, h, ra, idrep(h));
      ++R.congruence_checks;
      if (k1 != k2) fail("sinv-quotient", "the two horizontal composite formulas give different classes");
      if (out >= 0 && k1 != out) fail("sinv-quotient", "whiskering depends on the representative");
      out = k1;
    }
    return out;
  }

  int vcomp(int b, int a) {
    const auto &Ta = R.two[a], &Tb = R.two[b];
    int out = -1;
    for (auto& rb : R.reps[b])
      for (auto& ra : R.reps[a]) {
        const int k = vrep(Ta[0], Ta[1], Tb[1], rb, ra);
        ++R.congruence_checks;
        if (out >= 0 && k != out) fail("sinv-quotient", "vertical composite depends on the representative");
        out = k;
      }
    return out;
  }
};

std::string cell_name(const SInv& R, int f) {
  const TwoCategory &S = *R.S->S, &X = *R.act.X;
  const auto& c = R.one[f];
  if (R.point) return bracket({S.object(c[2]), S.one(c[3]).id}, '(', ')');
  return bracket({S.object(c[2]), S.one(c[3]).id, X.one(c[4]).id}, '(', ')');
}

// Class of a representative, with a message naming the construction.
int class_of(const SInv& R, int c1, int c2, int p, int A, int F, const char* what) {
  const int k = R.cls(c1, c2, p, A, F);
  if (k < 0) fail("sinv-cell", std::string(what) + " is not a 2-cell representative");
  return k;
}

}  // namespace

namespace {

SInv build(std::shared_ptr<const PGM> Sp, const PGMAction& act, bool point) {
  SInv R;
  R.point = point;
  R.S = Sp;
  R.act = act;
  const PGM& P = *Sp;
  const TwoCategory &S = *P.S, &X = *act.X;
  const int nS = S.num_objects(), nX = X.num_objects();

  for (int a = 0; a < nS; ++a)
    for (int x = 0; x < nX; ++x) R.obj.push_back({a, x});
  for (int src = 0; src < int(R.obj.size()); ++src) {
    const int a = R.obj[src][0], x = R.obj[src][1];
    for (int s = 0; s < nS; ++s)
      for (int al : S.out_one(P.sum[s][a]))
        for (int ph : X.out_one(act.act[s][x])) {
          const int tgt = R.find_obj(S.one(al).tgt, X.one(ph).tgt);
          R.ix1[{src, s, al, ph}] = int(R.one.size());
          R.one.push_back({src, tgt, s, al, ph});
        }
  }
  // parallel groups
  std::map<std::pair<int, int>, std::vector<int>> par;
  for (int f = 0; f < int(R.one.size()); ++f) par[{R.one[f][0], R.one[f][1]}].push_back(f);

  std::vector<std::array<int, 5>> all;  // c1, c2, p, A, F
  for (auto& [key, fs] : par) {
    const int a = R.obj[key.first][0], x = R.obj[key.first][1];
    for (int c1 : fs)
      for (int c2 : fs) {
        const auto &F1 = R.one[c1], &F2 = R.one[c2];
        for (int p : S.hom(F1[2], F2[2])) {
          const int pa = P.rt1(p, a), px = act.right[x].on1[p];
          for (int A : S.hom2(F1[3], S.compose(F2[3], pa)))
            for (int F : X.hom2(F1[4], X.compose(F2[4], px))) all.push_back({c1, c2, p, A, F});
        }
      }
  }
  KeyIndex rix;
  for (int r = 0; r < int(all.size()); ++r) rix[{all[r][0], all[r][1], all[r][2], all[r][3], all[r][4]}] = r;
  UnionFind uf(int(all.size()));
  for (int r = 0; r < int(all.size()); ++r) {
    const auto& t = all[r];
    const auto& F2 = R.one[t[1]];
    const int a = R.obj[R.one[t[0]][0]][0], x = R.obj[R.one[t[0]][0]][1];
    for (int q : S.hom(S.one(t[2]).src, S.one(t[2]).tgt))
      for (int th : S.hom2(t[2], q)) {
        if (!S.invertible2(th)) continue;
        const int B = S.vcompose(S.whisker_l(F2[3], P.rt2(th, a)), t[3]);
        const int G = X.vcompose(X.whisker_l(F2[4], act.right[x].on2[th]), t[4]);
        const int o = key_find(rix, {t[0], t[1], q, B, G});
        if (o < 0) fail("sinv-quotient", "Θ-translate of a representative is not a representative");
        uf.join(r, o);
      }
  }
  // classes in order of (c1, c2, least representative); `all` is already
  // sorted that way within each parallel pair
  std::vector<int> cls_of(all.size(), -1);
  std::vector<int> order(all.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int u, int v) { return all[u] < all[v]; });
  for (int r : order) {
    const int root = uf.find(r);
    if (cls_of[root] < 0) {
      cls_of[root] = int(R.two.size());
      R.two.push_back(all[r]);
      R.reps.emplace_back();
    }
    cls_of[r] = cls_of[root];
    R.reps[cls_of[r]].push_back({all[r][2], all[r][3], all[r][4]});
    R.rep_ix[{all[r][0], all[r][1], all[r][2], all[r][3], all[r][4]}] = cls_of[r];
  }

  TwoCategoryBuilder b;
  for (auto& o : R.obj)
    b.add_object(R.point ? S.object(o[0]) : bracket({S.object(o[0]), X.object(o[1])}, '(', ')'));
  std::vector<std::string> n1;
  for (int f = 0; f < int(R.one.size()); ++f) n1.push_back(cell_name(R, f));
  uniquify(n1, [&](int f) { return std::to_string(R.one[f][0]); });
  for (int f = 0; f < int(R.one.size()); ++f) b.add_one_cell(n1[f], R.one[f][0], R.one[f][1]);
  std::vector<std::string> n2;
  for (auto& t : R.two)
    n2.push_back(R.point ? "<" + S.one(t[2]).id + "," + S.two(t[3]).id + ">"
                         : "<" + S.one(t[2]).id + "," + S.two(t[3]).id + "," + X.two(t[4]).id + ">");
  uniquify(n2, [&](int k) { return n1[R.two[k][0]] + "=>" + n1[R.two[k][1]]; });
  for (int k = 0; k < int(R.two.size()); ++k) b.add_two_cell(n2[k], R.two[k][0], R.two[k][1]);
  for (int o = 0; o < int(R.obj.size()); ++o) {
    const int f = R.find_one(o, P.unit, S.id1(R.obj[o][0]), X.id1(R.obj[o][1]));
    if (f < 0) fail("sinv-identity", "no identity 1-cell");
    b.set_id1(o, f);
  }
  for (int f = 0; f < int(R.one.size()); ++f)
    b.set_id2(f, class_of(R, f, f, S.id1(R.one[f][2]), S.id2(R.one[f][3]), X.id2(R.one[f][4]), "identity 2-cell"));
  Ctx ctx(R);
  b.fill([&](int g, int f) { return ctx.comp1(g, f); }, [&](int q, int p) { return ctx.vcomp(q, p); },
         [&](int k, int a) { return ctx.whisker_l(k, a); }, [&](int a, int h) { return ctx.whisker_r(a, h); });
  auto cat = std::make_shared<TwoCategory>(b.finish());
  cat->construction = R.point ? "S^-1 * over " + P.name : "S^-1 X over " + P.name;
  validate(*cat);
  // the two horizontal formulas on arbitrary pairs, and agreement with the
  // composite derived from the whiskerings
  for (int bb = 0; bb < cat->num_two_cells(); ++bb)
    for (int aa = 0; aa < cat->num_two_cells(); ++aa)
      if (cat->src0(bb) == cat->tgt0(aa) && ctx.hcomp_checked(bb, aa) != cat->hcompose(bb, aa))
        fail("sinv-quotient", "horizontal composite disagrees with the whiskered form");
  R.cat = cat;

  // i: x ↦ (e, x)
  TwoFunctor& I = R.i;
  I.source = act.X;
  I.target = cat;
  const int e = P.unit, ie = S.id1(e);
  for (int x = 0; x < nX; ++x) I.on0.push_back(R.find_obj(e, x));
  for (int ph = 0; ph < X.num_one_cells(); ++ph) I.on1.push_back(R.find_one(R.find_obj(e, X.one(ph).src), e, ie, ph));
  for (int F = 0; F < X.num_two_cells(); ++F)
    I.on2.push_back(class_of(R, I.on1[X.two(F).src], I.on1[X.two(F).tgt], ie, S.id2(ie), F, "image of a 2-cell under i"));
  validate(I);
  return R;
}

}  // namespace

SInv s_inv_x(std::shared_ptr<const PGM> S, const PGMAction& act) { return build(std::move(S), act, false); }

SInv s_inv_point(std::shared_ptr<const PGM> S) { return build(S, trivial_action(S, fix_T()), true); }

PointContraction point_contraction(const SInv& pt) {
  const TwoCategory &C = *pt.cat, &S = *pt.S->S;
  for (int a = 0; a < S.num_two_cells(); ++a)
    if (!S.invertible2(a)) fail("hypothesis", "2-cell " + describe_two(S, a) + " of S is not invertible");
  PointContraction out;
  const int e = pt.find_obj(pt.S->unit, 0);
  std::vector<int> can(C.num_objects());
  for (int o = 0; o < C.num_objects(); ++o) {
    const int a = pt.obj[o][0];
    // (a, 1): e → a
    can[o] = pt.find_one(e, a, S.id1(a), pt.act.X->id1(0));
    for (int f : C.hom(e, o)) {
      const auto& h = C.hom2(f, can[o]);
      if (h.size() != 1) {
        out.detail = "hom-category (e," + C.object(o) + "): " + std::to_string(h.size()) + " 2-cells from " + C.one(f).id;
        return out;
      }
    }
  }
  out.hom_terminal = true;
  out.detail = "(a,1) terminal in every (e,a)";
  TwoFunctor K;
  K.source = K.target = pt.cat;
  K.on0.assign(C.num_objects(), e);
  K.on1.assign(C.num_one_cells(), C.id1(e));
  K.on2.assign(C.num_two_cells(), C.id2(C.id1(e)));
  Transformation& L = out.lam;
  L.orientation = Orientation::lax;
  L.flavor = Flavor::lax;
  L.source = NormalPseudofunctor(K);
  L.target = NormalPseudofunctor(identity_functor(pt.cat));
  L.at0 = can;
  for (int f = 0; f < C.num_one_cells(); ++f) {
    // f∘(a,1) ⇒ (b,1)
    const auto& h = C.hom2(C.compose(f, can[C.one(f).src]), can[C.one(f).tgt]);
    if (h.size() != 1) fail("sinv-point", "no unique 2-cell into (b,1) at " + C.one(f).id);
    L.at1.push_back(h[0]);
  }
  validate(L);
  return out;
}

PGMAction xi_action(const SInv& R) {
  const PGM& P = *R.S;
  const PGMAction& M = R.act;
  const TwoCategory &S = *P.S, &X = *M.X, &C = *R.cat;
  PGMAction A;
  A.S = R.S;
  A.X = R.cat;
  const int nS = S.num_objects();
  A.act.assign(nS, std::vector<int>(C.num_objects()));
  for (int s = 0; s < nS; ++s) {
    TwoFunctor L{R.cat, R.cat, {}, {}, {}};
    for (int o = 0; o < C.num_objects(); ++o) {
      A.act[s][o] = R.find_obj(R.obj[o][0], M.act[s][R.obj[o][1]]);
      L.on0.push_back(A.act[s][o]);
    }
    // (t,α,φ) ↦ (t, α, sφ∘β_{t,s}x)
    auto tw = [&](int f) {
      const int x = R.obj[R.one[f][0]][1], t = R.one[f][2];
      return M.right[x].on1[P.beta[t][s]];
    };
    for (int f = 0; f < C.num_one_cells(); ++f) {
      const auto& c = R.one[f];
      const int g = R.find_one(L.on0[c[0]], c[2], c[3], X.compose(M.left[s].on1[c[4]], tw(f)));
      if (g < 0) fail("xi", "image of " + C.one(f).id + " under ξ(" + S.object(s) + ",−) is not a 1-cell");
      L.on1.push_back(g);
    }
    for (int k = 0; k < C.num_two_cells(); ++k) {
      const auto& t = R.two[k];
      int out = -1;
      for (auto& r : R.reps[k]) {
        const int v = class_of(R, L.on1[t[0]], L.on1[t[1]], r[0], r[1], X.whisker_r(M.left[s].on2[r[2]], tw(t[0])), "ξ image");
        if (out >= 0 && v != out) fail("sinv-quotient", "ξ depends on the representative");
        out = v;
      }
      L.on2.push_back(out);
    }
    A.left.push_back(L);
  }
  const int e = P.unit, ie = S.id1(e);
  for (int o = 0; o < C.num_objects(); ++o) {
    const int a = R.obj[o][0], x = R.obj[o][1];
    TwoFunctor Rt{P.S, R.cat, {}, {}, {}};
    for (int s = 0; s < nS; ++s) Rt.on0.push_back(A.act[s][o]);
    for (int f = 0; f < S.num_one_cells(); ++f) {
      const int g = R.find_one(A.act[S.one(f).src][o], e, S.id1(a), M.right[x].on1[f]);
      if (g < 0) fail("xi", "image of " + S.one(f).id + " under ξ(−," + C.object(o) + ")");
      Rt.on1.push_back(g);
    }
    for (int ga = 0; ga < S.num_two_cells(); ++ga)
      Rt.on2.push_back(class_of(R, Rt.on1[S.two(ga).src], Rt.on1[S.two(ga).tgt], ie, S.id2(S.id1(a)), M.right[x].on2[ga], "ξ image of a 2-cell of S"));
    A.right.push_back(Rt);
  }
  for (int f = 0; f < S.num_one_cells(); ++f) {
    if (S.is_id1(f)) continue;
    const int s = S.one(f).src, s1 = S.one(f).tgt;
    for (int g = 0; g < C.num_one_cells(); ++g) {
      if (C.is_id1(g)) continue;
      const auto& c = R.one[g];
      const int x = R.obj[c[0]][1], t = c[2];
      const int src = C.compose(A.right[c[1]].on1[f], A.left[s].on1[g]);
      const int tgt = C.compose(A.left[s1].on1[g], A.right[c[0]].on1[f]);
      const int F = X.whisker_r(M.Sigma(f, c[4]), M.right[x].on1[P.beta[t][s]]);
      A.sigma[pair_key(f, g)] = class_of(R, src, tgt, S.id1(t), S.id2(c[3]), F, "ξ interchanger");
    }
  }
  return A;
}

TwoFunctor s_inverse(const SInv& R, int s) {
  const PGM& P = *R.S;
  const TwoCategory &S = *P.S, &C = *R.cat;
  TwoFunctor G{R.cat, R.cat, {}, {}, {}};
  for (int o = 0; o < C.num_objects(); ++o) G.on0.push_back(R.find_obj(P.sum[s][R.obj[o][0]], R.obj[o][1]));
  auto tw = [&](int f) { return P.rt1(P.beta[R.one[f][2]][s], R.obj[R.one[f][0]][0]); };
  for (int f = 0; f < C.num_one_cells(); ++f) {
    const auto& c = R.one[f];
    const int g = R.find_one(G.on0[c[0]], c[2], S.compose(P.lt1(s, c[3]), tw(f)), c[4]);
    if (g < 0) fail("s-inverse", "image of " + C.one(f).id);
    G.on1.push_back(g);
  }
  for (int k = 0; k < C.num_two_cells(); ++k) {
    const auto& t = R.two[k];
    int out = -1;
    for (auto& r : R.reps[k]) {
      const int v = class_of(R, G.on1[t[0]], G.on1[t[1]], r[0], S.whisker_r(P.lt2(s, r[1]), tw(t[0])), r[2], "s⁻¹ image");
      if (out >= 0 && v != out) fail("sinv-quotient", "s⁻¹ depends on the representative");
      out = v;
    }
    G.on2.push_back(out);
  }
  return G;
}

Transformation T_transformation(const SInv& R, const PGMAction& xi, int s) {
  const PGM& P = *R.S;
  const TwoCategory &S = *P.S, &X = *R.act.X, &C = *R.cat;
  Transformation T;
  T.orientation = Orientation::lax;
  T.flavor = Flavor::pseudo;
  T.source = NormalPseudofunctor(identity_functor(R.cat));
  const TwoFunctor G = compose(xi.left[s], s_inverse(R, s));
  T.target = NormalPseudofunctor(G);
  for (int o = 0; o < C.num_objects(); ++o) {
    const int a = R.obj[o][0], x = R.obj[o][1];
    T.at0.push_back(R.find_one(o, s, S.id1(P.sum[s][a]), X.id1(R.act.act[s][x])));
  }
  for (int f = 0; f < C.num_one_cells(); ++f) {
    const auto& c = R.one[f];
    const int src = C.compose(G.on1[f], T.at0[c[0]]), tgt = C.compose(T.at0[c[1]], f);
    const auto& u = R.one[src];
    T.at1.push_back(class_of(R, src, tgt, P.beta[c[2]][s], S.id2(u[3]), X.id2(u[4]), "T constraint"));
  }
  return T;
}

bool xi_commutes_with_inverse(const SInv& R, const PGMAction& xi) {
  for (int s = 0; s < R.S->S->num_objects(); ++s) {
    const TwoFunctor inv = s_inverse(R, s);
    if (!same_maps(compose(xi.left[s], inv), compose(inv, xi.left[s]))) return false;
  }
  return true;
}

PGM pgm_on_sinvs(const SInv& R) {
  const PGM& P = *R.S;
  const PGMAction& M = R.act;
  if (M.X.get() != P.S.get()) throw InputError("the PGM structure needs X = S with the self action");
  const TwoCategory &S = *P.S, &C = *R.cat;
  const int n = C.num_objects();
  PGM Q;
  Q.S = R.cat;
  Q.name = "S^-1 S over " + P.name;
  Q.unit = R.find_obj(P.unit, P.unit);
  Q.sum.assign(n, std::vector<int>(n));
  for (int o = 0; o < n; ++o)
    for (int o1 = 0; o1 < n; ++o1)
      Q.sum[o][o1] = R.find_obj(P.sum[R.obj[o][0]][R.obj[o1][0]], P.sum[R.obj[o][1]][R.obj[o1][1]]);
  for (int o1 = 0; o1 < n; ++o1) {
    const int a1 = R.obj[o1][0], x1 = R.obj[o1][1];
    // left translation (a',x')⊕−
    TwoFunctor L{R.cat, R.cat, {}, {}, {}};
    for (int o = 0; o < n; ++o) L.on0.push_back(Q.sum[o1][o]);
    auto twa = [&](int f) { return P.rt1(P.beta[R.one[f][2]][a1], R.obj[R.one[f][0]][0]); };
    auto twx = [&](int f) { return P.rt1(P.beta[R.one[f][2]][x1], R.obj[R.one[f][0]][1]); };
    for (int f = 0; f < C.num_one_cells(); ++f) {
      const auto& c = R.one[f];
      const int g = R.find_one(L.on0[c[0]], c[2], S.compose(P.lt1(a1, c[3]), twa(f)), S.compose(P.lt1(x1, c[4]), twx(f)));
      if (g < 0) fail("sinvs-translation", "left translation of " + C.one(f).id);
      L.on1.push_back(g);
    }
    for (int k = 0; k < C.num_two_cells(); ++k) {
      const auto& t = R.two[k];
      int out = -1;
      for (auto& r : R.reps[k]) {
        const int v = class_of(R, L.on1[t[0]], L.on1[t[1]], r[0], S.whisker_r(P.lt2(a1, r[1]), twa(t[0])),
                               S.whisker_r(P.lt2(x1, r[2]), twx(t[0])), "left translation of a 2-cell");
        if (out >= 0 && v != out) fail("sinv-quotient", "translation depends on the representative");
        out = v;
      }
      L.on2.push_back(out);
    }
    // right translation −⊕(a',x')
    TwoFunctor Rt{R.cat, R.cat, {}, {}, {}};
    for (int o = 0; o < n; ++o) Rt.on0.push_back(Q.sum[o][o1]);
    for (int f = 0; f < C.num_one_cells(); ++f) {
      const auto& c = R.one[f];
      const int g = R.find_one(Rt.on0[c[0]], c[2], P.rt1(c[3], a1), P.rt1(c[4], x1));
      if (g < 0) fail("sinvs-translation", "right translation of " + C.one(f).id);
      Rt.on1.push_back(g);
    }
    for (int k = 0; k < C.num_two_cells(); ++k) {
      const auto& t = R.two[k];
      int out = -1;
      for (auto& r : R.reps[k]) {
        const int v = class_of(R, Rt.on1[t[0]], Rt.on1[t[1]], r[0], P.rt2(r[1], a1), P.rt2(r[2], x1), "right translation of a 2-cell");
        if (out >= 0 && v != out) fail("sinv-quotient", "translation depends on the representative");
        out = v;
      }
      Rt.on2.push_back(out);
    }
    Q.left.push_back(L);
    Q.right.push_back(Rt);
  }
  Q.beta.assign(n, std::vector<int>(n));
  for (int o = 0; o < n; ++o)
    for (int o1 = 0; o1 < n; ++o1) {
      const int a = R.obj[o][0], x = R.obj[o][1], a1 = R.obj[o1][0], x1 = R.obj[o1][1];
      const int g = R.find_one(Q.sum[o][o1], P.unit, P.beta[a][a1], P.beta[x][x1]);
      if (g < 0) fail("sinvs-beta", "symmetry at " + C.object(o) + "," + C.object(o1));
      Q.beta[o][o1] = g;
    }
  for (int f = 0; f < C.num_one_cells(); ++f) {
    if (C.is_id1(f)) continue;
    for (int g = 0; g < C.num_one_cells(); ++g) {
      if (C.is_id1(g)) continue;
      const auto &F = R.one[f], &G = R.one[g];
      const int a = R.obj[F[0]][0], x = R.obj[F[0]][1], a1 = R.obj[G[0]][0], x1 = R.obj[G[0]][1];
      const int s = F[2], s1 = G[2];
      const int src = C.compose(Q.right[G[1]].on1[f], Q.left[F[0]].on1[g]);
      const int tgt = C.compose(Q.left[F[1]].on1[g], Q.right[G[0]].on1[f]);
      const int A = S.whisker_r(P.Sigma(F[3], G[3]), P.lt1(s, P.rt1(P.beta[s1][a], a1)));
      const int Fx = S.whisker_r(P.Sigma(F[4], G[4]), P.lt1(s, P.rt1(P.beta[s1][x], x1)));
      Q.sigma[pair_key(f, g)] = class_of(R, src, tgt, P.beta[s][s1], A, Fx, "interchanger of S⁻¹S");
    }
  }
  return Q;
}

namespace {

IntMatrix induced_on_homology(const Nerve& A, const Nerve& B, const ChainComplex& CA, const ChainComplex& CB,
                              const Subquotient& HA, const Subquotient& HB, const TwoFunctor& F, int q) {
  const auto map = nerve_map(A, B, NormalPseudofunctor(F));
  return induced_map(HA, HB, chain_map(CA, CB, map[q], q));
}

// Entries of a map into canonical generators reduced modulo their orders.
IntMatrix reduce_rows(IntMatrix M, const std::vector<Int>& orders) {
  for (int r = 0; r < M.rows(); ++r)
    if (orders[r] != 0)
      for (int c = 0; c < M.cols(); ++c) {
        Int v = M(r, c) % orders[r];
        if (v < 0) v += orders[r];
        M(r, c) = v;
      }
  return M;
}

}  // namespace

Verdict translations_invert_homology(const PGM& Q, int N) {
  const Nerve Nv = nerve(Q.S, N);
  const ChainComplex Ch = chain_complex(Nv.sset);
  const TwoCategory& C = *Q.S;
  std::string w;
  for (int n = 0; n + 1 <= N; ++n) {
    const Subquotient H = homology_with_generators(Ch, n);
    for (int o = 0; o < C.num_objects(); ++o) {
      const IntMatrix M = induced_on_homology(Nv, Nv, Ch, Ch, H, H, Q.left[o], n);
      if (!induced_is_iso(H, H, M)) return {false, "translation by " + C.object(o) + " on H_" + std::to_string(n)};
      // candidate inverse: the object with swapped coordinates, if present
      for (int o1 = 0; o1 < C.num_objects(); ++o1) {
        const IntMatrix K = induced_on_homology(Nv, Nv, Ch, Ch, H, H, compose(Q.left[o1], Q.left[o]), n);
        if (!induced_is_iso(H, H, K)) return {false, "composite translation " + C.object(o1) + "⊕" + C.object(o) + " on H_" + std::to_string(n)};
      }
    }
  }
  return {true, "all translations induce isomorphisms in degrees ≤ " + std::to_string(N - 1)};
}

void check_rho_hypotheses(const PGM& S, const PGMAction& act) {
  if (auto v = has_faithful_translations(S); !v) fail("hypothesis", "S has no faithful translations: " + v.witness);
  if (auto v = is_two_groupoid(*S.S); !v) fail("hypothesis", "S is not a 2-groupoid: " + v.witness);
  const TwoCategory& X = *act.X;
  for (int a = 0; a < X.num_two_cells(); ++a)
    if (!X.invertible2(a)) fail("hypothesis", "2-cell " + describe_two(X, a) + " of X is not invertible");
}

RhoData rho_projection(std::shared_ptr<const PGM> S, const PGMAction& act) {
  RhoData D{s_inv_x(S, act), s_inv_point(S), {}};
  const SInv &X = D.X, &pt = D.pt;
  const TwoCategory& Sc = *S->S;
  const int star = pt.act.X->id1(0), star2 = pt.act.X->id2(star);
  TwoFunctor& r = D.rho;
  r.source = X.cat;
  r.target = pt.cat;
  for (auto& o : X.obj) r.on0.push_back(pt.find_obj(o[0], 0));
  for (auto& c : X.one) r.on1.push_back(pt.find_one(r.on0[c[0]], c[2], c[3], star));
  for (int k = 0; k < X.cat->num_two_cells(); ++k) {
    const auto& t = X.two[k];
    int out = -1;
    for (auto& rp : X.reps[k]) {
      const int v = class_of(pt, r.on1[t[0]], r.on1[t[1]], rp[0], rp[1], star2, "ρ image");
      if (out >= 0 && v != out) fail("sinv-quotient", "ρ depends on the representative");
      out = v;
    }
    r.on2.push_back(out);
  }
  (void)Sc;
  validate(r);
  return D;
}

RhoReport rho_opfib_check(std::shared_ptr<const PGM> S, const PGMAction& act) {
  check_rho_hypotheses(*S, act);
  RhoReport R{rho_projection(S, act), {}, 0, {}};
  R.cert = check_opfibration(R.data.rho);
  const SInv& X = R.data.X;
  const TwoCategory& Xc = *act.X;
  for (int f = 0; f < X.cat->num_one_cells(); ++f) {
    if (!Xc.is_id1(X.one[f][4])) continue;
    ++R.preferred_checked;
    auto c = is_opcartesian_1cell(R.data.rho, f);
    if (!c && R.preferred_failure.empty()) R.preferred_failure = X.cat->one(f).id + ": " + c.failure->clause;
  }
  return R;
}

std::string fiber_iso_check(const RhoData& R, int a) {
  const SInv& X = R.X;
  const TwoCategory &Xc = *X.act.X, &Sc = *X.S->S;
  const Fiber fb = strict_fiber(R.rho, R.pt.find_obj(a, 0));
  TwoFunctor m;
  m.source = fb.cat;
  m.target = X.act.X;
  for (int o : fb.incl.on0) {
    if (X.obj[o][0] != a) return "object outside the fiber";
    m.on0.push_back(X.obj[o][1]);
  }
  const int e = X.S->unit;
  for (int f : fb.incl.on1) {
    const auto& c = X.one[f];
    if (c[2] != e || c[3] != Sc.id1(a)) return "fiber 1-cell " + X.cat->one(f).id + " is not of the form (e,1,φ)";
    m.on1.push_back(c[4]);
  }
  for (int k : fb.incl.on2) {
    const auto& t = X.two[k];
    if (t[2] != Sc.id1(e) || t[3] != Sc.id2(Sc.id1(a))) return "fiber 2-cell " + X.cat->two(k).id + " is not of the form <1,1,F>";
    m.on2.push_back(t[4]);
  }
  try {
    validate(m);
  } catch (const AxiomError& err) {
    return std::string("fiber map is not a 2-functor: ") + err.what();
  }
  if (!is_bijective(m)) return "fiber map is not bijective";
  for (int s = 0; s < Sc.num_objects(); ++s)
    for (int ix = 0; ix < fb.cat->num_objects(); ++ix) {
      const int x = m.on0[ix];
      if (X.act.act[s][x] < 0 || X.find_obj(a, X.act.act[s][x]) < 0) return "action not compatible";
    }
  (void)Xc;
  return {};
}

IsoCriterion is_sinv_iso(const SInv& X, int cell) {
  const TwoCategory &S = *X.S->S, &Xc = *X.act.X;
  const auto& t = X.two[cell];
  IsoCriterion r;
  r.criterion = equivalence_inverse(S, t[2]).has_value() && S.invertible2(t[3]) && Xc.invertible2(t[4]);
  r.brute = X.cat->invertible2(cell);
  return r;
}

std::optional<int> lift_witness_check(const RhoData& R, int h, int u, int tb, int pA, int v, int l1, int l2) {
  const SInv &X = R.X, &pt = R.pt;
  const PGM& P = *X.S;
  const TwoCategory& S = *P.S;
  const auto &H = X.one[h], &U = X.one[u], &V = X.one[v];
  const auto& TB = pt.one[tb];
  const auto &cPA = pt.two[pA], &c1 = pt.two[l1], &c2 = X.two[l2];
  const int s = H[2], al = H[3], a = X.obj[H[0]][0];
  const int t = TB[2], ga = U[3], de = V[3];
  (void)de;
  const int p = cPA[2], A = cPA[3], p1 = c1[2], A1 = c1[3], p2 = c2[2], A2 = c2[3];
  // shape of the datum
  if (pt.one[cPA[0]][2] != P.sum[t][s] || pt.one[cPA[1]][2] != U[2] || pt.one[c1[0]][2] != t || pt.one[c1[1]][2] != V[2]) return std::nullopt;
  const int target = S.compose(p2, P.rt1(p1, s));
  const int rhs = S.vcompose(S.whisker_r(A2, P.rt1(P.rt1(p1, s), a)),
                             S.vcompose(S.whisker_l(V[3], P.Sigma(p1, al)), S.whisker_r(A1, P.lt1(t, al))));
  if (rhs < 0) return std::nullopt;
  for (int th : S.hom2(p, target)) {
    if (!S.invertible2(th)) continue;
    if (S.vcompose(S.whisker_l(ga, P.rt2(th, a)), A) == rhs) return th;
  }
  return std::nullopt;
}

long check_preferred_lifts(const RhoData& R) {
  const SInv &X = R.X, &pt = R.pt;
  const PGM& P = *X.S;
  const TwoCategory &S = *P.S, &Xc = *X.act.X, &C = *X.cat, &D = *pt.cat;
  long n = 0;
  for (int h = 0; h < C.num_one_cells(); ++h) {
    const auto& H = X.one[h];
    if (!Xc.is_id1(H[4])) continue;
    const int a = X.obj[H[0]][0], x = X.obj[H[0]][1], d = X.obj[H[1]][0];
    for (int tb : D.out_one(pt.find_obj(d, 0))) {
      const auto& TB = pt.one[tb];
      const int t = TB[2];
      const int comp = D.compose(tb, R.rho.on1[h]);
      for (int u : C.out_one(H[0])) {
        for (int pA : D.hom2(comp, R.rho.on1[u])) {
          if (!D.invertible2(pA)) continue;
          const auto& U = X.one[u];
          const int p = pt.two[pA][2];
          // v = (t, β, χ∘px)
          const int lam = Xc.compose(U[4], X.act.right[x].on1[p]);
          const int v = X.find_one(H[1], t, TB[3], lam);
          if (v < 0) fail("preferred-lift", "no 1-cell (t,β,χ∘px) for " + C.one(h).id);
          if (R.rho.on1[v] != tb) fail("preferred-lift", "ρ(v) differs from (t,β)");
          const int l1 = D.id2(tb);
          const int vh = C.compose(v, h);
          const int l2 = X.cls(vh, u, p, pt.two[pA][3], Xc.id2(X.one[vh][4]));
          if (l2 < 0) fail("preferred-lift", "<p,A,1> is not a 2-cell for " + C.one(h).id);
          if (R.rho.on2[l2] != pA) fail("preferred-lift", "ρ<p,A,1> differs from <p,A>");
          auto th = lift_witness_check(R, h, u, tb, pA, v, l1, l2);
          if (!th) fail("preferred-lift", "no witness for the preferred lift of " + C.one(h).id);
          if (!S.is_id2(*th)) fail("preferred-lift", "witness is not the identity for " + C.one(h).id);
          ++n;
          (void)a;
        }
      }
    }
  }
  return n;
}

GCReport group_completion_check(std::shared_ptr<const PGM> Sp, const PGMAction& act, int q, int N) {
  require_trusted(q, N);
  check_rho_hypotheses(*Sp, act);
  const PGM& P = *Sp;
  const TwoCategory& S = *P.S;
  GCReport rep;
  rep.q = q;
  rep.N = N;
  rep.pi0 = pi0_monoid(P);
  const Components comps = pi0(S);

  const Nerve NX = nerve(act.X, N);
  const ChainComplex CX = chain_complex(NX.sset);
  const Subquotient HX = homology_with_generators(CX, q);
  rep.HX = HX.group;
  const int g = int(HX.orders.size());
  std::vector<IntMatrix> acts(rep.pi0.size());
  rep.representative_independent = true;
  for (int s = 0; s < S.num_objects(); ++s) {
    const IntMatrix M = reduce_rows(induced_on_homology(NX, NX, CX, CX, HX, HX, act.left[s], q), HX.orders);
    const int c = comps.comp[s];
    if (acts[c].rows() == 0 && acts[c].cols() == 0 && s == comps.rep[c])
      acts[c] = M;
    else if (s != comps.rep[c] && acts[c] != M)
      rep.representative_independent = false;
  }
  for (int c = 0; c < rep.pi0.size(); ++c) {
    // component representatives are least objects, so they come first
    if (acts[c].rows() != g) acts[c] = reduce_rows(induced_on_homology(NX, NX, CX, CX, HX, HX, act.left[comps.rep[c]], q), HX.orders);
  }
  const Localization L = localize(order_relations(HX), g, acts, rep.pi0);
  rep.localized = L.group;

  const SInv X = s_inv_x(Sp, act);
  const Nerve NS = nerve(X.cat, N);
  const ChainComplex CS = chain_complex(NS.sset);
  const Subquotient HS = homology_with_generators(CS, q);
  rep.HSinv = HS.group;
  const IntMatrix Mi = induced_on_homology(NX, NS, CX, CS, HX, HS, X.i, q);
  const Subquotient from = subquotient(IntMatrix::identity(g), L.kernel, g);
  const Subquotient to = subquotient(IntMatrix::identity(int(HS.orders.size())), order_relations(HS), int(HS.orders.size()));
  try {
    rep.iso = induced_is_iso(from, to, induced_map(from, to, Mi));
  } catch (const std::exception&) {
    rep.iso = false;  // i does not factor through the localization
  }
  return rep;
}

}  // namespace twocat
