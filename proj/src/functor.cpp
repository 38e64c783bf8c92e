#include "twocat/functor.hpp"

#include <algorithm>

namespace twocat {

namespace {

[[noreturn]] void fail(const std::string& axiom, const std::string& detail) {
  throw AxiomError(axiom, detail);
}

void check_maps(const TwoFunctor& F) {
  const TwoCategory &C = *F.source, &D = *F.target;
  if (int(F.on0.size()) != C.num_objects() || int(F.on1.size()) != C.num_one_cells() ||
      int(F.on2.size()) != C.num_two_cells())
    fail("functor-shape", "cell maps do not cover the source");
  for (int x = 0; x < C.num_objects(); ++x)
    if (F.on0[x] < 0 || F.on0[x] >= D.num_objects()) fail("functor-shape", "object " + C.object(x) + " unmapped");
  for (int f = 0; f < C.num_one_cells(); ++f) {
    const int g = F.on1[f];
    if (g < 0 || g >= D.num_one_cells()) fail("functor-shape", "1-cell " + C.one(f).id + " unmapped");
    if (D.one(g).src != F.on0[C.one(f).src] || D.one(g).tgt != F.on0[C.one(f).tgt])
      fail("functor-typing", "1-cell " + C.one(f).id + " ↦ " + D.one(g).id);
  }
  for (int a = 0; a < C.num_two_cells(); ++a) {
    const int b = F.on2[a];
    if (b < 0 || b >= D.num_two_cells()) fail("functor-shape", "2-cell " + C.two(a).id + " unmapped");
    if (D.two(b).src != F.on1[C.two(a).src] || D.two(b).tgt != F.on1[C.two(a).tgt])
      fail("functor-typing", "2-cell " + C.two(a).id + " ↦ " + D.two(b).id);
  }
  for (int x = 0; x < C.num_objects(); ++x)
    if (F.on1[C.id1(x)] != D.id1(F.on0[x])) fail("functor-identity", "identity of " + C.object(x));
  for (int f = 0; f < C.num_one_cells(); ++f)
    if (F.on2[C.id2(f)] != D.id2(F.on1[f])) fail("functor-identity", "identity of " + C.one(f).id);
  for (int a = 0; a < C.num_two_cells(); ++a)
    for (int b : C.two_from(C.two(a).tgt))
      if (F.on2[C.vcompose(b, a)] != D.vcompose(F.on2[b], F.on2[a]))
        fail("functor-vcomp", C.two(b).id + " · " + C.two(a).id);
}

}  // namespace

int NormalPseudofunctor::F2(int g, int f) const {
  auto it = constraints.find(pair_key(g, f));
  if (it != constraints.end()) return it->second;
  const TwoCategory& D = tgt();
  const int gf = src().compose(g, f);
  if (gf < 0) return -1;
  if (D.compose(maps.on1[g], maps.on1[f]) != maps.on1[gf]) return -1;
  return D.id2(maps.on1[gf]);
}

TwoFunctor identity_functor(TwoCatPtr c) {
  TwoFunctor F;
  F.source = c;
  F.target = c;
  F.on0.resize(c->num_objects());
  F.on1.resize(c->num_one_cells());
  F.on2.resize(c->num_two_cells());
  for (int i = 0; i < c->num_objects(); ++i) F.on0[i] = i;
  for (int i = 0; i < c->num_one_cells(); ++i) F.on1[i] = i;
  for (int i = 0; i < c->num_two_cells(); ++i) F.on2[i] = i;
  return F;
}

TwoFunctor compose(const TwoFunctor& g, const TwoFunctor& f) {
  TwoFunctor h;
  h.source = f.source;
  h.target = g.target;
  for (int v : f.on0) h.on0.push_back(g.on0[v]);
  for (int v : f.on1) h.on1.push_back(g.on1[v]);
  for (int v : f.on2) h.on2.push_back(g.on2[v]);
  return h;
}

NormalPseudofunctor compose(const NormalPseudofunctor& G, const NormalPseudofunctor& F) {
  NormalPseudofunctor H(compose(G.maps, F.maps));
  const TwoCategory& C = F.src();
  const TwoCategory& E = G.tgt();
  for (int f = 0; f < C.num_one_cells(); ++f)
    for (int g : C.out_one(C.one(f).tgt)) {
      // G(F2(g,f)) · G2(Fg,Ff)
      const int c = E.vcompose(G.maps.on2[F.F2(g, f)], G.F2(F.maps.on1[g], F.maps.on1[f]));
      if (!E.is_id2(c)) H.constraints[pair_key(g, f)] = c;
    }
  return H;
}

void validate(const TwoFunctor& F) {
  check_maps(F);
  const TwoCategory &C = *F.source, &D = *F.target;
  for (int f = 0; f < C.num_one_cells(); ++f)
    for (int g : C.out_one(C.one(f).tgt))
      if (F.on1[C.compose(g, f)] != D.compose(F.on1[g], F.on1[f]))
        fail("functor-comp1", C.one(g).id + " ∘ " + C.one(f).id);
  for (int a = 0; a < C.num_two_cells(); ++a) {
    for (int k : C.out_one(C.tgt0(a)))
      if (F.on2[C.whisker_l(k, a)] != D.whisker_l(F.on1[k], F.on2[a]))
        fail("functor-whisk_l", C.one(k).id + " ∗ " + C.two(a).id);
    for (int h : C.in_one(C.src0(a)))
      if (F.on2[C.whisker_r(a, h)] != D.whisker_r(F.on2[a], F.on1[h]))
        fail("functor-whisk_r", C.two(a).id + " ∗ " + C.one(h).id);
  }
}

void validate(const NormalPseudofunctor& P) {
  const TwoFunctor& F = P.maps;
  check_maps(F);
  const TwoCategory &C = *F.source, &D = *F.target;
  for (int f = 0; f < C.num_one_cells(); ++f)
    for (int g : C.out_one(C.one(f).tgt)) {
      const int c = P.F2(g, f);
      const std::string nm = "(" + C.one(g).id + ", " + C.one(f).id + ")";
      if (c < 0) fail("pseudofunctor-constraint", "missing constraint at " + nm);
      if (D.two(c).src != D.compose(F.on1[g], F.on1[f]) || D.two(c).tgt != F.on1[C.compose(g, f)])
        fail("pseudofunctor-constraint", "mistyped constraint at " + nm);
      if (!D.invertible2(c)) fail("pseudofunctor-constraint", "non-invertible constraint at " + nm);
      if ((C.is_id1(f) || C.is_id1(g)) && !D.is_id2(c))
        fail("pseudofunctor-unit", "constraint at " + nm + " is not an identity");
    }
  // naturality in each variable
  for (int a = 0; a < C.num_two_cells(); ++a) {
    const int f = C.two(a).src, f2 = C.two(a).tgt;
    for (int g : C.out_one(C.tgt0(a))) {
      const int lhs = D.vcompose(F.on2[C.whisker_l(g, a)], P.F2(g, f));
      const int rhs = D.vcompose(P.F2(g, f2), D.whisker_l(F.on1[g], F.on2[a]));
      if (lhs != rhs) fail("pseudofunctor-naturality", C.one(g).id + " ∗ " + C.two(a).id);
    }
    for (int h : C.in_one(C.src0(a))) {
      const int lhs = D.vcompose(F.on2[C.whisker_r(a, h)], P.F2(f, h));
      const int rhs = D.vcompose(P.F2(f2, h), D.whisker_r(F.on2[a], F.on1[h]));
      if (lhs != rhs) fail("pseudofunctor-naturality", C.two(a).id + " ∗ " + C.one(h).id);
    }
  }
  for (int f = 0; f < C.num_one_cells(); ++f)
    for (int g : C.out_one(C.one(f).tgt)) {
      const int gf = C.compose(g, f);
      for (int h : C.out_one(C.one(g).tgt)) {
        const int hg = C.compose(h, g);
        const int lhs = D.vcompose(P.F2(h, gf), D.whisker_l(F.on1[h], P.F2(g, f)));
        const int rhs = D.vcompose(P.F2(hg, f), D.whisker_r(P.F2(h, g), F.on1[f]));
        if (lhs != rhs)
          fail("pseudofunctor-associativity", C.one(h).id + ", " + C.one(g).id + ", " + C.one(f).id);
      }
    }
}

bool same_maps(const TwoFunctor& a, const TwoFunctor& b) {
  return a.on0 == b.on0 && a.on1 == b.on1 && a.on2 == b.on2;
}

bool is_bijective(const TwoFunctor& f) {
  auto bij = [](const std::vector<int>& m, int n) {
    if (int(m.size()) != n) return false;
    std::vector<char> seen(n, 0);
    for (int v : m) {
      if (v < 0 || v >= n || seen[v]) return false;
      seen[v] = 1;
    }
    return true;
  };
  return bij(f.on0, f.target->num_objects()) && bij(f.on1, f.target->num_one_cells()) &&
         bij(f.on2, f.target->num_two_cells());
}

// ------------------------------------------------------ isomorphism search

namespace {

struct IsoSearch {
  const TwoCategory &A, &B;
  std::vector<int> m0, m1, m2;
  std::vector<char> u0, u1, u2;

  IsoSearch(const TwoCategory& a, const TwoCategory& b) : A(a), B(b) {
    m0.assign(A.num_objects(), -1);
    m1.assign(A.num_one_cells(), -1);
    m2.assign(A.num_two_cells(), -1);
    u0.assign(B.num_objects(), 0);
    u1.assign(B.num_one_cells(), 0);
    u2.assign(B.num_two_cells(), 0);
  }

  bool ok0(int x) const {
    for (int y = 0; y < A.num_objects(); ++y) {
      if (m0[y] < 0) continue;
      if (A.hom(x, y).size() != B.hom(m0[x], m0[y]).size()) return false;
      if (A.hom(y, x).size() != B.hom(m0[y], m0[x]).size()) return false;
    }
    return true;
  }

  bool ok1(int f) const {
    const int g = m1[f];
    if (B.one(g).src != m0[A.one(f).src] || B.one(g).tgt != m0[A.one(f).tgt]) return false;
    if (A.is_id1(f) != B.is_id1(g)) return false;
    auto agree = [&](int x, int y) {  // x∘y in A
      const int r = A.compose(x, y);
      if (r < 0 || m1[x] < 0 || m1[y] < 0 || m1[r] < 0) return true;
      return B.compose(m1[x], m1[y]) == m1[r];
    };
    for (int h : A.out_one(A.one(f).tgt))
      if (!agree(h, f)) return false;
    for (int h : A.in_one(A.one(f).src))
      if (!agree(f, h)) return false;
    for (int h : A.hom(A.one(f).src, A.one(f).tgt)) {
      if (m1[h] < 0) continue;
      if (A.hom2(f, h).size() != B.hom2(g, m1[h]).size()) return false;
      if (A.hom2(h, f).size() != B.hom2(m1[h], g).size()) return false;
    }
    return true;
  }

  bool ok2(int a) const {
    const int b = m2[a];
    if (B.two(b).src != m1[A.two(a).src] || B.two(b).tgt != m1[A.two(a).tgt]) return false;
    if (A.is_id2(a) != B.is_id2(b)) return false;
    auto vagree = [&](int x, int y) {
      const int r = A.vcompose(x, y);
      if (r < 0 || m2[x] < 0 || m2[y] < 0 || m2[r] < 0) return true;
      return B.vcompose(m2[x], m2[y]) == m2[r];
    };
    for (int c : A.two_from(A.two(a).tgt))
      if (!vagree(c, a)) return false;
    for (int c : A.two_into(A.two(a).src))
      if (!vagree(a, c)) return false;
    for (int k : A.out_one(A.tgt0(a))) {
      const int r = A.whisker_l(k, a);
      if (m2[r] >= 0 && B.whisker_l(m1[k], b) != m2[r]) return false;
    }
    for (int h : A.in_one(A.src0(a))) {
      const int r = A.whisker_r(a, h);
      if (m2[r] >= 0 && B.whisker_r(b, m1[h]) != m2[r]) return false;
    }
    // a may itself be a whiskered cell whose factor is already mapped
    return true;
  }

  bool full_check() const {
    TwoFunctor F;
    F.source = std::shared_ptr<const TwoCategory>(&A, [](const TwoCategory*) {});
    F.target = std::shared_ptr<const TwoCategory>(&B, [](const TwoCategory*) {});
    F.on0 = m0;
    F.on1 = m1;
    F.on2 = m2;
    try {
      validate(F);
    } catch (const AxiomError&) {
      return false;
    }
    return true;
  }

  bool go(int step) {
    const int n0 = A.num_objects(), n1 = A.num_one_cells(), n2 = A.num_two_cells();
    if (step < n0) {
      for (int y = 0; y < B.num_objects(); ++y) {
        if (u0[y]) continue;
        m0[step] = y;
        u0[y] = 1;
        if (ok0(step) && go(step + 1)) return true;
        u0[y] = 0;
        m0[step] = -1;
      }
      return false;
    }
    if (step < n0 + n1) {
      const int f = step - n0;
      for (int g : B.hom(m0[A.one(f).src], m0[A.one(f).tgt])) {
        if (u1[g]) continue;
        m1[f] = g;
        u1[g] = 1;
        if (ok1(f) && go(step + 1)) return true;
        u1[g] = 0;
        m1[f] = -1;
      }
      return false;
    }
    if (step < n0 + n1 + n2) {
      const int a = step - n0 - n1;
      for (int b : B.hom2(m1[A.two(a).src], m1[A.two(a).tgt])) {
        if (u2[b]) continue;
        m2[a] = b;
        u2[b] = 1;
        if (ok2(a) && go(step + 1)) return true;
        u2[b] = 0;
        m2[a] = -1;
      }
      return false;
    }
    return full_check();
  }
};

}  // namespace

std::optional<TwoFunctor> find_isomorphism(TwoCatPtr a, TwoCatPtr b) {
  if (a->num_objects() != b->num_objects() || a->num_one_cells() != b->num_one_cells() ||
      a->num_two_cells() != b->num_two_cells())
    return std::nullopt;
  IsoSearch s(*a, *b);
  if (!s.go(0)) return std::nullopt;
  TwoFunctor F;
  F.source = a;
  F.target = b;
  F.on0 = s.m0;
  F.on1 = s.m1;
  F.on2 = s.m2;
  return F;
}

// ---------------------------------------------------------- transformations

void validate(const Transformation& T) {
  const NormalPseudofunctor &F = T.source, &G = T.target;
  const TwoCategory& C = F.src();
  const TwoCategory& D = F.tgt();
  if (F.maps.source.get() != G.maps.source.get() || F.maps.target.get() != G.maps.target.get())
    fail("transformation-shape", "source and target functors are not parallel");
  if (int(T.at0.size()) != C.num_objects() || int(T.at1.size()) != C.num_one_cells())
    fail("transformation-shape", "components do not cover the domain");
  const bool lax = T.orientation == Orientation::lax;
  auto Fo = [&](int x) { return F.maps.on0[x]; };
  auto Go = [&](int x) { return G.maps.on0[x]; };
  auto F1 = [&](int f) { return F.maps.on1[f]; };
  auto G1 = [&](int f) { return G.maps.on1[f]; };
  auto F2c = [&](int a) { return F.maps.on2[a]; };
  auto G2c = [&](int a) { return G.maps.on2[a]; };
  for (int x = 0; x < C.num_objects(); ++x) {
    const int ax = T.at0[x];
    if (ax < 0 || D.one(ax).src != Fo(x) || D.one(ax).tgt != Go(x))
      fail("transformation-typing", "component at " + C.object(x));
  }
  for (int f = 0; f < C.num_one_cells(); ++f) {
    const int x = C.one(f).src, y = C.one(f).tgt;
    const int gfa = D.compose(G1(f), T.at0[x]);
    const int afy = D.compose(T.at0[y], F1(f));
    const int s = lax ? gfa : afy, t = lax ? afy : gfa;
    const int c = T.at1[f];
    if (c < 0 || D.two(c).src != s || D.two(c).tgt != t)
      fail("transformation-typing", "2-cell component at " + C.one(f).id);
    if (C.is_id1(f) && !D.is_id2(c))
      fail("transformation-unit", "component at identity " + C.one(f).id + " is not an identity");
    if (T.flavor == Flavor::pseudo && !D.invertible2(c))
      fail("transformation-pseudo", "component at " + C.one(f).id + " is not invertible");
    if (T.flavor == Flavor::strict && !D.is_id2(c))
      fail("transformation-strict", "component at " + C.one(f).id + " is not an identity");
  }
  // naturality in 2-cells
  for (int th = 0; th < C.num_two_cells(); ++th) {
    const int f = C.two(th).src, f2 = C.two(th).tgt;
    const int x = C.src0(th), y = C.tgt0(th);
    int lhs, rhs;
    if (lax) {
      lhs = D.vcompose(D.whisker_l(T.at0[y], F2c(th)), T.at1[f]);
      rhs = D.vcompose(T.at1[f2], D.whisker_r(G2c(th), T.at0[x]));
    } else {
      lhs = D.vcompose(D.whisker_r(G2c(th), T.at0[x]), T.at1[f]);
      rhs = D.vcompose(T.at1[f2], D.whisker_l(T.at0[y], F2c(th)));
    }
    if (lhs != rhs) fail("transformation-naturality", "at 2-cell " + C.two(th).id);
  }
  // compatibility with composition
  for (int f = 0; f < C.num_one_cells(); ++f)
    for (int g : C.out_one(C.one(f).tgt)) {
      const int x = C.one(f).src, z = C.one(g).tgt;
      const int gf = C.compose(g, f);
      int lhs, rhs;
      if (lax) {
        lhs = D.vcompose(D.whisker_l(T.at0[z], F.F2(g, f)),
                         D.vcompose(D.whisker_r(T.at1[g], F1(f)), D.whisker_l(G1(g), T.at1[f])));
        rhs = D.vcompose(T.at1[gf], D.whisker_r(G.F2(g, f), T.at0[x]));
      } else {
        lhs = D.vcompose(D.whisker_r(G.F2(g, f), T.at0[x]),
                         D.vcompose(D.whisker_l(G1(g), T.at1[f]), D.whisker_r(T.at1[g], F1(f))));
        rhs = D.vcompose(T.at1[gf], D.whisker_l(T.at0[z], F.F2(g, f)));
      }
      if (lhs < 0 || lhs != rhs)
        fail("transformation-composition", "at " + C.one(g).id + " ∘ " + C.one(f).id);
    }
}

void validate(const Modification& M) {
  const Transformation &S = M.source, &T = M.target;
  if (S.orientation != T.orientation) fail("modification-shape", "mixed orientations");
  const TwoCategory& C = S.source.src();
  const TwoCategory& D = S.source.tgt();
  if (int(M.at.size()) != C.num_objects()) fail("modification-shape", "components do not cover the domain");
  for (int x = 0; x < C.num_objects(); ++x) {
    const int g = M.at[x];
    if (g < 0 || D.two(g).src != S.at0[x] || D.two(g).tgt != T.at0[x])
      fail("modification-typing", "component at " + C.object(x));
  }
  const bool lax = S.orientation == Orientation::lax;
  for (int f = 0; f < C.num_one_cells(); ++f) {
    const int x = C.one(f).src, y = C.one(f).tgt;
    const int Ff = S.source.maps.on1[f], Gf = S.target.maps.on1[f];
    int lhs, rhs;
    if (lax) {
      lhs = D.vcompose(D.whisker_r(M.at[y], Ff), S.at1[f]);
      rhs = D.vcompose(T.at1[f], D.whisker_l(Gf, M.at[x]));
    } else {
      lhs = D.vcompose(D.whisker_l(Gf, M.at[x]), S.at1[f]);
      rhs = D.vcompose(T.at1[f], D.whisker_r(M.at[y], Ff));
    }
    if (lhs != rhs) fail("modification-axiom", "at 1-cell " + C.one(f).id);
  }
}

}  // namespace twocat
