#include "twocat/pgm.hpp"

#include <numeric>

#include "twocat/fixtures.hpp"

namespace twocat {

int PGM::Sigma(int f, int g) const {
  const TwoCategory& C = *S;
  if (C.is_id1(f) || C.is_id1(g)) {
    // (f⊕b')∘(a⊕g) with an identity factor
    const int b = C.one(g).tgt, a = C.one(f).src;
    return C.id2(C.compose(rt1(f, b), lt1(a, g)));
  }
  auto it = sigma.find(pair_key(f, g));
  return it == sigma.end() ? -1 : it->second;
}

int PGMAction::Sigma(int f, int g) const {
  const TwoCategory &C = *S->S, &Y = *X;
  if (C.is_id1(f) || Y.is_id1(g)) {
    const int y1 = Y.one(g).tgt, s = C.one(f).src;
    return Y.id2(Y.compose(right[y1].on1[f], left[s].on1[g]));
  }
  auto it = sigma.find(pair_key(f, g));
  return it == sigma.end() ? -1 : it->second;
}

namespace {

// Interchanger data shared by a PGM and an action: f ranges over 1-cells of
// A, g over 1-cells of B, everything lands in Z.
struct SigmaSystem {
  const TwoCategory *A, *B, *Z;
  std::function<int(int, int)> r1, l1, r2, l2, sig;  // r1(f, y), l1(a, g), r2(α, y), l2(a, δ), Σ(f, g)
  std::function<bool(int, int)> stored;              // stored(f, g): Σ present when both nonidentity
  std::string tag;
};

void fail(const std::string& axiom, const std::string& detail) { throw AxiomError(axiom, detail); }

void check_sigma(const SigmaSystem& s) {
  const TwoCategory &A = *s.A, &B = *s.B, &Z = *s.Z;
  auto nm = [&](int f, int g) { return "(" + A.one(f).id + ", " + B.one(g).id + ")"; };
  for (int f = 0; f < A.num_one_cells(); ++f)
    for (int g = 0; g < B.num_one_cells(); ++g) {
      if (A.is_id1(f) || B.is_id1(g)) continue;
      if (!s.stored(f, g)) fail(s.tag + "-sigma-missing", "no interchanger for " + nm(f, g));
      const int a = A.one(f).src, a1 = A.one(f).tgt, b = B.one(g).src, b1 = B.one(g).tgt;
      const int x = s.sig(f, g);
      const int src = Z.compose(s.r1(f, b1), s.l1(a, g)), tgt = Z.compose(s.l1(a1, g), s.r1(f, b));
      if (x < 0 || Z.two(x).src != src || Z.two(x).tgt != tgt) fail(s.tag + "-sigma-typing", "interchanger " + nm(f, g));
      if (!Z.invertible2(x)) fail(s.tag + "-sigma-invertible", "interchanger " + nm(f, g));
    }
  // composition in each argument
  for (int f = 0; f < A.num_one_cells(); ++f)
    for (int f1 : A.out_one(A.one(f).tgt))
      for (int g = 0; g < B.num_one_cells(); ++g) {
        const int b = B.one(g).src, b1 = B.one(g).tgt;
        const int lhs = s.sig(A.compose(f1, f), g);
        const int rhs = Z.vcompose(Z.whisker_r(s.sig(f1, g), s.r1(f, b)), Z.whisker_l(s.r1(f1, b1), s.sig(f, g)));
        if (lhs != rhs) fail(s.tag + "-sigma-composition", "first argument " + A.one(f1).id + "∘" + A.one(f).id + ", " + B.one(g).id);
      }
  for (int f = 0; f < A.num_one_cells(); ++f)
    for (int g = 0; g < B.num_one_cells(); ++g)
      for (int g1 : B.out_one(B.one(g).tgt)) {
        const int a = A.one(f).src, a1 = A.one(f).tgt;
        const int lhs = s.sig(f, B.compose(g1, g));
        const int rhs = Z.vcompose(Z.whisker_l(s.l1(a1, g1), s.sig(f, g)), Z.whisker_r(s.sig(f, g1), s.l1(a, g)));
        if (lhs != rhs) fail(s.tag + "-sigma-composition", "second argument " + A.one(f).id + ", " + B.one(g1).id + "∘" + B.one(g).id);
      }
  // naturality in both 2-cell arguments
  for (int al = 0; al < A.num_two_cells(); ++al)
    for (int de = 0; de < B.num_two_cells(); ++de) {
      const int f = A.two(al).src, f1 = A.two(al).tgt, g = B.two(de).src, g1 = B.two(de).tgt;
      const int a = A.one(f).src, a1 = A.one(f).tgt, b = B.one(g).src, b1 = B.one(g).tgt;
      const int lhs = Z.vcompose(s.sig(f1, g1), Z.hcompose(s.r2(al, b1), s.l2(a, de)));
      const int rhs = Z.vcompose(Z.hcompose(s.l2(a1, de), s.r2(al, b)), s.sig(f, g));
      if (lhs != rhs) fail(s.tag + "-sigma-naturality", "2-cells " + A.two(al).id + ", " + B.two(de).id);
    }
}

void check_functor(const TwoFunctor& F, const std::string& axiom, const std::string& what) {
  try {
    validate(F);
  } catch (const AxiomError& e) {
    fail(axiom, what + ": " + e.what());
  }
}

}  // namespace

void validate_pgm(const PGM& P) {
  if (!P.S) throw InputError("PGM without carrier");
  const TwoCategory& S = *P.S;
  validate(S);
  const int n = S.num_objects(), e = P.unit;
  if (e < 0 || e >= n) fail("pgm-unit", "unit is not an object");
  if (int(P.sum.size()) != n || int(P.left.size()) != n || int(P.right.size()) != n || int(P.beta.size()) != n)
    throw InputError("PGM tables do not match the carrier");
  for (int a = 0; a < n; ++a)
    if (int(P.sum[a].size()) != n || int(P.beta[a].size()) != n) throw InputError("PGM tables do not match the carrier");
  auto ob = [&](int a) { return S.object(a); };
  for (int a = 0; a < n; ++a) {
    if (P.sum[e][a] != a || P.sum[a][e] != a) fail("pgm-unit", "e⊕" + ob(a) + " or " + ob(a) + "⊕e");
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (P.sum[P.sum[a][b]][c] != P.sum[a][P.sum[b][c]]) fail("pgm-associativity", ob(a) + "," + ob(b) + "," + ob(c));
  }
  for (int a = 0; a < n; ++a) {
    for (const TwoFunctor* T : {&P.left[a], &P.right[a]})
      if (T->source.get() != &S && !identical(*T->source, S)) fail("pgm-translation", "translation by " + ob(a) + " is not an endofunctor of the carrier");
    check_functor(P.left[a], "pgm-translation", "left translation by " + ob(a));
    check_functor(P.right[a], "pgm-translation", "right translation by " + ob(a));
    for (int b = 0; b < n; ++b) {
      if (P.left[a].on0[b] != P.sum[a][b]) fail("pgm-translation", ob(a) + "⊕− on " + ob(b));
      if (P.right[b].on0[a] != P.sum[a][b]) fail("pgm-translation", "−⊕" + ob(b) + " on " + ob(a));
    }
  }
  const TwoFunctor id = identity_functor(P.S);
  if (!same_maps(P.left[e], id) || !same_maps(P.right[e], id)) fail("pgm-unit", "translation by the unit is not the identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ab = P.sum[a][b];
      if (!same_maps(P.left[ab], compose(P.left[a], P.left[b]))) fail("pgm-associativity", "(" + ob(a) + "⊕" + ob(b) + ")⊕− on cells");
      if (!same_maps(P.right[ab], compose(P.right[b], P.right[a]))) fail("pgm-associativity", "−⊕(" + ob(a) + "⊕" + ob(b) + ") on cells");
      if (!same_maps(compose(P.left[a], P.right[b]), compose(P.right[b], P.left[a])))
        fail("pgm-associativity", "(" + ob(a) + "⊕−)⊕" + ob(b) + " on cells");
    }

  SigmaSystem sys{&S, &S, &S,
                  [&](int f, int y) { return P.rt1(f, y); },
                  [&](int a, int g) { return P.lt1(a, g); },
                  [&](int x, int y) { return P.rt2(x, y); },
                  [&](int a, int x) { return P.lt2(a, x); },
                  [&](int f, int g) { return P.Sigma(f, g); },
                  [&](int f, int g) { return P.sigma.count(pair_key(f, g)) > 0; },
                  "pgm"};
  check_sigma(sys);
  for (auto& [k, v] : P.sigma) {
    const int f = int(k >> 32), g = int(k & 0xffffffffu);
    if (S.is_id1(f) || S.is_id1(g)) fail("pgm-sigma-identity", "interchanger stored for an identity");
    (void)v;
  }
  // translations of interchangers
  for (int f = 0; f < S.num_one_cells(); ++f)
    for (int g = 0; g < S.num_one_cells(); ++g) {
      const int x = P.Sigma(f, g);
      const std::string nm = S.one(f).id + ", " + S.one(g).id;
      for (int c = 0; c < n; ++c) {
        if (P.lt2(c, x) != P.Sigma(P.lt1(c, f), g)) fail("pgm-sigma-translation", ob(c) + "⊕Σ(" + nm + ")");
        if (P.rt2(x, c) != P.Sigma(f, P.rt1(g, c))) fail("pgm-sigma-translation", "Σ(" + nm + ")⊕" + ob(c));
        if (P.Sigma(P.rt1(f, c), g) != P.Sigma(f, P.lt1(c, g))) fail("pgm-sigma-translation", "Σ(" + nm + ") through " + ob(c));
      }
    }

  // β
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int t = P.beta[a][b];
      if (t < 0 || S.one(t).src != P.sum[a][b] || S.one(t).tgt != P.sum[b][a]) fail("pgm-beta-typing", "β(" + ob(a) + "," + ob(b) + ")");
      if (S.compose(P.beta[b][a], t) != S.id1(P.sum[a][b])) fail("pgm-beta-involution", "β(" + ob(b) + "," + ob(a) + ")∘β(" + ob(a) + "," + ob(b) + ")");
      for (int c = 0; c < n; ++c)
        if (P.beta[a][P.sum[b][c]] != S.compose(P.lt1(b, P.beta[a][c]), P.rt1(P.beta[a][b], c)))
          fail("pgm-beta-hexagon", ob(a) + "," + ob(b) + "," + ob(c));
    }
  for (int f = 0; f < S.num_one_cells(); ++f)
    for (int b = 0; b < n; ++b) {
      const int a = S.one(f).src, a1 = S.one(f).tgt;
      if (S.compose(P.beta[a1][b], P.rt1(f, b)) != S.compose(P.lt1(b, f), P.beta[a][b]))
        fail("pgm-beta-naturality", "1-cell " + S.one(f).id + " in the first variable at " + ob(b));
      if (S.compose(P.beta[b][a1], P.lt1(b, f)) != S.compose(P.rt1(f, b), P.beta[b][a]))
        fail("pgm-beta-naturality", "1-cell " + S.one(f).id + " in the second variable at " + ob(b));
    }
  for (int x = 0; x < S.num_two_cells(); ++x)
    for (int b = 0; b < n; ++b) {
      const int a = S.src0(x), a1 = S.tgt0(x);
      if (S.whisker_l(P.beta[a1][b], P.rt2(x, b)) != S.whisker_r(P.lt2(b, x), P.beta[a][b]))
        fail("pgm-beta-naturality", "2-cell " + S.two(x).id + " in the first variable at " + ob(b));
      if (S.whisker_l(P.beta[b][a1], P.lt2(b, x)) != S.whisker_r(P.rt2(x, b), P.beta[b][a]))
        fail("pgm-beta-naturality", "2-cell " + S.two(x).id + " in the second variable at " + ob(b));
    }
  for (auto& [k, x] : P.sigma) {
    const int f = int(k >> 32), g = int(k & 0xffffffffu);
    const int a = S.one(f).src, a1 = S.one(f).tgt, b = S.one(g).src, b1 = S.one(g).tgt;
    const int inv = S.inverse2(P.Sigma(g, f));
    if (inv < 0 || S.whisker_l(P.beta[a1][b1], x) != S.whisker_r(inv, P.beta[a][b]))
      fail("pgm-beta-naturality", "interchanger (" + S.one(f).id + ", " + S.one(g).id + ")");
  }
}

void validate_action(const PGMAction& M) {
  if (!M.S || !M.X) throw InputError("action without PGM or 2-category");
  const PGM& P = *M.S;
  const TwoCategory &S = *P.S, &X = *M.X;
  validate(X);
  const int n = S.num_objects(), m = X.num_objects();
  if (int(M.act.size()) != n || int(M.left.size()) != n || int(M.right.size()) != m)
    throw InputError("action tables do not match");
  for (auto& r : M.act)
    if (int(r.size()) != m) throw InputError("action tables do not match");
  auto ob = [&](int s) { return S.object(s); };
  for (int s = 0; s < n; ++s) {
    check_functor(M.left[s], "action-functor", "μ(" + ob(s) + ",−)");
    for (int x = 0; x < m; ++x)
      if (M.left[s].on0[x] != M.act[s][x]) fail("action-functor", "μ(" + ob(s) + ",−) on " + X.object(x));
  }
  for (int x = 0; x < m; ++x) {
    check_functor(M.right[x], "action-functor", "μ(−," + X.object(x) + ")");
    for (int s = 0; s < n; ++s)
      if (M.right[x].on0[s] != M.act[s][x]) fail("action-functor", "μ(−," + X.object(x) + ") on " + ob(s));
  }
  if (!same_maps(M.left[P.unit], identity_functor(M.X))) fail("action-unit", "μ(e,−) is not the identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!same_maps(M.left[P.sum[a][b]], compose(M.left[a], M.left[b])))
        fail("action-associativity", "μ(" + ob(a) + "⊕" + ob(b) + ",−)");
    }
  for (int x = 0; x < m; ++x)
    for (int b = 0; b < n; ++b) {
      if (!same_maps(compose(M.right[x], P.right[b]), M.right[M.act[b][x]]))
        fail("action-associativity", "μ(−⊕" + ob(b) + "," + X.object(x) + ")");
      if (!same_maps(compose(M.left[b], M.right[x]), compose(M.right[x], P.left[b])))
        fail("action-associativity", "μ(" + ob(b) + "⊕−," + X.object(x) + ")");
    }
  SigmaSystem sys{&S, &X, &X,
                  [&](int f, int y) { return M.right[y].on1[f]; },
                  [&](int s, int g) { return M.left[s].on1[g]; },
                  [&](int a, int y) { return M.right[y].on2[a]; },
                  [&](int s, int d) { return M.left[s].on2[d]; },
                  [&](int f, int g) { return M.Sigma(f, g); },
                  [&](int f, int g) { return M.sigma.count(pair_key(f, g)) > 0; },
                  "action"};
  check_sigma(sys);
  for (int f = 0; f < S.num_one_cells(); ++f) {
    for (int g = 0; g < X.num_one_cells(); ++g) {
      const int x = M.Sigma(f, g);
      const std::string nm = S.one(f).id + ", " + X.one(g).id;
      for (int c = 0; c < n; ++c) {
        if (M.left[c].on2[x] != M.Sigma(P.lt1(c, f), g)) fail("action-sigma-translation", ob(c) + "·Σ(" + nm + ")");
        if (M.Sigma(P.rt1(f, c), g) != M.Sigma(f, M.left[c].on1[g])) fail("action-sigma-translation", "Σ(" + nm + ") through " + ob(c));
      }
    }
    for (int f1 = 0; f1 < S.num_one_cells(); ++f1)
      for (int x = 0; x < m; ++x)
        if (M.right[x].on2[P.Sigma(f, f1)] != M.Sigma(f, M.right[x].on1[f1]))
          fail("action-sigma-translation", "Σ(" + S.one(f).id + ", " + S.one(f1).id + ") acting on " + X.object(x));
  }
}

PGMAction self_action(std::shared_ptr<const PGM> S) {
  PGMAction A;
  A.X = S->S;
  A.act = S->sum;
  A.left = S->left;
  A.right = S->right;
  A.sigma = S->sigma;
  A.S = std::move(S);
  return A;
}

PGMAction trivial_action(std::shared_ptr<const PGM> P, TwoCatPtr X) {
  PGMAction A;
  const TwoCategory& S = *P->S;
  A.X = X;
  A.act.assign(S.num_objects(), std::vector<int>(X->num_objects()));
  for (auto& r : A.act) std::iota(r.begin(), r.end(), 0);
  A.left.assign(S.num_objects(), identity_functor(X));
  for (int x = 0; x < X->num_objects(); ++x) {
    TwoFunctor c;
    c.source = P->S;
    c.target = X;
    c.on0.assign(S.num_objects(), x);
    c.on1.assign(S.num_one_cells(), X->id1(x));
    c.on2.assign(S.num_two_cells(), X->id2(X->id1(x)));
    A.right.push_back(c);
  }
  // Σ is the identity of the whiskered 1-cell s·g = g
  for (int f = 0; f < S.num_one_cells(); ++f)
    for (int g = 0; g < X->num_one_cells(); ++g)
      if (!S.is_id1(f) && !X->is_id1(g)) A.sigma[pair_key(f, g)] = X->id2(g);
  A.S = std::move(P);
  return A;
}

PGM discrete_pgm(const std::vector<std::string>& objects, const std::vector<std::vector<int>>& add, int unit) {
  PGM P;
  auto C = std::make_shared<TwoCategory>(discrete(objects));
  P.S = C;
  P.unit = unit;
  P.sum = add;
  const int n = int(objects.size());
  P.beta.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    TwoFunctor L{C, C, {}, {}, {}}, R{C, C, {}, {}, {}};
    for (int b = 0; b < n; ++b) {
      L.on0.push_back(add[a][b]);
      R.on0.push_back(add[b][a]);
      P.beta[a][b] = C->id1(add[a][b]);
    }
    // discrete: cell b is the identity of object b at every level
    L.on1 = L.on2 = L.on0;
    R.on1 = R.on2 = R.on0;
    P.left.push_back(L);
    P.right.push_back(R);
  }
  return P;
}

PGM one_object_pgm(TwoCatPtr S) {
  PGM P;
  P.S = S;
  P.unit = 0;
  P.sum = {{0}};
  P.left = {identity_functor(S)};
  P.right = {identity_functor(S)};
  P.beta = {{S->id1(0)}};
  return P;
}

std::shared_ptr<const PGM> pgm_C2() {
  auto P = std::make_shared<PGM>(discrete_pgm({"0", "1"}, {{0, 1}, {1, 0}}, 0));
  P->name = "FIX_C2-PGM";
  return P;
}

std::shared_ptr<const PGM> pgm_M2() {
  auto P = std::make_shared<PGM>(discrete_pgm({"0", "1"}, {{0, 1}, {1, 1}}, 0));
  P->name = "FIX_M2-PGM";
  return P;
}

std::shared_ptr<const PGM> pgm_G2() {
  auto P = std::make_shared<PGM>(one_object_pgm(fix_G2()));
  P->name = "FIX_G2-PGM";
  return P;
}

std::shared_ptr<const PGM> pgm_G2sat() {
  auto P = std::make_shared<PGM>(one_object_pgm(fix_G2sat()));
  P->name = "FIX_G2sat-PGM";
  return P;
}

// ---- JSON ----

namespace {

json functor_cells(const TwoFunctor& F) {
  const TwoCategory &C = *F.source, &D = *F.target;
  return {{"one_cells", id_map_json(F.on1, [&](int x) { return C.one(x).id; }, [&](int x) { return D.one(x).id; })},
          {"two_cells", id_map_json(F.on2, [&](int x) { return C.two(x).id; }, [&](int x) { return D.two(x).id; })}};
}

void read_cells(const json& j, TwoFunctor& F) {
  const TwoCategory &C = *F.source, &D = *F.target;
  F.on1 = read_map(json_need(j, "one_cells"), C.num_one_cells(), [&](const std::string& s) { return C.find_one(s); },
                   [&](const std::string& s) { return D.find_one(s); }, "one_cells");
  F.on2 = read_map(json_need(j, "two_cells"), C.num_two_cells(), [&](const std::string& s) { return C.find_two(s); },
                   [&](const std::string& s) { return D.find_two(s); }, "two_cells");
}

int find_or_throw(int ix, const std::string& id, const char* what) {
  if (ix < 0) throw InputError(std::string("dangling ") + what + " identifier " + id);
  return ix;
}

json sigma_json(const std::unordered_map<std::uint64_t, int>& sigma, const TwoCategory& A, const TwoCategory& B,
                const TwoCategory& Z) {
  std::vector<std::pair<std::uint64_t, int>> v(sigma.begin(), sigma.end());
  std::sort(v.begin(), v.end());
  json a = json::array();
  for (auto& [k, x] : v)
    a.push_back({{"left", A.one(int(k >> 32)).id}, {"right", B.one(int(k & 0xffffffffu)).id}, {"cell", Z.two(x).id}});
  return a;
}

std::unordered_map<std::uint64_t, int> sigma_from_json(const json& j, const TwoCategory& A, const TwoCategory& B,
                                                       const TwoCategory& Z) {
  std::unordered_map<std::uint64_t, int> m;
  if (!j.is_array()) throw InputError("\"sigma\" must be an array");
  for (auto& e : j) {
    const int f = find_or_throw(A.find_one(json_string(e, "left")), json_string(e, "left"), "1-cell");
    const int g = find_or_throw(B.find_one(json_string(e, "right")), json_string(e, "right"), "1-cell");
    const int c = find_or_throw(Z.find_two(json_string(e, "cell")), json_string(e, "cell"), "2-cell");
    if (!m.emplace(pair_key(f, g), c).second) throw InputError("duplicate interchanger entry");
  }
  return m;
}

}  // namespace

json to_json(const PGM& P) {
  const TwoCategory& S = *P.S;
  json j;
  if (!P.name.empty()) j["name"] = P.name;
  j["carrier"] = to_json(S);
  j["unit"] = S.object(P.unit);
  j["sum_objects"] = json::array();
  j["beta"] = json::array();
  for (int a = 0; a < S.num_objects(); ++a)
    for (int b = 0; b < S.num_objects(); ++b) {
      j["sum_objects"].push_back({S.object(a), S.object(b), S.object(P.sum[a][b])});
      j["beta"].push_back({{"left", S.object(a)}, {"right", S.object(b)}, {"cell", S.one(P.beta[a][b]).id}});
    }
  j["left_translations"] = json::array();
  j["right_translations"] = json::array();
  for (int a = 0; a < S.num_objects(); ++a) {
    json l = functor_cells(P.left[a]), r = functor_cells(P.right[a]);
    l["by"] = r["by"] = S.object(a);
    j["left_translations"].push_back(l);
    j["right_translations"].push_back(r);
  }
  j["sigma"] = sigma_json(P.sigma, S, S, S);
  return j;
}

PGM pgm_from_json(const json& j, const std::filesystem::path& base) {
  if (!j.is_object()) throw InputError("PGM must be a JSON object");
  PGM P;
  P.S = category_ref(json_need(j, "carrier"), base);
  const TwoCategory& S = *P.S;
  const int n = S.num_objects();
  if (j.contains("name") && j["name"].is_string()) P.name = j["name"];
  auto obj = [&](const std::string& s) { return find_or_throw(S.find_object(s), s, "object"); };
  P.unit = obj(json_string(j, "unit"));
  P.sum.assign(n, std::vector<int>(n, -1));
  const json& sums = json_need(j, "sum_objects");
  if (!sums.is_array()) throw InputError("\"sum_objects\" must be an array");
  for (auto& e : sums) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string() || !e[2].is_string())
      throw InputError("\"sum_objects\" entries must be [a, b, a⊕b]");
    int& slot = P.sum[obj(e[0])][obj(e[1])];
    if (slot >= 0) throw InputError("duplicate sum entry");
    slot = obj(e[2]);
  }
  for (auto& r : P.sum)
    for (int v : r)
      if (v < 0) throw InputError("\"sum_objects\" is not total");
  auto translations = [&](const char* key, bool is_left) {
    std::vector<TwoFunctor> out(n);
    std::vector<char> seen(n, 0);
    const json& arr = json_need(j, key);
    if (!arr.is_array()) throw InputError(std::string(key) + " must be an array");
    for (auto& e : arr) {
      const int a = obj(json_string(e, "by"));
      if (seen[a]) throw InputError(std::string("duplicate entry in ") + key);
      seen[a] = 1;
      TwoFunctor F{P.S, P.S, {}, {}, {}};
      for (int b = 0; b < n; ++b) F.on0.push_back(is_left ? P.sum[a][b] : P.sum[b][a]);
      read_cells(e, F);
      out[a] = F;
    }
    for (char c : seen)
      if (!c) throw InputError(std::string(key) + " is not total");
    return out;
  };
  P.left = translations("left_translations", true);
  P.right = translations("right_translations", false);
  P.sigma = sigma_from_json(json_need(j, "sigma"), S, S, S);
  P.beta.assign(n, std::vector<int>(n, -1));
  const json& beta = json_need(j, "beta");
  if (!beta.is_array()) throw InputError("\"beta\" must be an array");
  for (auto& e : beta) {
    const std::string c = json_string(e, "cell");
    P.beta[obj(json_string(e, "left"))][obj(json_string(e, "right"))] = find_or_throw(S.find_one(c), c, "1-cell");
  }
  for (auto& r : P.beta)
    for (int v : r)
      if (v < 0) throw InputError("\"beta\" is not total");
  return P;
}

std::shared_ptr<const PGM> load_pgm(const std::filesystem::path& p) {
  auto P = std::make_shared<PGM>(pgm_from_json(read_json_file(p), p.parent_path()));
  validate_pgm(*P);
  return P;
}

json to_json(const PGMAction& A) {
  const TwoCategory &S = *A.S->S, &X = *A.X;
  json j;
  j["pgm"] = to_json(*A.S);
  j["space"] = to_json(X);
  j["act_objects"] = json::array();
  for (int s = 0; s < S.num_objects(); ++s)
    for (int x = 0; x < X.num_objects(); ++x) j["act_objects"].push_back({S.object(s), X.object(x), X.object(A.act[s][x])});
  j["left"] = json::array();
  for (int s = 0; s < S.num_objects(); ++s) {
    json l = functor_cells(A.left[s]);
    l["by"] = S.object(s);
    j["left"].push_back(l);
  }
  j["right"] = json::array();
  for (int x = 0; x < X.num_objects(); ++x) {
    json r = functor_cells(A.right[x]);
    r["at"] = X.object(x);
    j["right"].push_back(r);
  }
  j["sigma"] = sigma_json(A.sigma, S, X, X);
  return j;
}

PGMAction action_from_json(const json& j, const std::filesystem::path& base) {
  if (!j.is_object()) throw InputError("action must be a JSON object");
  const json& pj = json_need(j, "pgm");
  std::shared_ptr<const PGM> P;
  if (pj.is_string()) {
    std::filesystem::path p = pj.get<std::string>();
    P = load_pgm(p.is_relative() ? base / p : p);
  } else {
    auto Q = std::make_shared<PGM>(pgm_from_json(pj, base));
    validate_pgm(*Q);
    P = Q;
  }
  if (j.contains("self") && j["self"].is_boolean() && j["self"].get<bool>()) return self_action(P);
  if (j.contains("trivial") && j["trivial"].is_boolean() && j["trivial"].get<bool>())
    return trivial_action(P, category_ref(json_need(j, "space"), base));
  PGMAction A;
  A.S = P;
  A.X = category_ref(json_need(j, "space"), base);
  const TwoCategory &S = *P->S, &X = *A.X;
  const int n = S.num_objects(), m = X.num_objects();
  auto sob = [&](const std::string& s) { return find_or_throw(S.find_object(s), s, "object"); };
  auto xob = [&](const std::string& s) { return find_or_throw(X.find_object(s), s, "object"); };
  A.act.assign(n, std::vector<int>(m, -1));
  const json& ao = json_need(j, "act_objects");
  if (!ao.is_array()) throw InputError("\"act_objects\" must be an array");
  for (auto& e : ao) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string() || !e[2].is_string())
      throw InputError("\"act_objects\" entries must be [s, x, s·x]");
    A.act[sob(e[0])][xob(e[1])] = xob(e[2]);
  }
  for (auto& r : A.act)
    for (int v : r)
      if (v < 0) throw InputError("\"act_objects\" is not total");
  A.left.resize(n);
  std::vector<char> seen(n, 0);
  for (auto& e : json_need(j, "left")) {
    const int s = sob(json_string(e, "by"));
    seen[s] = 1;
    TwoFunctor F{A.X, A.X, A.act[s], {}, {}};
    read_cells(e, F);
    A.left[s] = F;
  }
  for (char c : seen)
    if (!c) throw InputError("\"left\" is not total");
  A.right.resize(m);
  std::vector<char> seen2(m, 0);
  for (auto& e : json_need(j, "right")) {
    const int x = xob(json_string(e, "at"));
    seen2[x] = 1;
    TwoFunctor F{P->S, A.X, {}, {}, {}};
    for (int s = 0; s < n; ++s) F.on0.push_back(A.act[s][x]);
    read_cells(e, F);
    A.right[x] = F;
  }
  for (char c : seen2)
    if (!c) throw InputError("\"right\" is not total");
  A.sigma = sigma_from_json(json_need(j, "sigma"), S, X, X);
  return A;
}

PGMAction load_action(const std::filesystem::path& p) {
  PGMAction A = action_from_json(read_json_file(p), p.parent_path());
  validate_action(A);
  return A;
}

// ---- π₀ ----

Components pi0(const TwoCategory& S) {
  const int n = S.num_objects();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int f = 0; f < S.num_one_cells(); ++f) {
    int a = find(S.one(f).src), b = find(S.one(f).tgt);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  Components c;
  c.comp.assign(n, -1);
  std::vector<int> label(n, -1);
  for (int x = 0; x < n; ++x) {
    const int r = find(x);
    if (label[r] < 0) {
      label[r] = c.count();
      c.rep.push_back(x);
    }
    c.comp[x] = label[r];
  }
  return c;
}

bool CommMonoid::is_group() const {
  for (int a = 0; a < size(); ++a) {
    bool inv = false;
    for (int b = 0; b < size() && !inv; ++b) inv = add[a][b] == unit;
    if (!inv) return false;
  }
  return true;
}

void validate(const CommMonoid& M) {
  const int n = M.size();
  if (M.unit < 0 || M.unit >= n || int(M.add.size()) != n) throw InputError("malformed monoid table");
  for (int a = 0; a < n; ++a) {
    if (int(M.add[a].size()) != n) throw InputError("malformed monoid table");
    if (M.add[M.unit][a] != a || M.add[a][M.unit] != a) fail("monoid-unit", M.names[a]);
    for (int b = 0; b < n; ++b) {
      if (M.add[a][b] != M.add[b][a]) fail("monoid-commutativity", M.names[a] + "," + M.names[b]);
      for (int c = 0; c < n; ++c)
        if (M.add[M.add[a][b]][c] != M.add[a][M.add[b][c]]) fail("monoid-associativity", M.names[a] + "," + M.names[b] + "," + M.names[c]);
    }
  }
}

CommMonoid pi0_monoid(const PGM& P) {
  const TwoCategory& S = *P.S;
  const Components c = pi0(S);
  CommMonoid M;
  for (int r : c.rep) M.names.push_back("[" + S.object(r) + "]");
  M.unit = c.comp[P.unit];
  M.add.assign(c.count(), std::vector<int>(c.count()));
  for (int i = 0; i < c.count(); ++i)
    for (int j = 0; j < c.count(); ++j) M.add[i][j] = c.comp[P.sum[c.rep[i]][c.rep[j]]];
  const int n = S.num_objects();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (c.comp[P.sum[a][b]] != M.add[c.comp[a]][c.comp[b]]) fail("pi0-sum", "sum does not descend at " + S.object(a) + "," + S.object(b));
      // β(a,b) joins a⊕b and b⊕a
      const int t = P.beta[a][b];
      if (c.comp[S.one(t).src] != c.comp[S.one(t).tgt]) fail("pi0-commutativity", S.object(a) + "," + S.object(b));
    }
  validate(M);
  return M;
}

// ---- predicates ----

std::optional<int> equivalence_inverse(const TwoCategory& S, int f) {
  const int x = S.one(f).src, y = S.one(f).tgt;
  auto iso_to = [&](int h, int k) {
    for (int a : S.hom2(h, k))
      if (S.invertible2(a)) return true;
    return false;
  };
  for (int g : S.hom(y, x))
    if (iso_to(S.compose(g, f), S.id1(x)) && iso_to(S.compose(f, g), S.id1(y))) return g;
  return std::nullopt;
}

Verdict is_two_groupoid(const TwoCategory& S) {
  for (int a = 0; a < S.num_two_cells(); ++a)
    if (!S.invertible2(a)) return {false, "2-cell " + describe_two(S, a) + " is not invertible"};
  std::string w;
  for (int f = 0; f < S.num_one_cells(); ++f) {
    auto g = equivalence_inverse(S, f);
    if (!g) return {false, "1-cell " + describe_one(S, f) + " is not an equivalence"};
    if (!S.is_id1(f)) w += (w.empty() ? "" : "; ") + S.one(f).id + " inverse " + S.one(*g).id;
  }
  return {true, w.empty() ? "all cells identities or invertible" : w};
}

Verdict is_grouplike(const PGM& P) {
  const TwoCategory& S = *P.S;
  std::string w;
  for (int x = 0; x < S.num_objects(); ++x) {
    bool found = false;
    for (int y = 0; y < S.num_objects() && !found; ++y) {
      bool l = false, r = false;
      for (int u : S.hom(P.sum[x][y], P.unit))
        if (equivalence_inverse(S, u)) l = true;
      for (int u : S.hom(P.sum[y][x], P.unit))
        if (equivalence_inverse(S, u)) r = true;
      if (l && r) {
        found = true;
        w += (w.empty() ? "" : "; ") + S.object(x) + " inverse " + S.object(y);
      }
    }
    if (!found) return {false, "object " + S.object(x) + " has no inverse"};
  }
  return {true, w};
}

Verdict has_faithful_translations(const PGM& P) {
  const TwoCategory& S = *P.S;
  for (int s = 0; s < S.num_objects(); ++s)
    for (int a = 0; a < S.num_two_cells(); ++a)
      for (int b = a + 1; b < S.num_two_cells(); ++b)
        if (S.two(a).src == S.two(b).src && S.two(a).tgt == S.two(b).tgt && P.lt2(s, a) == P.lt2(s, b))
          return {false, S.object(s) + "⊕− identifies " + S.two(a).id + " and " + S.two(b).id};
  return {true, "every translation is injective on parallel 2-cells"};
}

Verdict is_strict_pgm_functor(const TwoFunctor& F, const PGM& P, const PGM& Q) {
  const TwoCategory &S = *P.S, &T = *Q.S;
  if (F.on0[P.unit] != Q.unit) return {false, "unit not preserved"};
  for (int a = 0; a < S.num_objects(); ++a) {
    for (int b = 0; b < S.num_objects(); ++b) {
      if (F.on0[P.sum[a][b]] != Q.sum[F.on0[a]][F.on0[b]]) return {false, "sum not preserved at " + S.object(a) + "," + S.object(b)};
      if (F.on1[P.beta[a][b]] != Q.beta[F.on0[a]][F.on0[b]]) return {false, "symmetry not preserved at " + S.object(a) + "," + S.object(b)};
    }
    if (!same_maps(compose(F, P.left[a]), compose(Q.left[F.on0[a]], F))) return {false, "left translation by " + S.object(a)};
    if (!same_maps(compose(F, P.right[a]), compose(Q.right[F.on0[a]], F))) return {false, "right translation by " + S.object(a)};
  }
  for (int f = 0; f < S.num_one_cells(); ++f)
    for (int g = 0; g < S.num_one_cells(); ++g)
      if (F.on2[P.Sigma(f, g)] != Q.Sigma(F.on1[f], F.on1[g]))
        return {false, "interchanger (" + S.one(f).id + ", " + S.one(g).id + ")"};
  (void)T;
  return {true, "unit, sum, translations, interchangers and symmetry preserved"};
}

// ---- localization ----

namespace {

bool contained(const IntMatrix& big, const IntMatrix& small, int g) {
  // span(small) ⊆ span(big)
  if (small.cols() == 0) return true;
  return subquotient(IntMatrix::hcat(big, small), big, g).group.trivial();
}

// Generators of {v : P v ∈ span(K)}.
IntMatrix preimage(const IntMatrix& P, const IntMatrix& K, int g) {
  if (K.cols() == 0) return kernel_basis(P);
  IntMatrix negK(K.rows(), K.cols());
  for (int r = 0; r < K.rows(); ++r)
    for (int c = 0; c < K.cols(); ++c) negK(r, c) = -K(r, c);
  const IntMatrix Z = kernel_basis(IntMatrix::hcat(P, negK));
  return Z.rows_range(0, g);
}

}  // namespace

Localization localize(const IntMatrix& rel, int g, const std::vector<IntMatrix>& acts, const CommMonoid& M) {
  validate(M);
  if (int(acts.size()) != M.size()) throw InputError("action table size differs from the monoid");
  const IntMatrix R = rel.cols() == 0 ? IntMatrix(g, 0) : rel;
  for (auto& A : acts)
    if (A.rows() != g || A.cols() != g) throw InputError("action matrices must be square of the generator count");
  auto diff_in_rel = [&](const IntMatrix& X, const IntMatrix& Y) {
    IntMatrix D(g, g);
    for (int r = 0; r < g; ++r)
      for (int c = 0; c < g; ++c) D(r, c) = X(r, c) - Y(r, c);
    return contained(R, D, g);
  };
  for (int a = 0; a < M.size(); ++a) {
    if (R.cols() > 0 && !contained(R, acts[a] * R, g)) fail("monoid-action", M.names[a] + " does not respect the relations");
    for (int b = 0; b < M.size(); ++b)
      if (!diff_in_rel(acts[M.add[a][b]], acts[a] * acts[b])) fail("monoid-action", "not a homomorphism at " + M.names[a] + "," + M.names[b]);
  }
  if (!diff_in_rel(acts[M.unit], IntMatrix::identity(g))) fail("monoid-action", "unit does not act as the identity");

  Localization L;
  L.g = g;
  IntMatrix K = R;
  for (bool changed = true; changed;) {
    changed = false;
    for (int m = 0; m < M.size(); ++m) {
      IntMatrix P = IntMatrix::identity(g), Kn = K;
      for (;;) {
        P = acts[m] * P;
        const IntMatrix next = IntMatrix::hcat(K, preimage(P, K, g));
        if (contained(Kn, next, g)) break;
        Kn = next;
      }
      if (!contained(K, Kn, g)) {
        K = Kn;
        changed = true;
      }
    }
  }
  L.kernel = K;
  L.group = cokernel(K, g);
  const Subquotient Q = subquotient(IntMatrix::identity(g), K, g);
  for (int m = 0; m < M.size(); ++m)
    if (!induced_is_iso(Q, Q, induced_map(Q, Q, acts[m])))
      fail("localization", M.names[m] + " is not invertible on the stabilized quotient");
  return L;
}

IntMatrix canonical_relations(const FGAbGroup& A) {
  const int g = A.rank + int(A.torsion.size());
  IntMatrix R(g, int(A.torsion.size()));
  for (int i = 0; i < int(A.torsion.size()); ++i) R(A.rank + i, i) = A.torsion[i];
  return R;
}

FGAbGroup localize_module(const FGAbGroup& A, const std::vector<IntMatrix>& acts, const CommMonoid& M) {
  return localize(canonical_relations(A), A.rank + int(A.torsion.size()), acts, M).group;
}

}  // namespace twocat
