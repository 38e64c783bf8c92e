#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"
#include "twocat/constructs.hpp"
#include "twocat/nerve.hpp"

using namespace twocat;

namespace {

struct Counts {
  long o = 0, one = 0, two = 0;
};

// Direct enumeration of comma cells from the defining typing, with no
// reference to the library's builder.
Counts comma_oracle(const TwoFunctor& F, const TwoFunctor& G, bool lax) {
  const TwoCategory &X = *F.source, &Y = *F.target, &Z = *G.source;
  struct Obj {
    int x, f, z;
  };
  std::vector<Obj> obs;
  for (int x = 0; x < X.num_objects(); ++x)
    for (int z = 0; z < Z.num_objects(); ++z)
      for (int f : Y.hom(F.on0[x], G.on0[z])) obs.push_back({x, f, z});
  Counts c;
  c.o = long(obs.size());
  for (auto& A : obs)
    for (auto& B : obs)
      for (int s : X.hom(A.x, B.x))
        for (int t : Z.hom(A.z, B.z)) {
          const int gtf = Y.compose(G.on1[t], A.f), ffs = Y.compose(B.f, F.on1[s]);
          const auto& alphas = lax ? Y.hom2(gtf, ffs) : Y.hom2(ffs, gtf);
          c.one += long(alphas.size());
          for (int a : alphas)
            for (int s2 : X.hom(A.x, B.x))
              for (int t2 : Z.hom(A.z, B.z)) {
                const int gtf2 = Y.compose(G.on1[t2], A.f), ffs2 = Y.compose(B.f, F.on1[s2]);
                for (int a2 : lax ? Y.hom2(gtf2, ffs2) : Y.hom2(ffs2, gtf2))
                  for (int ph : X.hom2(s, s2))
                    for (int ga : Z.hom2(t, t2)) {
                      const int fp = Y.whisker_l(B.f, F.on2[ph]), gg = Y.whisker_r(G.on2[ga], A.f);
                      const bool eq = lax ? Y.vcompose(fp, a) == Y.vcompose(a2, gg) : Y.vcompose(gg, a) == Y.vcompose(a2, fp);
                      if (eq) ++c.two;
                    }
              }
        }
  return c;
}

void check_counts(const Comma& L, const Counts& k) {
  CHECK(L.cat->num_objects() == k.o);
  CHECK(L.cat->num_one_cells() == k.one);
  CHECK(L.cat->num_two_cells() == k.two);
}

std::vector<std::pair<TwoFunctor, TwoFunctor>> cospans() {
  auto T = fix_T(), I = fix_I(), G = fix_G2();
  auto pr = fix_prod(G, fix_C2());
  return {{identity_functor(T), identity_functor(T)},
          {identity_functor(I), point(I, 1)},
          {identity_functor(G), identity_functor(G)},
          {pr.pr2, point(pr.pr2.target, 0)},
          {to_terminal(fix_G2sat(), T), to_terminal(G, T)},
          {identity_functor(I), identity_functor(I)}};
}

}  // namespace

TEST_CASE("pullbacks") {
  auto T = fix_T();
  Pullback p = pullback(identity_functor(T), identity_functor(T));
  CHECK(p.cat->num_objects() == 1);
  CHECK(p.cat->num_one_cells() == 1);
  CHECK(p.cat->num_two_cells() == 1);
  auto pr = fix_prod(fix_G2(), fix_C2());
  Pullback q = pullback(pr.pr2, point(fix_C2(), 0));
  CHECK_NOTHROW(validate(*q.cat));
  CHECK(find_isomorphism(q.cat, fix_G2()).has_value());
  auto G = fix_G2();
  Pullback d = pullback(identity_functor(G), identity_functor(G));
  CHECK(d.cat->num_objects() == G->num_objects());
  CHECK(d.cat->num_one_cells() == G->num_one_cells());
  CHECK(d.cat->num_two_cells() == G->num_two_cells());
  CHECK(same_maps(compose(pr.pr2, q.p1), compose(point(fix_C2(), 0), q.p2)));
}

TEST_CASE("laco and oplaco against the direct enumeration") {
  for (auto& [F, G] : cospans()) {
    Comma L = laco(F, G), O = oplaco(F, G);
    CHECK_NOTHROW(validate(*L.cat));
    CHECK_NOTHROW(validate(*O.cat));
    CHECK_NOTHROW(validate(L.pi));
    CHECK_NOTHROW(validate(O.pi));
    check_counts(L, comma_oracle(F, G, true));
    check_counts(O, comma_oracle(F, G, false));
  }
}

TEST_CASE("laco examples") {
  auto T = fix_T();
  Comma t = laco(identity_functor(T), identity_functor(T));
  CHECK(identical(*t.cat, *t.cat));
  CHECK(t.cat->num_objects() == 1);
  CHECK(t.cat->num_two_cells() == 1);
  Comma i = laco(identity_functor(fix_I()), point(fix_I(), 1));
  CHECK(i.cat->num_objects() == 2);
  CHECK(find_isomorphism(i.cat, fix_I()).has_value());
  Comma g = laco(identity_functor(fix_G2()), identity_functor(fix_G2()));
  CHECK(g.cat->num_objects() == 1);
  CHECK(g.cat->num_one_cells() == 2);
}

TEST_CASE("dualities of comma objects") {
  for (auto& [F, G] : cospans()) {
    // op(laco(G,F)) ≅ oplaco(F^op, G^op)
    Comma L1 = laco(G, F);
    auto op1 = std::make_shared<TwoCategory>(op_dual(*L1.cat));
    auto Yop = std::make_shared<TwoCategory>(op_dual(*F.target));
    auto Xop = std::make_shared<TwoCategory>(op_dual(*F.source));
    auto Zop = std::make_shared<TwoCategory>(op_dual(*G.source));
    Comma L2 = oplaco(dual_functor(F, Xop, Yop), dual_functor(G, Zop, Yop));
    TwoFunctor h = comma_duality_iso(L1, op1, L2, false);
    CHECK_NOTHROW(validate(h));
    CHECK(is_bijective(h));
    // coop(laco(G,F)) ≅ laco(F^coop, G^coop)
    auto co1 = std::make_shared<TwoCategory>(coop_dual(*L1.cat));
    auto Yc = std::make_shared<TwoCategory>(coop_dual(*F.target));
    auto Xc = std::make_shared<TwoCategory>(coop_dual(*F.source));
    auto Zc = std::make_shared<TwoCategory>(coop_dual(*G.source));
    Comma L3 = laco(dual_functor(F, Xc, Yc), dual_functor(G, Zc, Yc));
    TwoFunctor k = comma_duality_iso(L1, co1, L3, true);
    CHECK_NOTHROW(validate(k));
    CHECK(is_bijective(k));
  }
}

TEST_CASE("mediating functors") {
  auto G = to_terminal(fix_G2(), fix_T());
  LpId r = lp_id(G);
  CHECK_NOTHROW(validate(r.J));
  CHECK(same_maps(compose(r.L.pZ, r.J), identity_functor(fix_G2())));
  CHECK_NOTHROW(validate(r.mu));
  auto pr = fix_prod(fix_G2(), fix_C2());
  Comma L = laco(pr.pr2, point(fix_C2(), 1));
  Pullback pb = pullback(pr.pr2, point(fix_C2(), 1));
  TwoFunctor i = pullback_inclusion(pb, L);
  CHECK_NOTHROW(validate(i));
  CHECK(same_maps(compose(L.pX, i), pb.p1));
  // unique mediator into laco(Id_T, Id_T)
  auto T = fix_T();
  Comma t = laco(identity_functor(T), identity_functor(T));
  Transformation lam;
  lam.source = identity_functor(T);
  lam.target = identity_functor(T);
  lam.flavor = Flavor::strict;
  lam.at0 = {0};
  lam.at1 = {0};
  TwoFunctor h = mediate(t, identity_functor(T), identity_functor(T), lam);
  CHECK_NOTHROW(validate(h));
  CHECK(mediator_unique(t, identity_functor(T), identity_functor(T), lam));
}

TEST_CASE("base change") {
  auto I = fix_I();
  TwoFunctor F = identity_functor(I);
  Comma L0 = laco(F, point(I, 0)), L1 = laco(F, point(I, 1));
  TwoFunctor id = base_change(L0, L0, I->id1(0));
  CHECK(same_maps(id, identity_functor(L0.cat)));
  TwoFunctor b = base_change(L0, L1, I->find_one("01"));
  CHECK_NOTHROW(validate(b));
  CHECK(L0.cat->num_objects() == 1);
  // functoriality along 1_1 ∘ (0→1)
  TwoFunctor b1 = base_change(L1, L1, I->id1(1));
  CHECK(same_maps(compose(b1, b), b));
  // on FIX_I chains of the linear order [2]
  auto I2 = std::make_shared<TwoCategory>(linear_order(2));
  TwoFunctor F2 = identity_functor(I2);
  Comma M0 = laco(F2, point(I2, 0)), M1 = laco(F2, point(I2, 1)), M2 = laco(F2, point(I2, 2));
  const int f01 = I2->find_one("01"), f12 = I2->find_one("12");
  CHECK(same_maps(base_change(M0, M2, I2->compose(f12, f01)), compose(base_change(M1, M2, f12), base_change(M0, M1, f01))));
}

TEST_CASE("strict fibers") {
  auto G = fix_G2();
  Fiber f = strict_fiber(identity_functor(G), 0);
  CHECK(identical(*f.cat, *f.cat));
  CHECK(f.cat->num_two_cells() == 1);
  auto pr = fix_prod(fix_G2(), fix_I());
  Fiber g = strict_fiber(pr.pr2, 1);
  CHECK(find_isomorphism(g.cat, G).has_value());
  CHECK_NOTHROW(validate(g.incl));
}

TEST_CASE("oplax initial and terminal objects") {
  for (int p = 0; p <= 3; ++p) {
    auto O = materialize_oriental(p);
    auto w = find_oplax_initial(*O);
    auto t = find_oplax_terminal(*O);
    REQUIRE(w.has_value());
    REQUIRE(t.has_value());
    CHECK(w->iota == 0);
    CHECK(t->iota == p);
    CHECK_NOTHROW(validate(witness_transformation(O, *w)));
  }
  auto T = find_oplax_initial(*fix_T());
  REQUIRE(T.has_value());
  CHECK(T->h0 == std::vector<int>{0});
  CHECK_FALSE(find_oplax_initial(discrete({"0", "1"})).has_value());
}

TEST_CASE("initial comparison maps") {
  auto O = materialize_oriental(2);
  auto w = find_oplax_initial(*O);
  REQUIRE(w.has_value());
  auto D = fix_I();
  // G: O(2) → [1], 0 ↦ 0, others ↦ 1
  TwoFunctor G{O, D, {}, {}, {}};
  for (int x = 0; x < O->num_objects(); ++x) G.on0.push_back(x == 0 ? 0 : 1);
  for (int f = 0; f < O->num_one_cells(); ++f) {
    const int s = G.on0[O->one(f).src], t = G.on0[O->one(f).tgt];
    G.on1.push_back(D->hom(s, t).at(0));
  }
  for (int a = 0; a < O->num_two_cells(); ++a) G.on2.push_back(D->id2(G.on1[O->two(a).src]));
  validate(G);
  TwoFunctor F = identity_functor(D);
  DiagramComma Ld = ldar(F, G);
  Comma L = laco(F, point(D, G.on0[w->iota]));
  InitialComparison c = lp_initial_maps(L, Ld, *w);
  CHECK_NOTHROW(validate(c.d));
  CHECK_NOTHROW(validate(c.e));
  CHECK(same_maps(compose(c.e, c.d), identity_functor(L.cat)));
  CHECK_NOTHROW(validate(c.unit));
}
