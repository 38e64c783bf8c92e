#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"
#include "twocat/json_io.hpp"

using namespace twocat;

namespace {

// interchange by brute force, independent of validate()
bool interchange_holds(const TwoCategory& c) {
  for (int a = 0; a < c.num_two_cells(); ++a)
    for (int b = 0; b < c.num_two_cells(); ++b) {
      if (c.tgt0(a) != c.src0(b)) continue;
      const int f = c.two(a).src, g = c.two(a).tgt, f2 = c.two(b).src, g2 = c.two(b).tgt;
      const int left = c.vcompose(c.whisker_l(g2, a), c.whisker_r(b, f));
      const int right = c.vcompose(c.whisker_r(b, g), c.whisker_l(f2, a));
      if (left != right) return false;
    }
  return true;
}

// associativity of vcomp over every composable triple
bool vassoc(const TwoCategory& c) {
  for (int a = 0; a < c.num_two_cells(); ++a)
    for (int b : c.two_from(c.two(a).tgt))
      for (int d : c.two_from(c.two(b).tgt))
        if (c.vcompose(d, c.vcompose(b, a)) != c.vcompose(c.vcompose(d, b), a)) return false;
  return true;
}

}  // namespace

TEST_CASE("fixtures validate") {
  for (auto c : {fix_T(), fix_I(), fix_G2(), fix_G2sat(), fix_C2(), fix_M2(), fix_prod(fix_G2(), fix_C2()).cat}) {
    CHECK_NOTHROW(validate(*c));
    CHECK(interchange_holds(*c));
    CHECK(vassoc(*c));
  }
}

TEST_CASE("G2 and G2sat composition tables") {
  auto g = fix_G2(), s = fix_G2sat();
  CHECK(g->num_two_cells() == 2);
  CHECK(g->vcompose(1, 1) == 0);
  CHECK(s->vcompose(1, 1) == 1);
  CHECK(g->invertible2(1));
  CHECK_FALSE(s->invertible2(1));
}

TEST_CASE("partial comp1 table is rejected") {
  json j = to_json(*fix_I());
  json kept = json::array();
  for (auto& e : j["comp1"])
    if (!(e["after"] == "01" && e["before"] == "1_0")) kept.push_back(e);
  REQUIRE(kept.size() + 1 == j["comp1"].size());
  j["comp1"] = kept;
  CHECK_THROWS(two_category_from_json(j));
}

TEST_CASE("dangling identifiers and duplicates") {
  json j = to_json(*fix_G2());
  j["two_cells"][1]["src"] = "nope";
  CHECK_THROWS_AS(two_category_from_json(j), InputError);
  json k = to_json(*fix_G2());
  k["objects"].push_back("*");
  CHECK_THROWS_AS(two_category_from_json(k), InputError);
}

TEST_CASE("a broken vcomp is an axiom failure") {
  json j = to_json(*fix_G2());
  for (auto& e : j["vcomp"])
    if (e["after"] == "1" && e["before"] == "1") e["result"] = "1";
  for (auto& e : j["vcomp"])
    if (e["after"] == "0" && e["before"] == "1") e["result"] = "0";
  TwoCategory c = two_category_from_json(j);
  CHECK_THROWS_AS(validate(c), AxiomError);
}

TEST_CASE("json round trip") {
  for (auto c : {fix_I(), fix_G2(), fix_prod(fix_G2(), fix_I()).cat}) {
    TwoCategory d = two_category_from_json(to_json(*c));
    CHECK(identical(*c, d));
  }
}

TEST_CASE("functors") {
  auto g = fix_G2();
  CHECK_NOTHROW(validate(identity_functor(g)));
  CHECK_NOTHROW(validate(to_terminal(g, fix_T())));
  TwoFunctor bad = identity_functor(g);
  bad.on2 = {1, 1};
  CHECK_THROWS_AS(validate(bad), AxiomError);
  const TwoFunctor c = compose(identity_functor(g), to_terminal(g, fix_T()));
  CHECK_NOTHROW(validate(c));
}

TEST_CASE("transformation unit axiom forces the identity on G2") {
  auto g = fix_G2();
  Transformation t;
  t.source = identity_functor(g);
  t.target = identity_functor(g);
  t.at0 = {0};
  t.at1 = {1};
  CHECK_THROWS_AS(validate(t), AxiomError);
  t.at1 = {0};
  t.flavor = Flavor::strict;
  CHECK_NOTHROW(validate(t));
}

TEST_CASE("modification on G2") {
  auto g = fix_G2();
  Transformation t;
  t.source = identity_functor(g);
  t.target = identity_functor(g);
  t.at0 = {0};
  t.at1 = {0};
  Modification m{t, t, {1}};
  CHECK_NOTHROW(validate(m));
}

TEST_CASE("duals") {
  auto T = fix_T(), I = fix_I(), G = fix_G2();
  CHECK(identical(op_dual(*T), *T));
  TwoCategory oi = op_dual(*I);
  const int f = oi.find_one("01");
  REQUIRE(f >= 0);
  CHECK(oi.object(oi.one(f).src) == "1");
  CHECK(oi.object(oi.one(f).tgt) == "0");
  for (auto c : {T, I, G, fix_G2sat()}) {
    CHECK(identical(op_dual(op_dual(*c)), *c));
    CHECK(identical(co_dual(co_dual(*c)), *c));
    CHECK_NOTHROW(validate(coop_dual(*c)));
  }
  auto cg = std::make_shared<TwoCategory>(co_dual(*G));
  auto iso = find_isomorphism(cg, G);
  REQUIRE(iso.has_value());
  CHECK_NOTHROW(validate(*iso));
  CHECK(is_bijective(*iso));
}

TEST_CASE("normal pseudofunctor with trivial constraints") {
  NormalPseudofunctor F(identity_functor(fix_G2()));
  CHECK_NOTHROW(validate(F));
  F.constraints[pair_key(0, 0)] = 1;
  CHECK_THROWS_AS(validate(F), AxiomError);  // unit axiom: F₂(1,1) must be the identity
}
