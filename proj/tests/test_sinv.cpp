#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"
#include "twocat/sinv.hpp"
#include "twocat/specseq.hpp"

using namespace twocat;
using twocat::test::grp;
using twocat::test::hom;

TEST_CASE("sizes of S⁻¹S") {
  auto C2 = pgm_C2();
  SInv c = s_inv_x(C2, self_action(C2));
  CHECK_NOTHROW(validate(*c.cat));
  CHECK(c.cat->num_objects() == 4);
  CHECK(c.cat->num_one_cells() == 8);
  CHECK(c.cat->num_two_cells() == 8);
  // (a,x) → (b,y) needs s with s+a = b and s+x = y
  for (int a = 0; a < 2; ++a)
    for (int x = 0; x < 2; ++x)
      for (int b = 0; b < 2; ++b)
        for (int y = 0; y < 2; ++y)
          CHECK(c.cat->hom(c.find_obj(a, x), c.find_obj(b, y)).size() == ((a + b + x + y) % 2 == 0 ? 1u : 0u));
  CHECK(pi0(*c.cat).count() == 2);
  CHECK(c.congruence_checks > 0);

  SInv m = s_inv_x(pgm_M2(), self_action(pgm_M2()));
  CHECK(m.cat->num_objects() == 4);
  CHECK(pi0(*m.cat).count() == 1);

  SInv g = s_inv_x(pgm_G2(), self_action(pgm_G2()));
  CHECK(find_isomorphism(g.cat, fix_G2()).has_value());
  CHECK_NOTHROW(validate(g.i));
}

TEST_CASE("S⁻¹ of the point") {
  SInv pc = s_inv_point(pgm_C2());
  CHECK(pc.cat->num_objects() == 2);
  CHECK(pc.cat->num_one_cells() == 4);
  CHECK(hom(pc.cat, 1, 3) == std::vector<std::string>{"Z", "0"});
  PointContraction k = point_contraction(pc);
  CHECK(k.hom_terminal);
  CHECK_NOTHROW(validate(k.lam));
  SInv pm = s_inv_point(pgm_M2());
  const Nerve nv = nerve(pm.cat, 3);
  CHECK(homology_local(nv.sset, constant_system(nv.sset, grp(1)), 0) == grp(1));
  CHECK(point_contraction(pm).hom_terminal);
}

TEST_CASE("the induced action and inverses") {
  for (auto S : {pgm_C2(), pgm_M2(), pgm_G2()}) {
    SInv X = s_inv_x(S, self_action(S));
    PGMAction xi = xi_action(X);
    CHECK_NOTHROW(validate_action(xi));
    CHECK(same_maps(xi.left[S->unit], identity_functor(X.cat)));
    CHECK(xi_commutes_with_inverse(X, xi));
    for (int s = 0; s < S->S->num_objects(); ++s) {
      CHECK_NOTHROW(validate(s_inverse(X, s)));
      CHECK_NOTHROW(validate(T_transformation(X, xi, s)));
    }
  }
  SInv X = s_inv_x(pgm_C2(), self_action(pgm_C2()));
  PGMAction xi = xi_action(X);
  // 1 moves (a,x) to (a,1+x)
  for (int a = 0; a < 2; ++a)
    for (int x = 0; x < 2; ++x) CHECK(xi.act[1][X.find_obj(a, x)] == X.find_obj(a, 1 - x));
}

TEST_CASE("S⁻¹S is a PGM with invertible translations") {
  for (auto S : {pgm_C2(), pgm_M2()}) {
    SInv X = s_inv_x(S, self_action(S));
    PGM Q = pgm_on_sinvs(X);
    CHECK_NOTHROW(validate_pgm(Q));
    CHECK(bool(translations_invert_homology(Q, 3)));
    CHECK(bool(is_strict_pgm_functor(X.i, *S, Q)));
  }
  auto S2 = pgm_C2();
  SInv C = s_inv_x(S2, self_action(S2));
  CHECK(bool(is_grouplike(pgm_on_sinvs(C))));
}

TEST_CASE("invertible 2-cells of S⁻¹S") {
  for (auto S : {pgm_C2(), pgm_M2(), pgm_G2()}) {
    SInv X = s_inv_x(S, self_action(S));
    for (int k = 0; k < X.cat->num_two_cells(); ++k) {
      IsoCriterion c = is_sinv_iso(X, k);
      CHECK(c.criterion == c.brute);
    }
  }
}

TEST_CASE("the projection to S⁻¹ of the point") {
  for (auto S : {pgm_C2(), pgm_M2()}) {
    RhoReport R = rho_opfib_check(S, self_action(S));
    CHECK(bool(R.cert));
    CHECK(R.preferred_failure == "");
    CHECK(R.preferred_checked > 0);
    CHECK(check_preferred_lifts(R.data) > 0);
    for (int a = 0; a < S->S->num_objects(); ++a) CHECK(fiber_iso_check(R.data, a) == "");
    for (int k = 0; k < R.data.X.cat->num_two_cells(); ++k) CHECK(R.cert.is_cartesian[k]);
  }
  CHECK_THROWS_AS(check_rho_hypotheses(*pgm_C2(), trivial_action(pgm_C2(), fix_G2sat())), AxiomError);
  CHECK_THROWS_AS(rho_opfib_check(pgm_C2(), trivial_action(pgm_C2(), fix_G2sat())), AxiomError);
}

TEST_CASE("fiber homology of the projection") {
  RhoReport R = rho_opfib_check(pgm_M2(), self_action(pgm_M2()));
  REQUIRE(bool(R.cert));
  for (auto [p, q] : std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {0, 1}})
    CHECK(e2_vs_local(R.data.rho, R.cert, p, q));
  RhoReport C = rho_opfib_check(pgm_C2(), self_action(pgm_C2()));
  REQUIRE(bool(C.cert));
  FiberSystem fs = fiber_coeff_system(C.data.rho, C.cert, 0, 2);
  CHECK(check_functoriality(fs.ND.sset, fs.L) == "");
  CHECK(is_morphism_inverting(fs.ND.sset, fs.L));
  for (auto& g : fs.fiber_homology) CHECK(g == grp(2));
}

TEST_CASE("group completion") {
  GCReport c0 = group_completion_check(pgm_C2(), self_action(pgm_C2()), 0, 4);
  CHECK(c0.HX == grp(2));
  CHECK(c0.localized == grp(2));
  CHECK(c0.HSinv == grp(2));
  CHECK(c0.representative_independent);
  CHECK(c0.iso);
  GCReport c1 = group_completion_check(pgm_C2(), self_action(pgm_C2()), 1, 4);
  CHECK(c1.HSinv.trivial());
  CHECK(c1.iso);
  GCReport m0 = group_completion_check(pgm_M2(), self_action(pgm_M2()), 0, 4);
  CHECK(m0.HX == grp(2));
  CHECK(m0.localized == grp(1));
  CHECK(m0.HSinv == grp(1));
  CHECK(m0.iso);
  GCReport g2 = group_completion_check(pgm_G2(), self_action(pgm_G2()), 2, 4);
  CHECK(g2.HX == grp(0, {2}));
  CHECK(g2.HSinv == grp(0, {2}));
  CHECK(g2.iso);
  CHECK_THROWS_AS(group_completion_check(pgm_G2(), self_action(pgm_G2()), 4, 4), AxiomError);
}
