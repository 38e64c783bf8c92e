#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"
#include "twocat/specseq.hpp"

using namespace twocat;
using twocat::test::grp;

TEST_CASE("level sizes") {
  // locally discrete: a triple is a monotone map [p+q+1] → [1]
  Bisimplicial I = build_B(identity_functor(fix_I()), 2, 2, 3);
  for (int p = 0; p <= 2; ++p)
    for (int q = 0; q <= 2; ++q)
      if (I.has(p, q)) CHECK(I.at(p, q).size() == p + q + 3);
  Bisimplicial T = build_B(identity_functor(fix_T()), 2, 2, 3);
  for (int p = 0; p <= 2; ++p)
    for (int q = 0; q <= 2; ++q)
      if (T.has(p, q)) CHECK(T.at(p, q).size() == 1);
  // over a discrete base δ is constant, so only ω varies
  auto pr = fix_prod(fix_G2(), fix_C2());
  Bisimplicial B = build_B(pr.pr2, 3, 3, 3);
  const Nerve NC = nerve(pr.cat, 3);
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q)
      if (B.has(p, q)) CHECK(B.at(p, q).size() == NC.sset.count[q]);
  CHECK_FALSE(B.has(2, 2));
}

TEST_CASE("bisimplicial identities and filtrations") {
  auto pr = fix_prod(fix_G2(), fix_C2());
  for (const TwoFunctor& F : {identity_functor(fix_T()), identity_functor(fix_I()), pr.pr2}) {
    Bisimplicial B = build_B(F, 2, 2, 3);
    CHECK(check_bisimplicial(B) == "");
    CHECK(filtration_check_p(B, 1, 0, 1) == "");
    CHECK(filtration_check_q(B, 1, 0, 1) == "");
    CHECK(collapse_check(B, 0));
    CHECK(collapse_check(B, 1));
    CHECK(check_simplicial_identities(column(B, 0)) == "");
    CHECK(check_simplicial_identities(row(B, 1)) == "");
  }
}

TEST_CASE("totalization recovers the homology of the source") {
  auto pr = fix_prod(fix_G2(), fix_C2());
  Bisimplicial B = build_B(pr.pr2, 3, 3, 3);
  REQUIRE(tot_trusted_max(B) == 2);
  const auto h = twocat::test::hom(pr.cat, 2, 4);
  for (int n = 0; n <= 2; ++n) CHECK(totalization_homology(B, n).str() == h[n]);
  CHECK(totalization_homology(B, 2) == grp(0, {2, 2}));
  Bisimplicial I = build_B(identity_functor(fix_I()), 2, 2, 3);
  CHECK(totalization_homology(I, 0) == grp(1));
  CHECK(totalization_homology(I, 1).trivial());
}

TEST_CASE("pages") {
  auto pr = fix_prod(fix_G2(), fix_C2());
  SSPages S = pages(build_B(pr.pr2, 3, 3, 3));
  CHECK(S.d1_squared_zero);
  CHECK(S.E2.at({0, 0}) == grp(2));
  CHECK(S.E2.at({1, 0}).trivial());
  CHECK(S.E2.at({0, 1}).trivial());
  CHECK(S.e2_trusted(0, 0));
  CHECK_FALSE(S.e2_trusted(2, 0));
  SSPages I = pages(build_B(identity_functor(fix_I()), 2, 2, 3));
  CHECK(I.E2.at({0, 0}) == grp(1));
}

TEST_CASE("fiber coefficients and the E2 comparison") {
  auto pr = fix_prod(fix_G2(), fix_C2());
  OpfibrationCertificate c = check_opfibration(pr.pr2);
  REQUIRE(bool(c));
  CHECK(check_base_change_identification(pr.pr2, c, 2) == "");
  FiberSystem fs = fiber_coeff_system(pr.pr2, c, 0, 2);
  CHECK(check_functoriality(fs.ND.sset, fs.L) == "");
  for (auto& g : fs.fiber_homology) CHECK(g == grp(1));
  FiberSystem f1 = fiber_coeff_system(pr.pr2, c, 1, 2);
  for (auto& g : f1.fiber_homology) CHECK(g.trivial());
  for (int p = 0; p <= 1; ++p)
    for (int q = 0; q <= 1; ++q) CHECK(e2_vs_local(pr.pr2, c, p, q));
  auto GI = fix_prod(fix_G2(), fix_I());
  OpfibrationCertificate ci = check_opfibration(GI.pr2);
  REQUIRE(bool(ci));
  CHECK(check_base_change_identification(GI.pr2, ci, 2) == "");
  CHECK(e2_vs_local(GI.pr2, ci, 0, 0));
  CHECK(e2_vs_local(GI.pr2, ci, 1, 0));
}
