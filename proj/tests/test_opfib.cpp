#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"
#include "twocat/opfib.hpp"

using namespace twocat;

namespace {

// Literal reading of the cartesian property, cell by cell.
bool cartesian_oracle(const TwoFunctor& P, int gamma) {
  const TwoCategory &C = *P.source, &D = *P.target;
  const int g = C.two(gamma).src, h = C.two(gamma).tgt;
  for (int k : C.hom(C.one(g).src, C.one(g).tgt))
    for (int psi : C.hom2(k, h))
      for (int phi : D.hom2(P.on1[k], P.on1[g])) {
        if (P.on2[psi] != D.vcompose(P.on2[gamma], phi)) continue;
        int n = 0;
        for (int c : C.hom2(k, g))
          if (P.on2[c] == phi && C.vcompose(gamma, c) == psi) ++n;
        if (n != 1) return false;
      }
  return true;
}

std::vector<TwoFunctor> functors() {
  auto T = fix_T();
  auto GC = fix_prod(fix_G2(), fix_C2());
  auto GI = fix_prod(fix_G2(), fix_I());
  auto SI = fix_prod(fix_G2sat(), fix_I());
  return {identity_functor(fix_G2()), identity_functor(fix_G2sat()), to_terminal(fix_G2(), T),
          to_terminal(fix_G2sat(), T), GC.pr2, GI.pr2, GI.pr1, SI.pr2, SI.pr1};
}

}  // namespace

TEST_CASE("cartesian 2-cells agree with the literal definition") {
  for (const auto& P : functors())
    for (int a = 0; a < P.source->num_two_cells(); ++a) {
      CHECK(cartesian(P, a) == cartesian_oracle(P, a));
      CHECK(bool(is_cartesian_2cell(P, a)) == cartesian(P, a));
    }
}

TEST_CASE("identity functors: every 2-cell is cartesian") {
  for (auto c : {fix_G2(), fix_G2sat(), fix_C2()}) {
    TwoFunctor P = identity_functor(c);
    for (int a = 0; a < c->num_two_cells(); ++a) CHECK(cartesian(P, a));
    OpfibrationCertificate cert = check_opfibration(P);
    CHECK(bool(cert));
    CHECK(verify_certificate(cert) == "");
  }
}

TEST_CASE("cartesian 2-cells over the point") {
  OpfibrationCertificate g = check_opfibration(to_terminal(fix_G2(), fix_T()));
  CHECK(bool(g));
  CHECK(verify_certificate(g) == "");
  for (int a = 0; a < 2; ++a) CHECK(g.is_cartesian[a]);
  OpfibrationCertificate s = check_opfibration(to_terminal(fix_G2sat(), fix_T()));
  // identity lifts still exist, only the idempotent fails uniqueness
  CHECK(bool(s));
  CHECK(s.is_cartesian[0]);
  CHECK_FALSE(s.is_cartesian[1]);
  CartesianCertificate c = is_cartesian_2cell(to_terminal(fix_G2sat(), fix_T()), 1);
  REQUIRE(c.failure.has_value());
}

TEST_CASE("projections are opfibrations and the lifts lie over their targets") {
  auto GI = fix_prod(fix_G2(), fix_I());
  for (const TwoFunctor& P : {GI.pr2, GI.pr1, fix_prod(fix_G2(), fix_C2()).pr2}) {
    OpfibrationCertificate cert = check_opfibration(P);
    REQUIRE(bool(cert));
    CHECK(verify_certificate(cert) == "");
    const TwoCategory& C = *P.source;
    for (int x = 0; x < C.num_objects(); ++x)
      for (int f : P.target->out_one(P.on0[x])) {
        const int fh = cert.opcart_lift(x, f);
        CHECK(C.one(fh).src == x);
        CHECK(P.on1[fh] == f);
        CHECK(bool(is_opcartesian_1cell(P, fh)));
      }
  }
}

TEST_CASE("a functor missing opcartesian lifts") {
  auto D2 = std::make_shared<TwoCategory>(discrete({"0", "1"}));
  TwoFunctor di{D2, fix_I(), {0, 1}, {0, 2}, {0, 2}};
  validate(di);
  OpfibrationCertificate cert = check_opfibration(di);
  REQUIRE_FALSE(bool(cert));
  CHECK(cert.failure->clause == "opcartesian-lift-missing");
}

TEST_CASE("opcartesian lifts along identities") {
  TwoFunctor P = to_terminal(fix_G2(), fix_T());
  const int h = P.source->id1(0);
  auto lifts = opcart_lifts(P, h, h, 0, 0);
  CHECK(!lifts.empty());
  auto c = choose_lift(P, h, h, 0, 0);
  REQUIRE(c.has_value());
  CHECK(P.source->is_id2(c->a1));
  CHECK(P.source->is_id2(c->a2));
}

TEST_CASE("comparison retraction") {
  auto GC = fix_prod(fix_G2(), fix_C2());
  OpfibrationCertificate cert = check_opfibration(GC.pr2);
  REQUIRE(bool(cert));
  for (int z = 0; z < 2; ++z) {
    ComparisonH c = comparison_H(GC.pr2, point(GC.pr2.target, z), cert);
    CHECK_NOTHROW(validate(c.H));
    CHECK_NOTHROW(validate(c.i));
    CHECK_NOTHROW(validate(c.eta));
    CHECK(retraction_is_identity(c));
  }
  auto I = fix_I();
  TwoFunctor id = identity_functor(I);
  OpfibrationCertificate ci = check_opfibration(id);
  REQUIRE(bool(ci));
  ComparisonH c = comparison_H(id, point(I, 1), ci);
  CHECK(c.L.cat->num_objects() == 2);
  CHECK(c.pb.cat->num_objects() == 1);
  CHECK_NOTHROW(validate(c.H));
  CHECK(retraction_is_identity(c));
}
