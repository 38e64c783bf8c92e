#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "oracles.hpp"
#include "support.hpp"
#include "twocat/pgm.hpp"

using namespace twocat;
using twocat::test::grp;

using oracle::cyclic;
using oracle::max2;

TEST_CASE("fixture PGMs validate") {
  for (auto S : {pgm_C2(), pgm_M2(), pgm_G2(), pgm_G2sat()}) {
    CHECK_NOTHROW(validate_pgm(*S));
    CHECK_NOTHROW(validate_action(self_action(S)));
    CHECK_NOTHROW(validate_action(trivial_action(S, fix_G2())));
    CHECK(bool(has_faithful_translations(*S)));
    CHECK(bool(is_strict_pgm_functor(identity_functor(S->S), *S, *S)));
  }
}

TEST_CASE("a non-associative table is rejected") {
  CHECK_THROWS_AS(validate_pgm(discrete_pgm({"0", "1", "2"}, {{0, 1, 2}, {1, 2, 1}, {2, 1, 1}}, 0)), AxiomError);
  CommMonoid M;
  M.names = {"0", "1"};
  M.add = {{0, 1}, {0, 1}};
  CHECK_THROWS_AS(validate(M), AxiomError);
}

TEST_CASE("json round trip") {
  for (auto S : {pgm_C2(), pgm_M2(), pgm_G2()}) {
    PGM T = pgm_from_json(to_json(*S), ".");
    CHECK(identical(*T.S, *S->S));
    CHECK(T.sum == S->sum);
    CHECK(T.beta == S->beta);
    CHECK(T.name == S->name);
    CHECK_NOTHROW(validate_pgm(T));
  }
}

TEST_CASE("predicates") {
  CHECK(bool(is_grouplike(*pgm_C2())));
  CHECK_FALSE(bool(is_grouplike(*pgm_M2())));
  CHECK(bool(is_grouplike(*pgm_G2())));
  CHECK(bool(is_two_groupoid(*fix_G2())));
  CHECK(bool(is_two_groupoid(*fix_C2())));
  Verdict v = is_two_groupoid(*fix_G2sat());
  CHECK_FALSE(bool(v));
  CHECK(!v.witness.empty());
  CHECK_FALSE(bool(is_two_groupoid(*fix_I())));
  CHECK(equivalence_inverse(*fix_G2(), 0) == std::optional<int>(0));
  CHECK_FALSE(equivalence_inverse(*fix_I(), fix_I()->find_one("01")).has_value());
}

TEST_CASE("pi0 monoids") {
  CommMonoid c = pi0_monoid(*pgm_C2());
  CHECK(c.size() == 2);
  CHECK(c.is_group());
  CommMonoid m = pi0_monoid(*pgm_M2());
  CHECK(m.size() == 2);
  CHECK_FALSE(m.is_group());
  CHECK(m.add[1][1] == 1);
  CHECK(pi0(*fix_I()).count() == 1);
  CHECK(pi0(*fix_C2()).count() == 2);
}

TEST_CASE("localization examples") {
  const CommMonoid M = max2();
  // 1 acts by zero: everything dies
  CHECK(localize_module(grp(1), {IntMatrix::identity(1), IntMatrix(1, 1)}, M).trivial());
  // 1 acts by the identity
  CHECK(localize_module(grp(1, {2}), {IntMatrix::identity(2), IntMatrix::identity(2)}, M) == grp(1, {2}));
  // projection onto the first factor
  CHECK(localize_module(grp(2), {IntMatrix::identity(2), IntMatrix::from_rows({{1, 0}, {0, 0}})}, M) == grp(1));
  // a group acting by −1 changes nothing
  CHECK(localize_module(grp(1), {IntMatrix::identity(1), IntMatrix::from_rows({{-1}})}, cyclic(2)) == grp(1));
  const FGAbGroup A = grp(1, {2, 4});
  CHECK(cokernel(canonical_relations(A), 3) == A);
}

TEST_CASE("localization against the stable image") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 50; ++trial) {
    const auto [g, rel, acts, M] = oracle::random_localization(rng, trial);
    const Localization L = localize(rel, g, acts, M);
    CHECK(L.group == oracle::stable_image(acts, rel, g));
    // localizing again changes nothing
    CHECK(localize(L.kernel, g, acts, M).group == L.group);
  }
}

TEST_CASE("localization commutes with direct sums") {
  const CommMonoid M = max2();
  const IntMatrix pa = IntMatrix::from_rows({{1, 1}, {0, 0}});
  const IntMatrix pb = IntMatrix::from_rows({{0}});
  const FGAbGroup a = localize(IntMatrix(2, 0), 2, {IntMatrix::identity(2), pa}, M).group;
  const FGAbGroup b = localize(IntMatrix(1, 0), 1, {IntMatrix::identity(1), pb}, M).group;
  IntMatrix s(3, 3);
  s(0, 0) = 1;
  s(0, 1) = 1;
  const FGAbGroup ab = localize(IntMatrix(3, 0), 3, {IntMatrix::identity(3), s}, M).group;
  CHECK(ab == direct_sum(a, b));
  CHECK(ab == grp(1));
}
