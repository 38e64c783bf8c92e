#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "oracles.hpp"
#include "support.hpp"

using namespace twocat;

namespace {

long binom(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("simplex counts of G2 against cocycles") {
  const Nerve nv = nerve(fix_G2(), 4);
  for (int p = 0; p <= 4; ++p) CHECK(long(nv.simplices[p].size()) == oracle::z2_cocycles(p));
  CHECK(nv.sset.count == std::vector<int>{1, 1, 2, 8, 64});
}

TEST_CASE("locally discrete posets give monotone maps") {
  for (int n : {1, 2}) {
    auto L = std::make_shared<TwoCategory>(linear_order(n));
    const Nerve nv = nerve(L, 3);
    for (int p = 0; p <= 3; ++p) CHECK(long(nv.simplices[p].size()) == binom(n + p + 1, n));
  }
  const Nerve ni = nerve(fix_I(), 3);
  CHECK(ni.sset.count == std::vector<int>{2, 3, 4, 5});
}

TEST_CASE("terminal category") {
  const Nerve nv = nerve(fix_T(), 4);
  for (int p = 0; p <= 4; ++p) CHECK(nv.sset.count[p] == 1);
  for (int p = 1; p <= 4; ++p) CHECK(nv.sset.degenerate[p][0]);
}

TEST_CASE("simplicial identities hold") {
  for (auto c : {fix_T(), fix_I(), fix_G2(), fix_G2sat(), fix_C2(), fix_M2()}) {
    const Nerve nv = nerve(c, 4);
    CHECK(check_simplicial_identities(nv.sset) == "");
  }
}

TEST_CASE("faces are restrictions along coface maps") {
  auto G = fix_G2sat();
  const Nerve nv = nerve(G, 3);
  for (int p = 1; p <= 3; ++p)
    for (int x = 0; x < nv.sset.count[p]; ++x)
      for (int i = 0; i <= p; ++i) {
        std::vector<int> phi;
        for (int k = 0; k <= p; ++k)
          if (k != i) phi.push_back(k);
        CHECK(nv.find(p - 1, pull_simplex(*G, nv.simplices[p][x], p, phi)) == nv.sset.face[p][i][x]);
      }
}

TEST_CASE("orientals") {
  auto O2 = materialize_oriental(2);
  CHECK_NOTHROW(validate(*O2));
  CHECK(O2->num_objects() == 3);
  // identities, three edges and the path 0→1→2
  CHECK(O2->num_one_cells() == 7);
  CHECK(O2->num_two_cells() == 8);
  auto O3 = materialize_oriental(3);
  CHECK_NOTHROW(validate(*O3));
  // Hom(0,3) has paths indexed by the subsets of {1,2}
  CHECK(O3->hom(0, 3).size() == 4);
  CHECK_THROWS_AS(materialize_oriental(5), OrientalError);
  // a simplex of G2 is a functor out of O(p)
  const Nerve nv = nerve(fix_G2(), 3);
  auto P = materialize_oriental(3);
  for (const auto& x : nv.simplices[3]) CHECK_NOTHROW(validate(simplex_functor(P, nv.cat, x)));
  TwoFunctor d = oriental_map(materialize_oriental(1), O2, {0, 2});
  CHECK_NOTHROW(validate(d));
}

TEST_CASE("nerve maps commute with faces and degeneracies") {
  auto pr = fix_prod(fix_G2(), fix_C2());
  const Nerve A = nerve(pr.cat, 3), B = nerve(pr.pr2.target, 3);
  const auto m = nerve_map(A, B, NormalPseudofunctor(pr.pr2));
  for (int n = 1; n <= 3; ++n)
    for (int x = 0; x < A.sset.count[n]; ++x)
      for (int i = 0; i <= n; ++i) CHECK(m[n - 1][A.sset.face[n][i][x]] == B.sset.face[n][i][m[n][x]]);
  for (int n = 0; n < 3; ++n)
    for (int x = 0; x < A.sset.count[n]; ++x)
      for (int i = 0; i <= n; ++i) CHECK(m[n + 1][A.sset.degen[n][i][x]] == B.sset.degen[n][i][m[n][x]]);
}

TEST_CASE("is_simplex rejects a broken tetrahedron") {
  auto G = fix_G2();
  const Nerve nv = nerve(G, 3);
  Simplex x = nv.simplices[3][0];
  const auto& L = layout(3);
  x[L.tri(0, 1, 2)] = 1;  // flip a single face
  CHECK_FALSE(is_simplex(*G, 3, x));
}
