#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "oracles.hpp"
#include "support.hpp"

using namespace twocat;
using twocat::test::grp;
using twocat::test::hom;

namespace {

// Locally discrete 2-category of a finite poset given by `leq`.
TwoCatPtr poset(int n, const std::function<bool(int, int)>& leq) {
  TwoCategoryBuilder b;
  for (int x = 0; x < n; ++x) b.add_object(std::to_string(x));
  std::vector<std::vector<int>> e(n, std::vector<int>(n, -1));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x == y || leq(x, y)) e[x][y] = b.add_one_cell(std::to_string(x) + "<" + std::to_string(y), x, y);
  std::vector<int> t;
  for (int f = 0; f < b.num_one_cells(); ++f) t.push_back(b.add_two_cell("1_" + b.one(f).id, f, f));
  for (int x = 0; x < n; ++x) b.set_id1(x, e[x][x]);
  for (int f = 0; f < b.num_one_cells(); ++f) b.set_id2(f, t[f]);
  auto comp = [&](int g, int f) { return e[b.one(f).src][b.one(g).tgt]; };
  b.fill(comp, [&](int, int a) { return a; }, [&](int k, int a) { return t[comp(k, b.two(a).src)]; },
         [&](int a, int h) { return t[comp(b.two(a).src, h)]; });
  auto c = std::make_shared<TwoCategory>(b.finish());
  validate(*c);
  return c;
}

// Ranks and torsion of the order complex, computed on strict chains.
std::vector<FGAbGroup> order_complex_homology(int n, const std::function<bool(int, int)>& lt, int top) {
  std::vector<std::vector<std::vector<int>>> chains(top + 2);
  for (int x = 0; x < n; ++x) chains[0].push_back({x});
  for (int k = 1; k <= top + 1; ++k)
    for (auto& c : chains[k - 1])
      for (int y = 0; y < n; ++y)
        if (lt(c.back(), y)) {
          auto d = c;
          d.push_back(y);
          chains[k].push_back(d);
        }
  auto bd = [&](int k) {
    IntMatrix M(int(chains[k - 1].size()), int(chains[k].size()));
    for (int j = 0; j < int(chains[k].size()); ++j)
      for (int i = 0; i <= k; ++i) {
        auto f = chains[k][j];
        f.erase(f.begin() + i);
        const int r = int(std::find(chains[k - 1].begin(), chains[k - 1].end(), f) - chains[k - 1].begin());
        M(r, j) += (i % 2 ? -1 : 1);
      }
    return M;
  };
  std::vector<FGAbGroup> out;
  for (int k = 0; k <= top; ++k) {
    const int cycles = int(chains[k].size()) - (k == 0 ? 0 : rank(bd(k)));
    const auto f = invariant_factors(bd(k + 1));
    FGAbGroup g;
    g.rank = cycles - int(f.size());
    for (auto& v : f)
      if (v != 1) g.torsion.push_back(v);
    out.push_back(g);
  }
  return out;
}

}  // namespace

TEST_CASE("smith normal form small cases") {
  IntMatrix M = IntMatrix::from_rows({{2, 4}, {6, 8}});
  SmithForm s = smith_normal_form(M);
  CHECK(s.diag == std::vector<Int>{2, 4});
  CHECK(s.S * M * s.T == s.D);
  CHECK(s.Sinv * s.S == IntMatrix::identity(2));
  SmithForm z = smith_normal_form(IntMatrix(3, 2));
  CHECK(z.rank == 0);
  CHECK(z.diag.empty());
  SmithForm i = smith_normal_form(IntMatrix::identity(4));
  CHECK(i.diag == std::vector<Int>(4, 1));
  CHECK(rank(IntMatrix::from_rows({{1, 2, 3}, {2, 4, 6}})) == 1);
}

TEST_CASE("smith normal form against determinantal divisors") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix M = oracle::random_matrix(rng, trial);
    SmithForm s = smith_normal_form(M);
    CHECK(s.diag == oracle::divisor_factors(M));
    CHECK(s.S * M * s.T == s.D);
    CHECK(invariant_factors(M) == s.diag);
    SparseIntMatrix sp(6, 6);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        if (M(i, j) != 0) sp.add(i, j, M(i, j).get_si());
    CHECK(invariant_factors(sp) == s.diag);
    const IntMatrix K = kernel_basis(M);
    CHECK((M * K).is_zero());
    CHECK(K.cols() == 6 - s.rank);
  }
}

TEST_CASE("subquotients") {
  // 2Z ⊂ Z
  Subquotient q = subquotient(IntMatrix::identity(1), IntMatrix::from_rows({{2}}), 1);
  CHECK(q.group == grp(0, {2}));
  // Z² / (1,1)
  Subquotient r = subquotient(IntMatrix::identity(2), IntMatrix::from_rows({{1}, {1}}), 2);
  CHECK(r.group == grp(1));
  CHECK(cokernel(IntMatrix::from_rows({{2, 0}, {0, 3}}), 2) == grp(0, {6}));
  CHECK(direct_sum(grp(1, {2}), grp(0, {3})) == grp(1, {6}));
  CHECK(grp(1, {2}).str() == "Z ⊕ Z/2");
}

TEST_CASE("homology of the fixtures") {
  CHECK(hom(fix_T(), 2, 4) == std::vector<std::string>{"Z", "0", "0"});
  CHECK(hom(fix_I(), 2, 4) == std::vector<std::string>{"Z", "0", "0"});
  CHECK(hom(fix_G2(), 2, 4) == std::vector<std::string>{"Z", "0", "Z/2"});
  const Nerve nv = nerve(fix_G2(), 4);
  const ChainComplex C = chain_complex(nv.sset);
  CHECK(check_boundary_squared(C) == "");
  CHECK(homology(C, 2) == grp(0, {2}));
  Subquotient h = homology_with_generators(C, 2);
  CHECK(h.orders == std::vector<Int>{2});
}

TEST_CASE("truncation bound is enforced") {
  const Nerve nv = nerve(fix_G2(), 3);
  CHECK_NOTHROW(homology(nv.sset, 2));
  CHECK_THROWS_AS(homology(nv.sset, 3), AxiomError);
  CHECK_THROWS_AS(require_trusted(3, 3), AxiomError);
}

TEST_CASE("locally discrete categories match the order complex") {
  // crown: 0,1 < 2,3 is a circle; one more level makes a sphere
  auto crown = [](int x, int y) { return x < 2 && y >= 2; };
  auto sphere = [](int x, int y) { return x / 2 < y / 2; };
  auto chain = [](int x, int y) { return x < y; };
  struct Case {
    int n;
    std::function<bool(int, int)> lt;
  };
  for (const Case& c : {Case{4, crown}, Case{6, sphere}, Case{3, chain}}) {
    auto P = poset(c.n, c.lt);
    const auto expect = order_complex_homology(c.n, c.lt, 2);
    const Nerve nv = nerve(P, 4);
    for (int k = 0; k <= 2; ++k) CHECK(homology(nv.sset, k) == expect[k]);
  }
  CHECK(order_complex_homology(4, crown, 1)[1] == grp(1));
  CHECK(order_complex_homology(6, sphere, 2)[2] == grp(1));
}

TEST_CASE("constant and local coefficients") {
  const Nerve ni = nerve(fix_I(), 3);
  LocalCoeffSystem z3 = constant_system(ni.sset, grp(0, {3}));
  CHECK(check_functoriality(ni.sset, z3) == "");
  CHECK(is_morphism_inverting(ni.sset, z3));
  CHECK(homology_local(ni.sset, z3, 0) == grp(0, {3}));
  CHECK(homology_local(ni.sset, z3, 1).trivial());
  const Nerve ng = nerve(fix_G2(), 4);
  LocalCoeffSystem z = constant_system(ng.sset, grp(1));
  CHECK(homology_local(ng.sset, z, 2) == grp(0, {2}));

  // d_0 of the edge 0→1 acts by 2
  LocalCoeffSystem tw = constant_system(ni.sset, grp(1));
  int edge = -1;
  for (int x = 0; x < ni.sset.count[1]; ++x)
    if (!ni.sset.degenerate[1][x]) edge = x;
  REQUIRE(edge >= 0);
  tw.face[1][0][edge] = IntMatrix::from_rows({{2}});
  CHECK_FALSE(is_morphism_inverting(ni.sset, tw));
  CHECK(homology_local(ni.sset, tw, 0) == grp(1));
}

TEST_CASE("presented homology") {
  // Z --2--> Z --0--> 0 with relations 0, middle term Z/2
  IntMatrix d_out = IntMatrix::from_rows({{2}});
  IntMatrix d_in(0, 1), rel_prev(0, 0), rel(1, 0);
  CHECK(homology_presented(d_in, d_out, rel_prev, rel, 1) == grp(0, {2}));
}
