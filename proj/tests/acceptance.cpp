// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <iostream>
#include <sstream>

#include "oracles.hpp"
#include "twocat/fixtures.hpp"
#include "twocat/homology.hpp"
#include "twocat/sinv.hpp"
#include "twocat/specseq.hpp"

using namespace twocat;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;
  void require(bool c, const std::string& what) {
    if (!c && ok) note << "failed: " << what << "; ";
    ok = ok && c;
  }
};

int failures = 0;

void criterion(int n, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.note << "exception: " << e.what() << "; ";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.ok) ++failures;
  std::cout << (o.ok ? "PASS" : "FAIL") << " " << n << " " << title << " (" << std::fixed;
  std::cout.precision(1);
  std::cout << secs << "s) " << o.note.str() << std::endl;
}

std::vector<FGAbGroup> H(TwoCatPtr c, int top, int N) {
  const Nerve nv = nerve(c, N);
  const ChainComplex C = chain_complex(nv.sset);
  std::vector<FGAbGroup> out;
  for (int k = 0; k <= top; ++k) out.push_back(homology(C, k));
  return out;
}

std::string show(const std::vector<FGAbGroup>& h) {
  std::string s;
  for (auto& g : h) s += (s.empty() ? "" : ",") + g.str();
  return s;
}

FGAbGroup Z(int r, std::vector<long> t = {}) {
  FGAbGroup g;
  g.rank = r;
  for (long v : t) g.torsion.push_back(Int(v));
  return g;
}

struct Opfib {
  std::string name;
  TwoFunctor P;
  OpfibrationCertificate cert;
};

std::vector<Opfib> opfibration_fixtures() {
  std::vector<Opfib> out;
  auto add = [&](std::string n, TwoFunctor P) {
    OpfibrationCertificate c = check_opfibration(P);
    out.push_back({std::move(n), std::move(P), std::move(c)});
  };
  add("Id_I", identity_functor(fix_I()));
  add("Id_G2", identity_functor(fix_G2()));
  add("pr2 G2xC2", fix_prod(fix_G2(), fix_C2()).pr2);
  for (auto [n, S] : {std::pair{"rho C2", pgm_C2()}, std::pair{"rho G2", pgm_G2()}}) {
    RhoReport R = rho_opfib_check(S, self_action(S));
    out.push_back({n, R.data.rho, R.cert});
  }
  add("pr2 G2xI", fix_prod(fix_G2(), fix_I()).pr2);
  add("Id_T", identity_functor(fix_T()));
  return out;
}

}  // namespace

int main() {
  const auto fibs = opfibration_fixtures();

  criterion(1, "axiom suites", [](Outcome& o) {
    int n = 0;
    for (auto c : {fix_T(), fix_I(), fix_G2(), fix_G2sat(), fix_C2(), fix_M2(), fix_prod(fix_G2(), fix_C2()).cat,
                   fix_prod(fix_G2(), fix_I()).cat}) {
      validate(*c);
      ++n;
    }
    for (auto S : {pgm_C2(), pgm_M2(), pgm_G2(), pgm_G2sat()}) {
      validate_pgm(*S);
      validate_action(self_action(S));
      ++n;
    }
    auto T = fix_T(), I = fix_I(), G = fix_G2();
    auto pr = fix_prod(G, fix_C2());
    std::vector<std::pair<TwoFunctor, TwoFunctor>> cs = {
        {identity_functor(T), identity_functor(T)},        {identity_functor(I), point(I, 1)},
        {identity_functor(G), identity_functor(G)},        {pr.pr2, point(pr.pr2.target, 0)},
        {to_terminal(fix_G2sat(), T), to_terminal(G, T)}, {identity_functor(I), identity_functor(I)}};
    for (auto& [F, K] : cs) {
      validate(*laco(F, K).cat);
      validate(*oplaco(F, K).cat);
      validate(*pullback(F, K).cat);
      n += 3;
    }
    for (auto S : {pgm_C2(), pgm_M2(), pgm_G2(), pgm_G2sat()}) {
      validate(*s_inv_x(S, self_action(S)).cat);
      validate(*s_inv_point(S).cat);
      n += 2;
    }
    o.note << n << " structures validated";
  });

  criterion(2, "pullback and lax comma homology agree over points (N=4, n<=2)", [&](Outcome& o) {
    int n = 0;
    for (const auto& f : fibs) {
      o.require(bool(f.cert), f.name + " certified");
      for (int x = 0; x < f.P.target->num_objects(); ++x) {
        const TwoFunctor pt = point(f.P.target, x);
        const auto a = H(pullback(f.P, pt).cat, 2, 4), b = H(laco(f.P, pt).cat, 2, 4);
        o.require(a == b, f.name + " over " + f.P.target->object(x) + ": " + show(a) + " vs " + show(b));
        ++n;
      }
    }
    o.note << n << " (fixture, point) pairs";
  });

  criterion(3, "comparison pseudofunctor on pr2 G2xC2", [&](Outcome& o) {
    const Opfib& f = fibs[2];
    for (int x = 0; x < f.P.target->num_objects(); ++x) {
      ComparisonH c = comparison_H(f.P, point(f.P.target, x), f.cert);
      validate(c.H);
      validate(c.eta);
      o.require(c.eta.flavor == Flavor::pseudo || c.eta.flavor == Flavor::strict, "eta pseudonatural");
      o.require(retraction_is_identity(c), "H∘i = 1");
    }
    o.note << "H, eta validated, H∘i = 1 at both points";
  });

  criterion(4, "comma objects over diagrams with oplax initial objects", [](Outcome& o) {
    auto O2 = materialize_oriental(2);
    auto I = fix_I();
    TwoFunctor g{O2, I, {}, {}, {}};
    for (int x = 0; x < O2->num_objects(); ++x) g.on0.push_back(x == 0 ? 0 : 1);
    for (int f = 0; f < O2->num_one_cells(); ++f)
      g.on1.push_back(I->hom(g.on0[O2->one(f).src], g.on0[O2->one(f).tgt]).at(0));
    for (int a = 0; a < O2->num_two_cells(); ++a) g.on2.push_back(I->id2(g.on1[O2->two(a).src]));
    auto L2 = std::make_shared<TwoCategory>(linear_order(2));
    std::vector<TwoFunctor> Gs = {identity_functor(I), to_terminal(I, fix_T()), g, to_terminal(O2, fix_T()),
                                  identity_functor(L2), fix_prod(I, I).pr1, fix_prod(I, L2).pr2};
    const auto pt = H(fix_T(), 2, 4);
    int n = 0;
    for (const TwoFunctor& G : Gs) {
      validate(G);
      const auto w = find_oplax_initial(*G.source);
      o.require(w.has_value(), "oplax initial object");
      if (!w) continue;
      LpId r = lp_id(G);
      o.require(H(r.L.cat, 2, 4) == H(G.source, 2, 4), "laco(1_D,G) vs E on " + G.source->construction);
      DiagramComma Ld = ldar(identity_functor(G.target), G);
      o.require(H(Ld.cat, 2, 4) == pt, "ldar(Id_D,G) contractible");
      ++n;
    }
    o.note << n << " diagrams";
  });

  criterion(5, "totalization and E2 comparison (P=Q=T=3)", [&](Outcome& o) {
    int pq = 0;
    for (const auto& f : fibs) {
      Bisimplicial B = build_B(f.P, 3, 3, 3);
      const int top = std::min(2, tot_trusted_max(B));
      o.require(top == 2, "trusted totalization range");
      const auto h = H(f.P.source, 2, 4);
      for (int n = 0; n <= top; ++n)
        o.require(totalization_homology(B, n) == h[n], f.name + " Tot_" + std::to_string(n));
      SSPages S = pages(B);
      for (auto& [k, v] : S.E2)
        if (S.e2_trusted(k.first, k.second)) {
          o.require(e2_vs_local(f.P, f.cert, k.first, k.second),
                    f.name + " E2(" + std::to_string(k.first) + "," + std::to_string(k.second) + ")");
          ++pq;
        }
    }
    o.note << fibs.size() << " fixtures, " << pq << " E2 terms";
  });

  criterion(6, "S⁻¹ of the point is acyclic and (a,1) is hom-terminal", [](Outcome& o) {
    for (auto S : {pgm_C2(), pgm_G2()}) {
      SInv pt = s_inv_point(S);
      o.require(H(pt.cat, 2, 4) == std::vector<FGAbGroup>{Z(1), Z(0), Z(0)}, S->name + " homology");
      PointContraction c = point_contraction(pt);
      o.require(c.hom_terminal, S->name + " hom-terminal: " + c.detail);
      validate(c.lam);
    }
    o.note << "C2, G2: Z,0,0";
  });

  criterion(7, "pi0(S⁻¹S) is a group", [](Outcome& o) {
    for (auto S : {pgm_C2(), pgm_M2(), pgm_G2(), pgm_G2sat()}) {
      SInv X = s_inv_x(S, self_action(S));
      const PGM Q = pgm_on_sinvs(X);
      const CommMonoid m = pi0_monoid(Q);
      o.require(m.is_group(), S->name);
      o.note << S->name << " |pi0|=" << m.size() << " ";
    }
  });

  criterion(8, "group completion on homology", [](Outcome& o) {
    struct Case {
      std::shared_ptr<const PGM> S;
      int q;
      FGAbGroup expect;
    };
    for (const Case& c : {Case{pgm_C2(), 0, Z(2)}, Case{pgm_M2(), 0, Z(1)}, Case{pgm_M2(), 1, Z(0)},
                          Case{pgm_G2(), 0, Z(1)}, Case{pgm_G2(), 2, Z(0, {2})}}) {
      GCReport r = group_completion_check(c.S, self_action(c.S), c.q, 4);
      const std::string tag = c.S->name + " q=" + std::to_string(c.q);
      o.require(r.iso, tag + " iso");
      o.require(r.representative_independent, tag + " representative independence");
      o.require(r.localized == c.expect && r.HSinv == c.expect, tag + " got " + r.HSinv.str());
      o.note << tag << ": " << r.HSinv.str() << "; ";
    }
  });

  criterion(9, "opfibration check on rho and on the negative fixture", [&](Outcome& o) {
    o.require(bool(fibs[3].cert), "rho C2");
    o.require(bool(fibs[4].cert), "rho G2");
    o.require(verify_certificate(fibs[3].cert).empty() && verify_certificate(fibs[4].cert).empty(), "replay");
    auto D2 = std::make_shared<TwoCategory>(discrete({"0", "1"}));
    TwoFunctor di{D2, fix_I(), {0, 1}, {0, 2}, {0, 2}};
    validate(di);
    OpfibrationCertificate c = check_opfibration(di);
    o.require(!c && c.failure->clause == "opcartesian-lift-missing", "negative fixture clause");
    if (c.failure) o.note << "negative: " << c.failure->clause;
  });

  criterion(10, "independent oracles", [](Outcome& o) {
    const Nerve nv = nerve(fix_G2(), 3);
    for (int p = 0; p <= 3; ++p)
      o.require(long(nv.simplices[p].size()) == oracle::z2_cocycles(p), "G2 level " + std::to_string(p));
    o.require(nv.sset.count == std::vector<int>{1, 1, 2, 8}, "G2 counts 1,1,2,8");
    std::mt19937 rng(12345);
    int snf = 0;
    for (int t = 0; t < 100; ++t) {
      const IntMatrix M = oracle::random_matrix(rng, t);
      snf += smith_normal_form(M).diag == oracle::divisor_factors(M);
    }
    o.require(snf == 100, "SNF " + std::to_string(snf) + "/100");
    std::mt19937 r2(777);
    int loc = 0;
    for (int t = 0; t < 50; ++t) {
      const auto [g, rel, acts, M] = oracle::random_localization(r2, t);
      loc += localize(rel, g, acts, M).group == oracle::stable_image(acts, rel, g);
    }
    o.require(loc == 50, "localization " + std::to_string(loc) + "/50");
    o.note << "nerve 1,1,2,8; SNF " << snf << "/100; localization " << loc << "/50";
  });

  return failures == 0 ? 0 : 1;
}
