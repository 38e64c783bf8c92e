#include "twocat/opfib.hpp"

namespace twocat {

namespace {

std::string one_name(const TwoCategory& C, int f) { return describe_one(C, f); }
std::string two_name(const TwoCategory& C, int a) { return describe_two(C, a); }

}  // namespace

CartesianCertificate is_cartesian_2cell(const TwoFunctor& P, int gamma) {
  const TwoCategory &K = *P.source, &L = *P.target;
  CartesianCertificate cert;
  cert.gamma = gamma;
  const int g = K.two(gamma).src, h = K.two(gamma).tgt;
  const int Pgamma = P.on2[gamma];
  for (int k : K.hom(K.one(g).src, K.one(g).tgt)) {
    for (int psi : K.hom2(k, h))
      for (int phi : L.hom2(P.on1[k], P.on1[g])) {
        if (P.on2[psi] != L.vcompose(Pgamma, phi)) continue;
        int found = -1, count = 0;
        for (int c : K.hom2(k, g))
          if (P.on2[c] == phi && K.vcompose(gamma, c) == psi) {
            if (found < 0) found = c;
            ++count;
          }
        if (count != 1) {
          cert.failure = Counterexample{
              count == 0 ? "cartesian-lift-missing" : "cartesian-lift-not-unique",
              two_name(K, gamma) + " at ψ = " + two_name(K, psi) + ", φ = " + two_name(L, phi)};
          return cert;
        }
        cert.lifts.push_back({psi, phi, found});
      }
  }
  return cert;
}

bool cartesian(const TwoFunctor& P, int gamma) { return bool(is_cartesian_2cell(P, gamma)); }

std::vector<OpcartLift> opcart_lifts(const TwoFunctor& P, int h, int u, int t, int alpha) {
  const TwoCategory &K = *P.source, &L = *P.target;
  std::vector<OpcartLift> out;
  const int d = K.one(h).tgt, b = K.one(u).tgt;
  const int Ph = P.on1[h];
  for (int tt : K.hom(d, b)) {
    const int th = K.compose(tt, h);
    for (int a1 : L.hom2(t, P.on1[tt])) {
      if (!L.invertible2(a1)) continue;
      const int w = L.whisker_r(a1, Ph);
      for (int a2 : K.hom2(th, u)) {
        if (!K.invertible2(a2)) continue;
        if (L.vcompose(P.on2[a2], w) == alpha) out.push_back({u, t, alpha, tt, a1, a2});
      }
    }
  }
  return out;
}

std::optional<OpcartLift> choose_lift(const TwoFunctor& P, int h, int u, int t, int alpha) {
  const TwoCategory &K = *P.source, &L = *P.target;
  auto lifts = opcart_lifts(P, h, u, t, alpha);
  if (lifts.empty()) return std::nullopt;
  for (auto& l : lifts)
    if (L.is_id2(l.a1) && K.is_id2(l.a2)) return l;
  return lifts.front();
}

OpcartesianCertificate is_opcartesian_1cell(const TwoFunctor& P, int h) {
  const TwoCategory &K = *P.source, &L = *P.target;
  OpcartesianCertificate cert;
  cert.h = h;
  const int a = K.one(h).src, d = K.one(h).tgt;
  const int Ph = P.on1[h];
  for (int b = 0; b < K.num_objects(); ++b) {
    // All lifts of all (u, t, α) ending at b, grouped per datum.
    std::vector<std::vector<OpcartLift>> data;
    for (int u : K.hom(a, b))
      for (int t : L.hom(P.on0[d], P.on0[b])) {
        const int tPh = L.compose(t, Ph);
        for (int alpha : L.hom2(tPh, P.on1[u])) {
          if (!L.invertible2(alpha)) continue;
          auto lifts = opcart_lifts(P, h, u, t, alpha);
          if (lifts.empty()) {
            cert.failure = Counterexample{"opcartesian-lift-missing",
                                          one_name(K, h) + " has no lift of (" + one_name(K, u) + ", " +
                                              one_name(L, t) + ", " + two_name(L, alpha) + ")"};
            return cert;
          }
          cert.lifts.push_back(*choose_lift(P, h, u, t, alpha));
          data.push_back(std::move(lifts));
        }
      }
    for (auto& D1 : data)
      for (auto& D2 : data) {
        const OpcartLift &x = D1.front(), &y = D2.front();
        for (int beta : L.hom2(x.t, y.t))
          for (int rho : K.hom2(x.u, y.u)) {
            if (L.vcompose(P.on2[rho], x.alpha) != L.vcompose(y.alpha, L.whisker_r(beta, Ph))) continue;
            for (auto& l1 : D1)
              for (auto& l2 : D2) {
                ++cert.uniqueness_checks;
                const int lhs1 = L.vcompose(l2.a1, beta);
                const int lhs2 = K.vcompose(rho, l1.a2);
                int count = 0;
                for (int bt : K.hom2(l1.tt, l2.tt))
                  if (L.vcompose(P.on2[bt], l1.a1) == lhs1 && K.vcompose(l2.a2, K.whisker_r(bt, h)) == lhs2)
                    ++count;
                if (count != 1) {
                  cert.failure = Counterexample{
                      count == 0 ? "opcartesian-2cell-missing" : "opcartesian-2cell-not-unique",
                      one_name(K, h) + " at β = " + two_name(L, beta) + ", ρ = " + two_name(K, rho) +
                          ", lifts through " + one_name(K, l1.tt) + " and " + one_name(K, l2.tt)};
                  return cert;
                }
              }
          }
      }
  }
  return cert;
}

OpfibrationCertificate check_opfibration(const TwoFunctor& P) {
  const TwoCategory &K = *P.source, &L = *P.target;
  OpfibrationCertificate cert;
  cert.P = P;
  std::vector<signed char> opc(K.num_one_cells(), -1);
  auto is_opc = [&](int h) {
    if (opc[h] < 0) opc[h] = bool(is_opcartesian_1cell(P, h));
    return bool(opc[h]);
  };
  for (int x = 0; x < K.num_objects(); ++x)
    for (int f : L.out_one(P.on0[x])) {
      int chosen = -1;
      if (L.is_id1(f) && is_opc(K.id1(x))) chosen = K.id1(x);
      for (int h : K.out_one(x)) {
        if (chosen >= 0) break;
        if (P.on1[h] == f && is_opc(h)) chosen = h;
      }
      if (chosen < 0) {
        cert.failure = Counterexample{"opcartesian-lift-missing",
                                      "no opcartesian lift of " + one_name(L, f) + " at " + K.object(x)};
        return cert;
      }
      cert.lift1[pair_key(x, f)] = chosen;
    }
  cert.is_cartesian.assign(K.num_two_cells(), 0);
  for (int c = 0; c < K.num_two_cells(); ++c) cert.is_cartesian[c] = cartesian(P, c);
  for (int g = 0; g < K.num_one_cells(); ++g)
    for (int alpha : L.two_into(P.on1[g])) {
      int chosen = -1;
      if (L.is_id2(alpha)) chosen = K.id2(g);
      for (int c : K.two_into(g)) {
        if (chosen >= 0) break;
        if (P.on2[c] == alpha && cert.is_cartesian[c]) chosen = c;
      }
      if (chosen < 0) {
        cert.failure = Counterexample{"local-fibration-lift-missing",
                                      "no cartesian lift of " + two_name(L, alpha) + " at " + one_name(K, g)};
        return cert;
      }
      cert.lift2[pair_key(g, alpha)] = chosen;
    }
  for (int c1 = 0; c1 < K.num_two_cells(); ++c1) {
    if (!cert.is_cartesian[c1]) continue;
    for (int f : K.out_one(K.tgt0(c1)))
      for (int c2 : K.two_from(f)) {
        if (!cert.is_cartesian[c2]) continue;
        ++cert.composite_checks;
        const int hc = K.hcompose(c2, c1);
        if (!cert.is_cartesian[hc]) {
          cert.failure = Counterexample{"cartesian-composite-failure",
                                        two_name(K, c2) + " ∗ " + two_name(K, c1) + " is not cartesian"};
          return cert;
        }
      }
  }
  return cert;
}

std::string verify_certificate(const OpfibrationCertificate& cert) {
  if (cert.failure) return "certificate records a failure";
  const TwoFunctor& P = cert.P;
  const TwoCategory &K = *P.source, &L = *P.target;
  for (int x = 0; x < K.num_objects(); ++x)
    for (int f : L.out_one(P.on0[x])) {
      auto it = cert.lift1.find(pair_key(x, f));
      if (it == cert.lift1.end()) return "missing opcartesian lift of " + one_name(L, f);
      const int h = it->second;
      if (K.one(h).src != x || P.on1[h] != f) return "opcartesian lift of " + one_name(L, f) + " lies over another cell";
      if (!is_opcartesian_1cell(P, h)) return one_name(K, h) + " is not opcartesian";
    }
  for (int g = 0; g < K.num_one_cells(); ++g)
    for (int alpha : L.two_into(P.on1[g])) {
      auto it = cert.lift2.find(pair_key(g, alpha));
      if (it == cert.lift2.end()) return "missing cartesian lift of " + two_name(L, alpha);
      const int c = it->second;
      if (K.two(c).tgt != g || P.on2[c] != alpha) return "cartesian lift of " + two_name(L, alpha) + " lies over another cell";
      if (!cartesian(P, c)) return two_name(K, c) + " is not cartesian";
    }
  return {};
}

ComparisonH comparison_H(const TwoFunctor& P, const TwoFunctor& F, const OpfibrationCertificate& cert) {
  const TwoCategory &K = *P.source, &L = *P.target;
  for (int a = 0; a < L.num_two_cells(); ++a)
    if (!L.invertible2(a)) throw AxiomError("hypothesis", "2-cell " + two_name(L, a) + " of the base is not invertible");
  if (cert.failure) throw AxiomError("certificate", "opfibration certificate records a failure");
  if (P.source != cert.P.source || P.target != cert.P.target || !same_maps(P, cert.P))
    throw AxiomError("certificate", "certificate was issued for another 2-functor");

  ComparisonH out;
  out.L = laco(P, F);
  out.pb = pullback(P, F);
  out.i = pullback_inclusion(out.pb, out.L);
  const Comma& C = out.L;
  const Pullback& B = out.pb;
  const TwoCategory &LC = *C.cat, &PB = *B.cat;
  const TwoCategory& J = *F.source;

  TwoFunctor H{C.cat, B.cat, {}, {}, {}};
  std::vector<int> fhat(C.obj.size());
  H.on0.resize(C.obj.size());
  for (int o = 0; o < int(C.obj.size()); ++o) {
    auto [x, f, z] = C.obj[o];
    fhat[o] = cert.opcart_lift(x, f);
    H.on0[o] = key_find(B.ix0, {K.one(fhat[o]).tgt, z});
    if (H.on0[o] < 0) throw AxiomError("comparison", "lift target of object " + LC.object(o) + " is not over Fz");
  }

  out.lift.resize(C.one.size());
  out.hat.resize(C.one.size());
  H.on1.resize(C.one.size());
  for (int u = 0; u < int(C.one.size()); ++u) {
    auto [src, tgt, s, alpha, t] = C.one[u];
    const int uu = K.compose(fhat[tgt], s);
    auto l = choose_lift(P, fhat[src], uu, F.on1[t], alpha);
    if (!l) throw AxiomError("comparison", "no opcartesian lift for 1-cell " + LC.one(u).id);
    out.lift[u] = *l;
    out.hat[u] = cert.cart_lift(l->tt, l->a1);
    const int shat = K.two(out.hat[u]).src;
    H.on1[u] = key_find(B.ix1, {shat, t});
    if (H.on1[u] < 0) throw AxiomError("comparison", "cartesian lift of 1-cell " + LC.one(u).id + " is not over Ft");
  }

  H.on2.resize(C.two.size());
  for (int c = 0; c < int(C.two.size()); ++c) {
    auto [u1, u2, phi, gam] = C.two[c];
    const OpcartLift &l1 = out.lift[u1], &l2 = out.lift[u2];
    const int tgt_obj = C.one[u1][1], src_obj = C.one[u1][0];
    const int beta = F.on2[gam];
    const int rho = K.whisker_l(fhat[tgt_obj], phi);
    const int lhs1 = L.vcompose(l2.a1, beta);
    const int lhs2 = K.vcompose(rho, l1.a2);
    int tilde = -1;
    for (int bt : K.hom2(l1.tt, l2.tt))
      if (L.vcompose(P.on2[bt], l1.a1) == lhs1 && K.vcompose(l2.a2, K.whisker_r(bt, fhat[src_obj])) == lhs2) {
        tilde = bt;
        break;
      }
    if (tilde < 0) throw AxiomError("comparison", "no 2-dimensional lift for " + LC.two(c).id);
    const int h1 = out.hat[u1], h2 = out.hat[u2];
    const int psi = K.vcompose(tilde, h1);
    int hatphi = -1;
    for (int x : K.hom2(K.two(h1).src, K.two(h2).src))
      if (P.on2[x] == beta && K.vcompose(h2, x) == psi) {
        hatphi = x;
        break;
      }
    if (hatphi < 0) throw AxiomError("comparison", "no cartesian factorization for " + LC.two(c).id);
    H.on2[c] = key_find(B.ix2, {hatphi, gam});
    if (H.on2[c] < 0) throw AxiomError("comparison", "image of " + LC.two(c).id + " is not in the pullback");
  }

  NormalPseudofunctor Hp(H);
  for (int u1 = 0; u1 < int(C.one.size()); ++u1)
    for (int u2 : LC.out_one(LC.one(u1).tgt)) {
      const int u21 = LC.compose(u2, u1);
      const OpcartLift &l1 = out.lift[u1], &l2 = out.lift[u2], &l21 = out.lift[u21];
      const int s1 = C.one[u1][2];
      const int f0 = fhat[C.one[u1][0]];
      // first lift of the composite datum: (s̃2 s̃1, ᾱ2∗ᾱ1, (α̃2∗s1)·(s̃2∗α̃1))
      const int a1c = L.hcompose(l2.a1, l1.a1);
      const int a2c = K.vcompose(K.whisker_r(l2.a2, s1), K.whisker_l(l2.tt, l1.a2));
      int delta = -1;
      for (int bt : K.hom2(K.compose(l2.tt, l1.tt), l21.tt))
        if (L.vcompose(P.on2[bt], a1c) == l21.a1 && K.vcompose(l21.a2, K.whisker_r(bt, f0)) == a2c) {
          delta = bt;
          break;
        }
      if (delta < 0) throw AxiomError("comparison", "no comparison δ for " + LC.one(u2).id + " ∘ " + LC.one(u1).id);
      const int h21inv = K.inverse2(out.hat[u21]);
      if (h21inv < 0) throw AxiomError("comparison", "cartesian lift of " + LC.one(u21).id + " is not invertible");
      const int first = K.vcompose(h21inv, K.vcompose(delta, K.hcompose(out.hat[u2], out.hat[u1])));
      const int t21 = J.compose(C.one[u2][4], C.one[u1][4]);
      const int cell = key_find(B.ix2, {first, J.id2(t21)});
      if (cell < 0) throw AxiomError("comparison", "constraint for " + LC.one(u2).id + " ∘ " + LC.one(u1).id + " is not in the pullback");
      if (!PB.is_id2(cell)) Hp.constraints[pair_key(u2, u1)] = cell;
    }
  out.H = std::move(Hp);

  NormalPseudofunctor iH = compose(NormalPseudofunctor(out.i), out.H);
  Transformation eta;
  eta.orientation = Orientation::lax;
  eta.flavor = Flavor::pseudo;
  eta.source = NormalPseudofunctor(identity_functor(C.cat));
  eta.target = iH;
  eta.at0.resize(C.obj.size());
  const TwoCategory& Y = *P.target;
  for (int o = 0; o < int(C.obj.size()); ++o) {
    auto [x, f, z] = C.obj[o];
    eta.at0[o] = C.find_one(o, out.i.on0[H.on0[o]], fhat[o], Y.id2(f), J.id1(z));
    if (eta.at0[o] < 0) throw AxiomError("comparison", "η component at " + LC.object(o) + " is not a 1-cell");
  }
  eta.at1.resize(C.one.size());
  for (int u = 0; u < int(C.one.size()); ++u) {
    auto [src, tgt, s, alpha, t] = C.one[u];
    const int from = LC.compose(iH.maps.on1[u], eta.at0[src]);
    const int to = LC.compose(eta.at0[tgt], u);
    const int phi = K.vcompose(out.lift[u].a2, K.whisker_r(out.hat[u], fhat[src]));
    eta.at1[u] = C.find_two(from, to, phi, J.id2(t));
    if (eta.at1[u] < 0) throw AxiomError("comparison", "η constraint at " + LC.one(u).id + " is not a 2-cell");
  }
  out.eta = std::move(eta);
  return out;
}

bool retraction_is_identity(const ComparisonH& c) {
  NormalPseudofunctor Hi = compose(c.H, NormalPseudofunctor(c.i));
  if (!same_maps(Hi.maps, identity_functor(c.pb.cat))) return false;
  for (auto& [k, v] : Hi.constraints)
    if (!c.pb.cat->is_id2(v)) return false;
  return true;
}

}  // namespace twocat
