#pragma once

#include <array>
#include <optional>

#include "twocat/functor.hpp"
#include "twocat/util.hpp"

namespace twocat {

// Strict pullback of P: C → D ← X : F. Cells are pairs (w1, w2).
struct Pullback {
  TwoCatPtr cat;
  TwoFunctor p1, p2;
  std::vector<std::array<int, 2>> obj, one, two;
  KeyIndex ix0, ix1, ix2;
};

Pullback pullback(const TwoFunctor& P, const TwoFunctor& F);

// Lax (oplax) comma object of F: X → Y ← Z : G.
//   objects [x,f,z], f: Fx → Gz
//   1-cells [s,α,t], α: Gt∘f ⇒ f'∘Fs  (oplax: f'∘Fs ⇒ Gt∘f)
//   2-cells [φ,γ]
struct Comma {
  Orientation orientation = Orientation::lax;
  TwoFunctor F, G;
  TwoCatPtr cat;
  TwoFunctor pX, pZ;
  Transformation pi;  // F∘pX ⇒ G∘pZ
  std::vector<std::array<int, 3>> obj;  // x, f, z
  std::vector<std::array<int, 5>> one;  // src, tgt, s, α, t
  std::vector<std::array<int, 4>> two;  // src, tgt, φ, γ
  KeyIndex ix0, ix1, ix2;

  int find_obj(int x, int f, int z) const { return key_find(ix0, {x, f, z}); }
  int find_one(int src, int tgt, int s, int a, int t) const { return key_find(ix1, {src, tgt, s, a, t}); }
  int find_two(int src, int tgt, int phi, int gam) const { return key_find(ix2, {src, tgt, phi, gam}); }
};

Comma laco(const TwoFunctor& F, const TwoFunctor& G);
Comma oplaco(const TwoFunctor& F, const TwoFunctor& G);

// The 2-functor k ↦ [Rk, λ_k, Qk] induced by a lax transformation λ: F∘R ⇒ G∘Q.
TwoFunctor mediate(const Comma& L, const TwoFunctor& R, const TwoFunctor& Q, const Transformation& lam);
// Every cell of L over (R, Q, λ) is unique, so no second mediator exists.
bool mediator_unique(const Comma& L, const TwoFunctor& R, const TwoFunctor& Q, const Transformation& lam);

// The inclusion pb(P,F) → laco(P,F) with identity laxity.
TwoFunctor pullback_inclusion(const Pullback& pb, const Comma& L);

// laco(F, x̂) → laco(F, ŷ) induced by φ: x → y, both commas over point functors.
TwoFunctor base_change(const Comma& from, const Comma& to, int phi);

struct Fiber {
  TwoCatPtr cat;
  TwoFunctor incl;
};

Fiber strict_fiber(const TwoFunctor& P, int x);

// Components h_j: ι → j and h_f: h_j ⇒ f∘h_i of an oplax transformation
// ι̂∘u ⇒ Id. For a terminal witness the data live in E^op.
struct OplaxInitialWitness {
  int iota = -1;
  std::vector<int> h0, h1;
};

std::optional<OplaxInitialWitness> find_oplax_initial(const TwoCategory& E);
std::optional<OplaxInitialWitness> find_oplax_terminal(const TwoCategory& E);
Transformation witness_transformation(TwoCatPtr E, const OplaxInitialWitness& w);

// Functor between dual categories with the same cell maps.
TwoFunctor dual_functor(const TwoFunctor& F, TwoCatPtr src, TwoCatPtr tgt);
// Isomorphism d(L1) → L2 exchanging the two legs: with rev2 = false this is
// op(laco(G,F)) ≅ oplaco(F^op,G^op); with rev2 = true coop(laco(G,F)) ≅ laco(F^coop,G^coop).
TwoFunctor comma_duality_iso(const Comma& L1, TwoCatPtr dual_of_L1, const Comma& L2, bool rev2);

// Comma objects over diagrams E → D.
//   ldar (lax side):   laco(ΔF, Ĝ) in oplax(E,D); objects (c, λ) with
//                      λ_e: Fc → Ge, λ_f: λ_e' ⇒ Gf∘λ_e;
//                      1-cells [s, m], m_e: λ_e ⇒ λ'_e∘Fs; 2-cells [φ].
//   oprdar (oplax side): oplaco(Ĝ, ΔF) in lax(E,D); objects [g, c] with
//                      g_e: Ge → Fc, g_f: g_e ⇒ g_e'∘Gf;
//                      1-cells [α, t], α_e: g'_e ⇒ Ft∘g_e; 2-cells [γ].
struct DiagramComma {
  bool lax_side = true;
  TwoFunctor F, G;
  TwoCatPtr cat;
  TwoFunctor proj;
  // obj: [c, comp at each object of E, comp at each 1-cell of E]
  std::vector<std::vector<int>> obj;
  // one: [src, tgt, s, comp at each object of E]
  std::vector<std::vector<int>> one;
  // two: [src, tgt, φ]
  std::vector<std::vector<int>> two;
  KeyIndex ix0, ix1, ix2;
};

DiagramComma ldar(const TwoFunctor& F, const TwoFunctor& G);
DiagramComma oprdar(const TwoFunctor& G, const TwoFunctor& F);

// Restriction along u: E' → E, from a comma over G to one over G∘u.
TwoFunctor restrict_along(const DiagramComma& from, const DiagramComma& to, const TwoFunctor& u);

// Maps d: laco(F, Ĝ(ι)) → ldar(F,G), e: ldar(F,G) → laco(F, Ĝ(ι)) and the
// 2-natural transformation Id ⇒ d∘e.
struct InitialComparison {
  TwoFunctor d, e;
  Transformation unit;
};

InitialComparison lp_initial_maps(const Comma& L, const DiagramComma& Ld, const OplaxInitialWitness& w);

// J: E → laco(1_D, G) and μ: 1 ⇒ J∘p_E.
struct LpId {
  Comma L;
  TwoFunctor J;
  Transformation mu;
};

LpId lp_id(const TwoFunctor& G);

}  // namespace twocat
