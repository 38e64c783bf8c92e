#pragma once

#include "twocat/homology.hpp"
#include "twocat/opfib.hpp"
#include "twocat/pgm.hpp"

namespace twocat {

// S⁻¹X. Objects (a, x); 1-cells (s, α: s⊕a → b, φ: s·x → y); 2-cells are
// classes ⟨p, A, F⟩ with p: s → s', A: α ⇒ α'∘(p⊕a), F: φ ⇒ φ'∘(p·x),
// modulo invertible Θ: p ⇒ q acting by A ↦ (α'∗Θa)·A, F ↦ (φ'∗Θx)·F.
struct SInv {
  std::shared_ptr<const PGM> S;
  PGMAction act;
  bool point = false;  // X terminal; names omit the X coordinate
  TwoCatPtr cat;
  std::vector<std::array<int, 2>> obj;  // a, x
  std::vector<std::array<int, 5>> one;  // src, tgt, s, α, φ
  std::vector<std::array<int, 5>> two;  // src, tgt, p, A, F (least representative)
  std::vector<std::vector<std::array<int, 3>>> reps;  // every (p, A, F) of a class
  KeyIndex ix1;     // [src, s, α, φ]
  KeyIndex rep_ix;  // [src, tgt, p, A, F] ↦ class
  TwoFunctor i;     // X → S⁻¹X
  long congruence_checks = 0;

  int find_obj(int a, int x) const { return a * act.X->num_objects() + x; }
  int find_one(int src, int s, int al, int ph) const { return key_find(ix1, {src, s, al, ph}); }
  int cls(int c1, int c2, int p, int A, int F) const { return key_find(rep_ix, {c1, c2, p, A, F}); }
};

SInv s_inv_x(std::shared_ptr<const PGM> S, const PGMAction& act);
SInv s_inv_point(std::shared_ptr<const PGM> S);

// (a,1) is terminal in each hom-category (S⁻¹*)(e, a), and the components
// (a,1) assemble to a lax transformation const_e ⇒ Id.
struct PointContraction {
  bool hom_terminal = false;
  std::string detail;
  Transformation lam;
};
PointContraction point_contraction(const SInv& pt);

// The action ξ of S on S⁻¹X, the inverse s⁻¹ and T: 1 ⇒ ξ(s,−)∘s⁻¹.
PGMAction xi_action(const SInv& X);
TwoFunctor s_inverse(const SInv& X, int s);
Transformation T_transformation(const SInv& X, const PGMAction& xi, int s);
// ξ(s,−)∘s⁻¹ = s⁻¹∘ξ(s,−) for every s.
bool xi_commutes_with_inverse(const SInv& X, const PGMAction& xi);

// PGM structure on S⁻¹S; X must be s_inv_x(S, self_action(S)).
PGM pgm_on_sinvs(const SInv& X);
// Each translation (a,x)⊕− of S⁻¹S and the composite with (x,a)⊕− induce
// isomorphisms on H_n, n ≤ N−1.
Verdict translations_invert_homology(const PGM& Q, int N);

struct RhoData {
  SInv X, pt;
  TwoFunctor rho;
};
// Hypotheses of the opfibration statement; AxiomError("hypothesis") on failure.
void check_rho_hypotheses(const PGM& S, const PGMAction& act);
RhoData rho_projection(std::shared_ptr<const PGM> S, const PGMAction& act);
struct RhoReport {
  RhoData data;
  OpfibrationCertificate cert;
  int preferred_checked = 0;
  std::string preferred_failure;  // first (s,α,1) that is not opcartesian
};
RhoReport rho_opfib_check(std::shared_ptr<const PGM> S, const PGMAction& act);

// Fiber of ρ over a is isomorphic to X by (a,x) ↦ x; empty string on success.
std::string fiber_iso_check(const RhoData& R, int a);

struct IsoCriterion {
  bool criterion = false;  // p an equivalence, A and F invertible
  bool brute = false;      // invertible in the constructed 2-category
};
IsoCriterion is_sinv_iso(const SInv& X, int cell);

// Θ: p ≅ p₂∘(p₁⊕s) satisfying the prism equality for a lift of
// (u, (t,β), ⟨p,A⟩) along h = (s, α, φ) with lift (v, ⟨p₁,A₁⟩, ⟨p₂,A₂,F₂⟩).
std::optional<int> lift_witness_check(const RhoData& R, int h, int u, int tb, int pA, int v, int l1, int l2);
// The preferred lifts v = t, δ = β, λ = χ∘px, ⟨p₁,A₁⟩ = 1, ⟨p₂,A₂,F₂⟩ = ⟨p,A,1⟩
// for every preferred h and every datum; each must be a lift with witness
// the identity. Returns the number of data checked; throws on failure.
long check_preferred_lifts(const RhoData& R);

struct GCReport {
  int q = 0, N = 0;
  CommMonoid pi0;
  FGAbGroup HX, localized, HSinv;
  bool representative_independent = false;
  bool iso = false;
};
GCReport group_completion_check(std::shared_ptr<const PGM> S, const PGMAction& act, int q, int N);

}  // namespace twocat
