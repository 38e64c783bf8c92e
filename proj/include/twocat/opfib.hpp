#pragma once

#include <optional>

#include "twocat/constructs.hpp"

namespace twocat {

struct Counterexample {
  std::string clause;
  std::string detail;
};

// γ: g ⇒ h is cartesian when every (ψ: k ⇒ h, φ: Pk ⇒ Pg) with
// Pψ = Pγ·φ has exactly one φᶜ: k ⇒ g over φ with γ·φᶜ = ψ.
struct CartesianCertificate {
  int gamma = -1;
  std::vector<std::array<int, 3>> lifts;  // (ψ, φ, φᶜ)
  std::optional<Counterexample> failure;
  explicit operator bool() const { return !failure; }
};

CartesianCertificate is_cartesian_2cell(const TwoFunctor& P, int gamma);
bool cartesian(const TwoFunctor& P, int gamma);

// A lift (t̃, α₁, α₂) of (u, t, α) along h: α₁: t ≅ Pt̃, α₂: t̃∘h ≅ u with
// α = Pα₂·(α₁∗Ph).
struct OpcartLift {
  int u = -1, t = -1, alpha = -1;
  int tt = -1, a1 = -1, a2 = -1;
};

struct OpcartesianCertificate {
  int h = -1;
  std::vector<OpcartLift> lifts;  // chosen lift per (u, t, α)
  long uniqueness_checks = 0;
  std::optional<Counterexample> failure;
  explicit operator bool() const { return !failure; }
};

OpcartesianCertificate is_opcartesian_1cell(const TwoFunctor& P, int h);

// Every lift of (u, t, α) along h, in identifier order.
std::vector<OpcartLift> opcart_lifts(const TwoFunctor& P, int h, int u, int t, int alpha);
// Preferred lift: identities for α₁, α₂ when legal, otherwise the first.
std::optional<OpcartLift> choose_lift(const TwoFunctor& P, int h, int u, int t, int alpha);

struct OpfibrationCertificate {
  TwoFunctor P;
  // (x, f: Px → z) ↦ f̂: x → x̂ with Pf̂ = f
  std::unordered_map<std::uint64_t, int> lift1;
  // (g, α: f ⇒ Pg) ↦ α̂: ĝ ⇒ g with Pα̂ = α
  std::unordered_map<std::uint64_t, int> lift2;
  std::vector<char> is_cartesian;  // per 2-cell of the source
  long composite_checks = 0;
  std::optional<Counterexample> failure;
  explicit operator bool() const { return !failure; }

  int opcart_lift(int x, int f) const { return lift1.at(pair_key(x, f)); }
  int cart_lift(int g, int alpha) const { return lift2.at(pair_key(g, alpha)); }
};

OpfibrationCertificate check_opfibration(const TwoFunctor& P);
// Re-checks the stored lifts of a certificate; empty string when valid.
std::string verify_certificate(const OpfibrationCertificate& cert);

// The retraction H: laco(P,F) → pb(P,F) and η: 1 ⇒ i∘H.
struct ComparisonH {
  Comma L;
  Pullback pb;
  TwoFunctor i;
  NormalPseudofunctor H;
  Transformation eta;
  // per 1-cell of L: the lift (s̃, ᾱ, α̃) and the cartesian lift α̂
  std::vector<OpcartLift> lift;
  std::vector<int> hat;
};

ComparisonH comparison_H(const TwoFunctor& P, const TwoFunctor& F, const OpfibrationCertificate& cert);
// H∘i is the identity 2-functor with identity constraints.
bool retraction_is_identity(const ComparisonH& c);

}  // namespace twocat
