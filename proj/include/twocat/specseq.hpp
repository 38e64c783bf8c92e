#pragma once

#include <map>
#include <memory>

#include "twocat/homology.hpp"
#include "twocat/opfib.hpp"

namespace twocat {

// Bisimplicial set of triples (ω, δ, σ): ω a q-simplex of C, σ a p-simplex
// of D and δ a (q+1+p)-simplex of D restricting to F∘ω on 0..q and to σ on
// q+1..q+1+p. Levels are built for p ≤ P, q ≤ Q, p+q ≤ T.
struct Bisimplicial {
  struct Level {
    bool built = false;
    std::vector<int> omega, sigma;  // indices into the nerves of C and D
    std::vector<Simplex> delta;
    KeyIndex ix;                    // [ω, δ...] ↦ triple
    // dH[i][x], sH[i][x], dV[i][x], sV[i][x]
    std::vector<std::vector<int>> dH, sH, dV, sV;
    std::vector<char> vdegenerate;
    int size() const { return int(delta.size()); }
  };

  TwoFunctor F;
  int P = 0, Q = 0, T = 0;
  Nerve NC, ND;
  std::vector<std::vector<Level>> B;  // B[p][q]

  bool has(int p, int q) const { return p >= 0 && q >= 0 && p <= P && q <= Q && p + q <= T; }
  const Level& at(int p, int q) const { return B[p][q]; }
  int find(int p, int q, int omega, const Simplex& delta) const;
};

Bisimplicial build_B(const TwoFunctor& F, int P, int Q, int T);
// Simplicial identities in both directions and commutation of the two.
std::string check_bisimplicial(const Bisimplicial& B);

// Column p (vary q) and row q (vary p) as truncated simplicial sets.
TruncSimplicialSet column(const Bisimplicial& B, int p);
TruncSimplicialSet row(const Bisimplicial& B, int q);

// Bijection of the triples over σ with the nerve of ldar(F, σ), and of the
// triples over ω with the nerve of oprdar(F∘ω, Id_D), compatible with the
// operators of the fixed direction. Empty string on success.
std::string filtration_check_p(const Bisimplicial& B, int p, int sigma, int q);
std::string filtration_check_q(const Bisimplicial& B, int q, int omega, int p);

struct SSPages {
  int P = 0, Q = 0, T = 0;
  std::map<std::pair<int, int>, FGAbGroup> E1, E2;
  std::map<std::pair<int, int>, IntMatrix> d1;  // E¹_{p,q} → E¹_{p-1,q} on canonical generators
  bool d1_squared_zero = true;

  bool e1_trusted(int p, int q) const { return p <= P && q + 1 <= Q && p + q + 1 <= T; }
  bool e2_trusted(int p, int q) const { return p + 1 <= P && q + 1 <= Q && p + q + 2 <= T; }
};

SSPages pages(const Bisimplicial& B);
// Homology of the total complex; trusted for n ≤ min(P, Q, T) − 1.
FGAbGroup totalization_homology(const Bisimplicial& B, int n);
int tot_trusted_max(const Bisimplicial& B);

// Horizontal homology of row q: Z^k in degree 0 (k = |N_q C|) and 0 above.
bool collapse_check(const Bisimplicial& B, int q);

// σ ↦ H_q(F⁻¹(σ(0))) on nerve(D, N), with face and degeneracy maps the
// composite H∘e∘φ*∘d∘i through the diagram commas.
struct FiberSystem {
  Nerve ND;
  LocalCoeffSystem L;
  std::vector<FGAbGroup> fiber_homology;  // per object of D
};

FiberSystem fiber_coeff_system(const TwoFunctor& F, const OpfibrationCertificate& cert, int q, int N);
// d;φ*;e equals the base change along σ_(0,φ(0)) for every generator φ at σ.
std::string check_base_change_identification(const TwoFunctor& F, const OpfibrationCertificate& cert, int N);

bool e2_vs_local(const TwoFunctor& F, const OpfibrationCertificate& cert, int p, int q);

}  // namespace twocat
