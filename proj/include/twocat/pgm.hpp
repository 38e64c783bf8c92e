#pragma once

#include <filesystem>
#include <optional>

#include "twocat/json_io.hpp"
#include "twocat/lattice.hpp"

namespace twocat {

// Permutative Gray monoid in cubical form. For f: a → a', g: b → b'
//   Σ_{f,g}: (f⊕b')∘(a⊕g) ⇒ (a'⊕g)∘(f⊕b),
// stored only for pairs of nonidentity 1-cells.
struct PGM {
  TwoCatPtr S;
  int unit = 0;
  std::vector<std::vector<int>> sum;       // sum[a][b] = a⊕b
  std::vector<TwoFunctor> left, right;     // left[a] = a⊕−, right[b] = −⊕b
  std::unordered_map<std::uint64_t, int> sigma;
  std::vector<std::vector<int>> beta;      // beta[a][b]: a⊕b → b⊕a
  std::string name;

  int Sigma(int f, int g) const;  // identity when f or g is an identity
  int lt1(int a, int f) const { return left[a].on1[f]; }
  int rt1(int f, int b) const { return right[b].on1[f]; }
  int lt2(int a, int x) const { return left[a].on2[x]; }
  int rt2(int x, int b) const { return right[b].on2[x]; }
};

// Action μ of a PGM on X. Σ^μ_{f,g}: (f·y')∘(s·g) ⇒ (s'·g)∘(f·y) for
// f: s → s' in S and g: y → y' in X.
struct PGMAction {
  std::shared_ptr<const PGM> S;
  TwoCatPtr X;
  std::vector<std::vector<int>> act;  // act[s][x]
  std::vector<TwoFunctor> left;       // μ(s,−): X → X
  std::vector<TwoFunctor> right;      // μ(−,x): S → X
  std::unordered_map<std::uint64_t, int> sigma;

  int Sigma(int f, int g) const;
};

// Exhaustive checks; AxiomError names the failing axiom.
void validate_pgm(const PGM& S);
void validate_action(const PGMAction& A);

PGMAction self_action(std::shared_ptr<const PGM> S);
// Every s acts as the identity; X must make this well defined (any X).
PGMAction trivial_action(std::shared_ptr<const PGM> S, TwoCatPtr X);

// Cubical fixtures. C2: Z/2 on two discrete objects; M2: max on {0,1};
// G2: one object with 2-cells Z/2; G2sat: one object with the saturating
// monoid on 2-cells. The last three use trivial ⊕ on cells.
std::shared_ptr<const PGM> pgm_C2();
std::shared_ptr<const PGM> pgm_M2();
std::shared_ptr<const PGM> pgm_G2();
std::shared_ptr<const PGM> pgm_G2sat();
// Discrete carrier with a commutative monoid table on objects.
PGM discrete_pgm(const std::vector<std::string>& objects, const std::vector<std::vector<int>>& add, int unit);
// One object, one 1-cell; ⊕ on 2-cells is their common composite.
PGM one_object_pgm(TwoCatPtr S);

json to_json(const PGM& S);
PGM pgm_from_json(const json& j, const std::filesystem::path& base);
std::shared_ptr<const PGM> load_pgm(const std::filesystem::path& p);
json to_json(const PGMAction& A);
PGMAction action_from_json(const json& j, const std::filesystem::path& base);
PGMAction load_action(const std::filesystem::path& p);

// Components under 1-cell reachability; comp[x] in order of first object.
struct Components {
  std::vector<int> comp;
  std::vector<int> rep;  // least object of each component
  int count() const { return int(rep.size()); }
};
Components pi0(const TwoCategory& S);

struct CommMonoid {
  std::vector<std::string> names;
  int unit = 0;
  std::vector<std::vector<int>> add;
  int size() const { return int(names.size()); }
  bool is_group() const;
};
// Throws AxiomError on a failure of associativity, commutativity or unit.
void validate(const CommMonoid& M);
CommMonoid pi0_monoid(const PGM& S);

struct Verdict {
  bool ok = false;
  std::string witness;  // witness on success, counterexample otherwise
  explicit operator bool() const { return ok; }
};

// 1-cell g with invertible 2-cells g∘f ≅ 1 and f∘g ≅ 1, if any.
std::optional<int> equivalence_inverse(const TwoCategory& S, int f);
Verdict is_two_groupoid(const TwoCategory& S);
Verdict is_grouplike(const PGM& S);
Verdict has_faithful_translations(const PGM& S);
Verdict is_strict_pgm_functor(const TwoFunctor& F, const PGM& S, const PGM& T);

// Localization of Z^g / rel at a finite commutative monoid acting by
// acts[m] (g×g, respecting rel). `kernel` generates the stable kernel
// (it contains rel); the result is Z^g / kernel.
struct Localization {
  int g = 0;
  IntMatrix kernel;
  FGAbGroup group;
};
Localization localize(const IntMatrix& rel, int g, const std::vector<IntMatrix>& acts, const CommMonoid& M);
// A in canonical form Z^r ⊕ Z/t₁ ⊕ …, acts on its r + #torsion generators.
FGAbGroup localize_module(const FGAbGroup& A, const std::vector<IntMatrix>& acts, const CommMonoid& M);

// Diagonal presentation of a group's canonical generators.
IntMatrix canonical_relations(const FGAbGroup& A);

}  // namespace twocat
