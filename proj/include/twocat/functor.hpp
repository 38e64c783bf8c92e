#pragma once

#include <optional>

#include "twocat/two_category.hpp"

namespace twocat {

// Strict 2-functor given by its action on cells of each dimension.
struct TwoFunctor {
  TwoCatPtr source, target;
  std::vector<int> on0, on1, on2;
};

// Normal pseudofunctor: the cell maps plus invertible constraints
// F2(g,f): Fg∘Ff ⇒ F(g∘f). Missing entries mean the identity 2-cell.
struct NormalPseudofunctor {
  NormalPseudofunctor() = default;
  NormalPseudofunctor(TwoFunctor f) : maps(std::move(f)) {}  // NOLINT: strict functors are pseudofunctors

  TwoFunctor maps;
  std::unordered_map<std::uint64_t, int> constraints;

  const TwoCategory& src() const { return *maps.source; }
  const TwoCategory& tgt() const { return *maps.target; }
  int F2(int g, int f) const;
};

TwoFunctor identity_functor(TwoCatPtr c);
TwoFunctor compose(const TwoFunctor& g, const TwoFunctor& f);
NormalPseudofunctor compose(const NormalPseudofunctor& g, const NormalPseudofunctor& f);

void validate(const TwoFunctor& f);
void validate(const NormalPseudofunctor& f);

bool same_maps(const TwoFunctor& a, const TwoFunctor& b);
// Bijective on cells of every dimension.
bool is_bijective(const TwoFunctor& f);

// Isomorphism A → B found by backtracking search, if any.
std::optional<TwoFunctor> find_isomorphism(TwoCatPtr a, TwoCatPtr b);

enum class Orientation { lax, oplax };
enum class Flavor { lax, pseudo, strict };

// Lax: α_f : Gf∘α_x ⇒ α_y∘Ff.  Oplax: α_f : α_y∘Ff ⇒ Gf∘α_x.
struct Transformation {
  Orientation orientation = Orientation::lax;
  Flavor flavor = Flavor::lax;
  NormalPseudofunctor source, target;
  std::vector<int> at0;  // per object of the domain: 1-cell Fx → Gx
  std::vector<int> at1;  // per 1-cell of the domain: 2-cell
};

void validate(const Transformation& t);

// Γ_x : α_x ⇒ α'_x between transformations of the same orientation.
struct Modification {
  Transformation source, target;
  std::vector<int> at;
};

void validate(const Modification& m);

}  // namespace twocat
