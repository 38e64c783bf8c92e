#pragma once

#include "twocat/functor.hpp"
#include "twocat/util.hpp"

namespace twocat {

// Slot layout of a p-simplex: vertices 0..p, then edges (i<j) and triangles
// (i<j<k) in lexicographic order. Triangle (i,j,k): σ_ik ⇒ σ_jk∘σ_ij.
struct SimplexLayout {
  int p = 0;
  int size = 0;
  std::vector<int> edge_ix, tri_ix;  // flattened (p+1)^2 and (p+1)^3 tables
  int vertex(int i) const { return i; }
  int edge(int i, int j) const { return edge_ix[i * (p + 1) + j]; }
  int tri(int i, int j, int k) const { return tri_ix[(i * (p + 1) + j) * (p + 1) + k]; }
};

const SimplexLayout& layout(int p);

using Simplex = std::vector<int>;

// Edge a→b of x with the identity when a == b.
int simplex_edge(const TwoCategory& D, const Simplex& x, int p, int a, int b);
// Triangle a ≤ b ≤ c of x, identities on repeated indices.
int simplex_tri(const TwoCategory& D, const Simplex& x, int p, int a, int b, int c);

// x∘O(φ) for a monotone φ: [m] → [p] given by its values.
Simplex pull_simplex(const TwoCategory& D, const Simplex& x, int p, const std::vector<int>& phi);

// All p-simplices of the normal oplax nerve of D. `fixed` (optional, layout
// sized) pins slots to given cells; -1 marks a free slot.
void enumerate_simplices(const TwoCategory& D, int p, const std::vector<int>* fixed,
                         const std::function<void(const Simplex&)>& out);
std::vector<Simplex> enumerate_simplices(const TwoCategory& D, int p);

// The tetrahedron equalities and typing of a candidate simplex.
bool is_simplex(const TwoCategory& D, int p, const Simplex& x);

class OrientalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Hom(i,j) is the poset of increasing paths i → j ordered by refinement;
// the 2-cell P ⇒ Q exists iff Q refines P.
TwoCatPtr materialize_oriental(int p, int bound = 4);
// O(φ) for monotone φ: [q] → [p].
TwoFunctor oriental_map(TwoCatPtr Oq, TwoCatPtr Op, const std::vector<int>& phi);
// The 2-functor O(p) → D corresponding to a p-simplex.
TwoFunctor simplex_functor(TwoCatPtr Op, TwoCatPtr D, const Simplex& x);
// The vertex path of a 1-cell of a materialized oriental.
std::vector<int> oriental_path(const TwoCategory& Op, int f);

// Finite truncation of a simplicial set: levels 0..N with face and
// degeneracy tables.
struct TruncSimplicialSet {
  int N = 0;
  std::vector<int> count;
  // face[n][i][x] for 1 ≤ n ≤ N, 0 ≤ i ≤ n
  std::vector<std::vector<std::vector<int>>> face;
  // degen[n][i][x] : level n → n+1 for n+1 ≤ N
  std::vector<std::vector<std::vector<int>>> degen;
  std::vector<std::vector<char>> degenerate;

  void mark_degenerate();
};

// Exhaustive check of all simplicial identities inside the truncation;
// returns an empty string or the first failure.
std::string check_simplicial_identities(const TruncSimplicialSet& X);

struct Nerve {
  TwoCatPtr cat;
  int N = 0;
  std::vector<std::vector<Simplex>> simplices;
  std::vector<KeyIndex> index;
  TruncSimplicialSet sset;

  int find(int p, const Simplex& x) const { return key_find(index[p], x); }
};

Nerve nerve(TwoCatPtr D, int N);

// Simplicial map induced by a normal pseudofunctor; map[n][x].
std::vector<std::vector<int>> nerve_map(const Nerve& A, const Nerve& B, const NormalPseudofunctor& F);

std::string simplex_name(const TwoCategory& D, int p, const Simplex& x);

}  // namespace twocat
