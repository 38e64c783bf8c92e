#pragma once

#include "twocat/lattice.hpp"
#include "twocat/nerve.hpp"

namespace twocat {

// Normalized chains: nondegenerate simplices, alternating face sums with
// degenerate faces dropped.
struct ChainComplex {
  int N = 0;
  std::vector<std::vector<int>> basis;  // per level: simplex indices
  std::vector<std::vector<int>> pos;    // per level: simplex → basis position or -1
  std::vector<SparseIntMatrix> d;       // d[n]: C_n → C_{n-1}, n ≥ 1

  int rank(int n) const { return int(basis[n].size()); }
};

ChainComplex chain_complex(const TruncSimplicialSet& X);
// Returns an empty string when ∂∘∂ = 0 in every degree.
std::string check_boundary_squared(const ChainComplex& C);

// H_n with integer coefficients; requires n ≤ N − 1.
FGAbGroup homology(const TruncSimplicialSet& X, int n);
FGAbGroup homology(const ChainComplex& C, int n);
// H_n with explicit cycle representatives.
Subquotient homology_with_generators(const ChainComplex& C, int n);
// Matrix of a simplicial map on normalized n-chains.
IntMatrix chain_map(const ChainComplex& A, const ChainComplex& B, const std::vector<int>& map_n, int n);

void require_trusted(int n, int N);

// Local coefficient system on a truncated simplicial set: a presented group
// Z^gens(x) / rel(x) per simplex, and matrices for every face and
// degeneracy operator.
struct LocalCoeffSystem {
  std::vector<std::vector<int>> gens;
  std::vector<std::vector<IntMatrix>> rel;
  std::vector<std::vector<std::vector<IntMatrix>>> face;   // face[n][i][x]: gens(d_i x) × gens(x)
  std::vector<std::vector<std::vector<IntMatrix>>> degen;  // degen[n][i][x]: gens(s_i x) × gens(x)
};

LocalCoeffSystem constant_system(const TruncSimplicialSet& X, const FGAbGroup& A);
// Functoriality on the generating operators (simplicial identities up to
// the relations); empty string on success.
std::string check_functoriality(const TruncSimplicialSet& X, const LocalCoeffSystem& L);
FGAbGroup homology_local(const TruncSimplicialSet& X, const LocalCoeffSystem& L, int n);
bool is_morphism_inverting(const TruncSimplicialSet& X, const LocalCoeffSystem& L);

// Homology at the middle term of presented modules
//   (Z^a / R_out) → (Z^g / rel) → (Z^c / rel_prev)
// with d_out: Z^a → Z^g and d_in: Z^g → Z^c; the differentials must
// respect the relations.
FGAbGroup homology_presented(const IntMatrix& d_in, const IntMatrix& d_out, const IntMatrix& rel_prev,
                             const IntMatrix& rel, int g);

// Presentation Z^k / diag(orders) of a subquotient's group.
IntMatrix order_relations(const Subquotient& q);

}  // namespace twocat
