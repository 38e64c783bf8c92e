#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace twocat {

using Int = mpz_class;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}
  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& operator()(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
  const Int& operator()(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& b) const;
  bool operator==(const IntMatrix& b) const;
  bool operator!=(const IntMatrix& b) const { return !(*this == b); }
  bool is_zero() const;
  IntMatrix transpose() const;
  IntMatrix columns(int from, int to) const;
  IntMatrix rows_range(int from, int to) const;
  // [A | B] and [A ; B].
  static IntMatrix hcat(const IntMatrix& a, const IntMatrix& b);
  static IntMatrix vcat(const IntMatrix& a, const IntMatrix& b);
  std::vector<Int> column(int j) const;
  std::vector<Int> apply(const std::vector<Int>& v) const;
  std::string str() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

// Row-wise sparse integer matrix with small entries.
struct SparseIntMatrix {
  int rows = 0, cols = 0;
  std::vector<std::vector<std::pair<int, long>>> entries;  // per row, sorted by column

  SparseIntMatrix() = default;
  SparseIntMatrix(int r, int c) : rows(r), cols(c), entries(r) {}
  void add(int i, int j, long v);
  IntMatrix dense() const;
};

// S·M·T = D with S, T unimodular and D diagonal, d_1 | d_2 | … ≥ 0.
struct SmithForm {
  IntMatrix S, D, T, Sinv;
  std::vector<Int> diag;  // the nonzero diagonal entries
  int rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& M, bool transforms = true);
// Nonzero invariant factors only; sparse unit-pivot elimination first.
std::vector<Int> invariant_factors(const IntMatrix& M);
std::vector<Int> invariant_factors(const SparseIntMatrix& M);
int rank(const IntMatrix& M);
int rank(const SparseIntMatrix& M);

// Basis of the lattice {x : Mx = 0} as columns.
IntMatrix kernel_basis(const IntMatrix& M);

// Finitely generated abelian group Z^r ⊕ Z/t_1 ⊕ … with t_1 | t_2 | …, t_i ≥ 2.
struct FGAbGroup {
  int rank = 0;
  std::vector<Int> torsion;

  bool operator==(const FGAbGroup& o) const { return rank == o.rank && torsion == o.torsion; }
  bool operator!=(const FGAbGroup& o) const { return !(*this == o); }
  bool trivial() const { return rank == 0 && torsion.empty(); }
  std::string str() const;
};

FGAbGroup group_from_factors(int generators, const std::vector<Int>& factors);
// Z^gens / column span of rel.
FGAbGroup cokernel(const IntMatrix& rel, int gens);
FGAbGroup direct_sum(const FGAbGroup& a, const FGAbGroup& b);

// B/A for lattices A ⊆ B ⊆ Z^n given by generating columns. Elements of B
// carry coordinates in a fixed basis of B; the quotient is presented by
// `relations` in those coordinates.
struct Subquotient {
  int ambient = 0;
  IntMatrix basis;      // n × k
  IntMatrix relations;  // k × m
  FGAbGroup group;
  // Row operations taking basis coordinates to a diagonal presentation.
  IntMatrix snf_S;
  std::vector<Int> orders;  // per canonical generator; 0 = infinite order
  IntMatrix generators;     // ambient representatives of the canonical generators

  // Coordinates of v ∈ B (throws if v ∉ B).
  std::vector<Int> coords(const std::vector<Int>& v) const;
  // Reduced canonical coordinates of the class of v ∈ B.
  std::vector<Int> canonical(const std::vector<Int>& v) const;

 private:
  friend Subquotient subquotient(const IntMatrix&, const IntMatrix&, int);
  IntMatrix bS_;
  std::vector<Int> bdiag_;
  std::vector<int> kept_;
};

Subquotient subquotient(const IntMatrix& Bgens, const IntMatrix& Agens, int ambient);

// Matrix of the map induced on canonical generators by a linear map
// C: ambient(from) → ambient(to) carrying B into B' and A into A'.
IntMatrix induced_map(const Subquotient& from, const Subquotient& to, const IntMatrix& C);
// Whether an induced map on canonical generators is an isomorphism.
bool induced_is_iso(const Subquotient& from, const Subquotient& to, const IntMatrix& M);

}  // namespace twocat
