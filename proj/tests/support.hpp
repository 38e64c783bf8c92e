#pragma once

#include <doctest.h>

#include "twocat/fixtures.hpp"
#include "twocat/homology.hpp"

namespace twocat::test {

// H_0..H_{n} of a category's nerve at truncation N, as canonical strings.
inline std::vector<std::string> hom(TwoCatPtr c, int n, int N) {
  const Nerve nv = nerve(c, N);
  const ChainComplex C = chain_complex(nv.sset);
  std::vector<std::string> out;
  for (int k = 0; k <= n; ++k) out.push_back(homology(C, k).str());
  return out;
}

inline FGAbGroup grp(int rank, std::vector<long> torsion = {}) {
  FGAbGroup g;
  g.rank = rank;
  for (long t : torsion) g.torsion.push_back(Int(t));
  return g;
}

}  // namespace twocat::test
