#pragma once

#include "symsurg/matrix.hpp"

namespace symsurg {

// u * input * v = d, with u, v unimodular and d diagonal with nonnegative
// entries in divisibility order d1 | d2 | ... Every decomposition returned
// by smith_normal_form has been re-verified against its input.
struct SmithDecomposition {
  IntMat u;
  IntMat d;
  IntMat v;
  int rank = 0;
  // the nonzero diagonal entries, in order
  IntVec invariant_factors;
};

SmithDecomposition smith_normal_form(const IntMat& a);

// Cokernel of the column map a : Z^cols -> Z^rows.
struct Cokernel {
  // invariant factors > 1, in divisibility order
  IntVec torsion;
  int free_rank = 0;
};

Cokernel cokernel(const IntMat& a);

} // namespace symsurg
