#pragma once

#include "symsurg/matrix.hpp"

namespace symsurg {

struct SignatureTriple {
  int positive = 0;
  int zero = 0;
  int negative = 0;
  bool operator==(const SignatureTriple&) const = default;
};

// Inertia of a symmetric integer matrix, by exact rational LDL^T with
// symmetric pivoting. A zero off-diagonal block is handled by the
// congruence identity that adds one row/column pair into another.
SignatureTriple signature(const IntMat& gram);

// gcd of the entries is 1. The zero vector has no well-defined divisibility
// and is rejected ("indeterminate primitivity").
bool is_primitive(const IntVec& v);

// Decides whether the map Z^rows -> sum_i Z/m_i with matrix a (column i maps
// onto the Z/m_i factor) is onto: the block [a^T | diag(m)] must have all
// invariant factors 1. Each m_i >= 1.
bool surjects_onto_cyclic_sum(const IntMat& a, const IntVec& m);

} // namespace symsurg
