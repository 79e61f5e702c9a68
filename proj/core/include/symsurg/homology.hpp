#pragma once

#include "symsurg/integers.hpp"

#include <array>
#include <string>
#include <vector>

namespace symsurg {

// One torsion summand (Z/modulus)^copies of the second homology of a
// Seifert total space; copies is twice the genus of the isotropy surface.
struct TorsionBlock {
  Int modulus;
  Int copies;

  bool operator==(const TorsionBlock&) const = default;
};

struct HomologyReport {
  // whether H_1(M, Z) = 0, together with the three conditions behind it:
  // [0] H_1(X, Z) = 0, [1] surjectivity onto the cyclic sum, [2] primitivity
  // of the integral Chern class of the quotient circle bundle
  bool h1_zero = false;
  std::array<bool, 3> conditions{{false, false, false}};
  std::vector<std::string> reasons;

  // H_2(M, Z) = Z^rank + torsion
  Int rank = 0;
  std::vector<TorsionBlock> torsion;

  Int torsion_order() const;
};

} // namespace symsurg
