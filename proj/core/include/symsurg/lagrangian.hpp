#pragma once

#include "symsurg/poly.hpp"

#include <string>
#include <vector>

namespace symsurg {

struct ConfigCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct LagrangianConfigReport {
  std::vector<ConfigCheck> checks;
  bool all_pass = false;
};

// Verifies the fixed configuration of two Lagrangian cylinders and two
// Lagrangian tori in the complement Y of three disjoint standard tori in the
// 4-torus, entirely in exact arithmetic. The scales d (the form's tilt) and
// e (the tube radius) are kept symbolic and ordered 0 < e << d << 1;
// inequalities are certified by explicit decompositions into squares,
// manifestly nonnegative angle factors, and scale-positive remainders.
LagrangianConfigReport verify_lagrangian_config();

} // namespace symsurg
