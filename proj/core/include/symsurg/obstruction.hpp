#pragma once

#include "symsurg/homology.hpp"

#include <string>
#include <vector>

namespace symsurg {

// b disjoint complex curves spanning the homology of a candidate smooth
// Kahler surface: all genera >= 1, intersection form of signature (1, b-1),
// so exactly one positive self-intersection and no zeroes.
struct CurveConfig {
  std::vector<Int> genera;
  std::vector<Int> self_intersections;

  int count() const { return int(genera.size()); }
  void validate() const;
};

// Coefficients of K_S in the curve basis: (2 g_i - 2 - D_i^2) / D_i^2.
RatVec canonical_coeffs(const CurveConfig& c);

// K_S^2 = sum_i (2 g_i - 2 - D_i^2)^2 / D_i^2, exact.
Rat k_squared(const CurveConfig& c);

// Noether: 12 chi(O_S) = K_S^2 + c_2(S) with chi(O_S) = 1 and c_2 = 2 + b,
// so K_S^2 = 10 - b.
Int noether_k_squared(const Int& b);

// The quadratic m1^2 - (4 g1 + 6) m1 + 4 (g1 - 1)^2 forced nonnegative on
// the positive curve by the adjunction bound.
Int m1_quadratic(const Int& g1, const Int& m1);

// Exact root-branch membership, radicals compared by integer squaring:
// m1 >= 2 g1 + 3 + sqrt(20 g1 + 5), resp. m1 <= 2 g1 + 3 - sqrt(20 g1 + 5).
bool m1_upper_branch(const Int& g1, const Int& m1);
bool m1_lower_branch(const Int& g1, const Int& m1);

// For 1 <= g1 <= 3 the lower branch holds no positive integer, so the
// quadratic forces m1 >= 2 g1 + 3.
Int m1_lower_bound(const Int& g1);

// Slope of the induced relatively minimal genus-g pencil, exact:
// (2 - b - m1 + 8 g) / g.
Rat fibration_slope(const Int& b, const Int& g, const Int& m1);

// true iff 4 - 4/g <= slope, i.e. 4 g - 4 <= 2 - b - m1 + 8 g. Needs g >= 2.
bool slope_check(const Int& b, const Int& g, const Int& m1);

struct DerivationStep {
  std::string name;
  std::string statement;
};

struct ObstructionVerdict {
  bool obstructed = false;
  std::vector<DerivationStep> chain;
  std::vector<std::string> hypothesis_report;

  const char* verdict() const { return obstructed ? "obstructed" : "inconclusive"; }
};

// Decides whether b disjoint complex curves with the given genera (one per
// curve) can span the homology of a smooth Kahler surface. Under the
// hypotheses that at least two genera exceed 1 and g = max genus is at most
// 3, the chain Noether -> adjunction -> quadratic -> slope forces b <= 2g+3;
// a larger b is obstructed. A failed hypothesis or a consistent b is
// inconclusive, never "unobstructed". genus_one_remark opts into the
// all-genus-one variant, where m1 >= 1 alone forces b <= 9.
ObstructionVerdict obstruction_verdict(const Int& b, const std::vector<Int>& genera,
                                       bool genus_one_remark = false);

// From H_1(M, Z) = 0 and H_2(M, Z) = Z^rank + sum (Z/p^i)^(2 g_i) with one
// block per exponent 1..rank+1 of one prime, derives the base data forced on
// any semi-regular Sasakian structure (rank + 1 disjoint curves with those
// genera) and runs obstruction_verdict on it.
ObstructionVerdict sasakian_excludability(bool h1_zero, const Int& rank,
                                          const std::vector<TorsionBlock>& torsion,
                                          bool genus_one_remark = false);

} // namespace symsurg
