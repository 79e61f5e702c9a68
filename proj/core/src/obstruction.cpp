#include "symsurg/obstruction.hpp"

#include <algorithm>

namespace symsurg {
namespace {

Rat exact_quotient(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

} // namespace

void CurveConfig::validate() const {
  if (genera.empty()) throw input_error("the curve count must be positive");
  if (genera.size() != self_intersections.size())
    throw input_error("one self-intersection per curve is required");
  int positive = 0;
  for (const Int& g : genera)
    if (g < 1) throw input_error("every curve must have genus at least 1");
  for (const Int& s : self_intersections) {
    if (s == 0)
      throw input_error("a curve of self-intersection zero breaks the signature (1, b-1) shape");
    if (s > 0) positive += 1;
  }
  if (positive != 1)
    throw input_error("the intersection form has signature (1, b-1): exactly one curve must "
                      "have positive self-intersection, found " + std::to_string(positive));
}

RatVec canonical_coeffs(const CurveConfig& c) {
  c.validate();
  RatVec coeffs;
  for (size_t i = 0; i < c.genera.size(); ++i)
    coeffs.push_back(exact_quotient(2 * c.genera[i] - 2 - c.self_intersections[i],
                                    c.self_intersections[i]));
  return coeffs;
}

Rat k_squared(const CurveConfig& c) {
  c.validate();
  Rat total = 0;
  for (size_t i = 0; i < c.genera.size(); ++i) {
    Int num = 2 * c.genera[i] - 2 - c.self_intersections[i];
    total += exact_quotient(num * num, c.self_intersections[i]);
  }
  return total;
}

Int noether_k_squared(const Int& b) {
  if (b < 1) throw input_error("the curve count must be positive");
  return 10 - b;
}

Int m1_quadratic(const Int& g1, const Int& m1) {
  return m1 * m1 - (4 * g1 + 6) * m1 + 4 * (g1 - 1) * (g1 - 1);
}

bool m1_upper_branch(const Int& g1, const Int& m1) {
  Int t = m1 - (2 * g1 + 3);
  return t >= 0 && t * t >= 20 * g1 + 5;
}

bool m1_lower_branch(const Int& g1, const Int& m1) {
  Int t = 2 * g1 + 3 - m1;
  return t >= 0 && t * t >= 20 * g1 + 5;
}

Int m1_lower_bound(const Int& g1) {
  if (g1 < 1) throw input_error("the positive curve needs genus at least 1");
  for (Int m1 = 1; m1 <= 2 * g1 + 3; ++m1)
    if (m1_lower_branch(g1, m1)) throw input_error("second branch not excluded");
  return 2 * g1 + 3;
}

Rat fibration_slope(const Int& b, const Int& g, const Int& m1) {
  if (g < 1) throw input_error("the pencil genus must be positive");
  return exact_quotient(2 - b - m1 + 8 * g, g);
}

bool slope_check(const Int& b, const Int& g, const Int& m1) {
  if (g < 2)
    throw input_error("the slope inequality needs a relatively minimal pencil of genus at least 2");
  return 4 * g - 4 <= 2 - b - m1 + 8 * g;
}

ObstructionVerdict obstruction_verdict(const Int& b, const std::vector<Int>& genera,
                                       bool genus_one_remark) {
  if (b < 1) throw input_error("the curve count must be positive");
  if (Int(genera.size()) != b) throw input_error("one genus per curve is required");
  for (const Int& g : genera)
    if (g < 1) throw input_error("every curve must have genus at least 1");

  ObstructionVerdict v;
  Int g = *std::max_element(genera.begin(), genera.end());
  long above = std::count_if(genera.begin(), genera.end(), [](const Int& x) { return x > 1; });

  bool two_high = above >= 2;
  bool low_top = g <= 3;
  v.hypothesis_report.push_back(
      two_high ? "at least two curves have genus above 1 (" + std::to_string(above) + " of " +
                     to_string(b) + ")"
               : "hypothesis fails: only " + std::to_string(above) +
                     " curve(s) have genus above 1");
  v.hypothesis_report.push_back(low_top
                                    ? "the maximum genus " + to_string(g) + " is at most 3"
                                    : "hypothesis fails: the maximum genus " + to_string(g) +
                                          " exceeds 3");

  if (two_high && low_top) {
    Int m1 = m1_lower_bound(g);
    Int bound = 2 * g + 3;
    v.chain.push_back({"noether", "K_S^2 = 10 - b = " + to_string(noether_k_squared(b))});
    v.chain.push_back(
        {"adjunction",
         "each negative curve adds at most -1 to K_S^2 and a negative curve of genus above 1 "
         "adds at most -3, so the positive curve obeys (2g - 2 - m1)^2 >= 10 m1"});
    v.chain.push_back({"quadratic", "m1^2 - " + to_string(Int(4 * g + 6)) + " m1 + " +
                                        to_string(Int(4 * (g - 1) * (g - 1))) +
                                        " >= 0 with the lower branch excluded by integer "
                                        "squaring, so m1 >= " +
                                        to_string(m1)});
    v.chain.push_back({"slope", "a relatively minimal genus-" + to_string(g) +
                                    " pencil satisfies 4 - 4/g <= (2 - b - m1 + 8g)/g; with "
                                    "m1 >= " +
                                    to_string(m1) + " this forces b <= " + to_string(bound)});
    if (b > bound) {
      v.obstructed = true;
      v.chain.push_back({"verdict", "b = " + to_string(b) + " > " + to_string(bound) +
                                        ": no smooth Kahler surface carries the configuration"});
    } else {
      v.chain.push_back({"verdict", "b = " + to_string(b) + " <= " + to_string(bound) +
                                        ": the chain is consistent and decides nothing"});
    }
    return v;
  }

  if (g == 1 && genus_one_remark) {
    v.hypothesis_report.push_back(
        "all curves have genus 1; the variant bound is enabled by explicit assumption");
    v.chain.push_back({"noether", "K_S^2 = 10 - b = " + to_string(noether_k_squared(b))});
    v.chain.push_back(
        {"pencil", "the positive torus has m1 >= 1, enough for a pencil of genus 1"});
    v.chain.push_back({"slope", "relative minimality forces 0 <= 2 - b - m1 + 8, so b <= 9"});
    if (b > 9) {
      v.obstructed = true;
      v.chain.push_back({"verdict", "b = " + to_string(b) +
                                        " > 9: no smooth Kahler surface carries the "
                                        "configuration"});
    } else {
      v.chain.push_back({"verdict", "b = " + to_string(b) +
                                        " <= 9: the chain is consistent and decides nothing"});
    }
    return v;
  }
  if (g == 1)
    v.hypothesis_report.push_back(
        "all curves have genus 1; the variant bound applies only by explicit assumption");
  return v;
}

ObstructionVerdict sasakian_excludability(bool h1_zero, const Int& rank,
                                          const std::vector<TorsionBlock>& torsion,
                                          bool genus_one_remark) {
  if (!h1_zero) throw input_error("corollary hypotheses unmet: H_1(M, Z) must vanish");
  if (rank < 0) throw input_error("corollary hypotheses unmet: negative rank");
  Int b = rank + 1;
  if (Int(torsion.size()) != b)
    throw input_error("corollary hypotheses unmet: " + std::to_string(torsion.size()) +
                      " torsion block(s) cannot realize the exponents 1.." + to_string(b));

  std::vector<TorsionBlock> sorted = torsion;
  std::sort(sorted.begin(), sorted.end(),
            [](const TorsionBlock& x, const TorsionBlock& y) { return x.modulus < y.modulus; });
  Int p = sorted.front().modulus;
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
    throw input_error("corollary hypotheses unmet: the smallest modulus " + to_string(p) +
                      " is not prime");
  Int expect = 1;
  std::vector<Int> genera;
  for (const TorsionBlock& t : sorted) {
    expect *= p;
    if (t.modulus != expect)
      throw input_error("corollary hypotheses unmet: the moduli are not p^1..p^" + to_string(b) +
                        " for p = " + to_string(p));
    if (t.copies < 2 || t.copies % 2 != 0)
      throw input_error("corollary hypotheses unmet: a (Z/" + to_string(t.modulus) +
                        ") block has " + to_string(t.copies) +
                        " copies, not twice a positive genus");
    genera.push_back(t.copies / 2);
  }

  ObstructionVerdict v = obstruction_verdict(b, genera, genus_one_remark);
  std::vector<std::string> forced = {
      "H_1(M, Z) = 0 with torsion exponents 1.." + to_string(b) + " of the prime " +
          to_string(p) + " forces any semi-regular Sasakian base X to have H_1(X, Z) = 0, "
          "H_2(X, Z) = Z^" + to_string(b) + ", and " + to_string(b) +
          " disjoint ramification curves of those genera",
      "a semi-regular Sasakian base is a smooth Kahler surface whose ramification curves are "
      "smooth complex curves",
  };
  v.hypothesis_report.insert(v.hypothesis_report.begin(), forced.begin(), forced.end());
  return v;
}

} // namespace symsurg
