#include "oracles.hpp"
#include "symsurg/lagrangian.hpp"
#include "symsurg/lattice.hpp"
#include "symsurg/obstruction.hpp"
#include "symsurg/seifert.hpp"
#include "symsurg/smith.hpp"
#include "symsurg/surgery.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <string>
#include <vector>

using namespace symsurg;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("criterion %d: %s - %s\n", criterion, pass ? "pass" : "FAIL", detail.c_str());
  if (!pass) ++failures;
}

std::vector<int> expected_genera() {
  std::vector<int> g;
  for (int rep = 0; rep < 3; ++rep) {
    g.insert(g.end(), 9, 1);
    g.push_back(3);
  }
  for (int rep = 0; rep < 2; ++rep) g.insert(g.end(), {1, 1, 2});
  return g;
}

void criterion_1_rebuild_z() {
  BuildResult z = build_x("z");
  const ManifoldModel& m = z.manifold;
  bool pass = z.all_pass && m.euler_characteristic == 36 && m.b2() && *m.b2() == 34 &&
              m.pi1.state == Pi1State::yes;
  report(1, pass, "Z has chi = 36, b2 = 34, and is simply connected");
}

void criterion_2_rebuild_x(const BuildResult& x) {
  const ManifoldModel& m = x.manifold;
  std::vector<int> want_genus = expected_genera();
  std::vector<int> want_self;
  for (int rep = 0; rep < 3; ++rep) {
    want_self.insert(want_self.end(), 9, -1);
    want_self.push_back(1);
  }
  for (int rep = 0; rep < 2; ++rep) want_self.insert(want_self.end(), {-1, -1, 1});

  bool pass = x.all_pass && m.b2() && *m.b2() == 36 && m.surfaces.size() == 36;
  for (int i = 0; pass && i < 36; ++i) {
    pass = m.surfaces[size_t(i)].genus == want_genus[size_t(i)] &&
           m.gram.at(i, i) == want_self[size_t(i)] &&
           m.surfaces[size_t(i)].has(SurfaceFlag::symplectic);
    for (int j = 0; pass && j < 36; ++j) pass = i == j || m.gram.at(i, j) == 0;
    for (int j = i + 1; pass && j < 36; ++j)
      pass = m.asserted_disjoint(m.surfaces[size_t(i)].id, m.surfaces[size_t(j)].id);
  }
  pass = pass && abs(m.gram.det()) == 1 && signature(m.gram) == SignatureTriple{5, 0, 31};

  bool note_reported = false;
  for (const std::string& n : x.notes)
    note_reported = note_reported || n.find("genus3-self-intersection-sign") == 0;
  bool construction_sign_used =
      m.self_intersection("S10") == 1 && m.self_intersection("S20") == 1 &&
      m.self_intersection("S30") == 1;
  pass = pass && note_reported && construction_sign_used;

  report(2, pass,
         "X has b2 = 36, the stated genus vector, diagonal unimodular Gram of signature "
         "(5, 0, 31), 36 pairwise disjoint symplectic surfaces, and the genus-3 "
         "self-intersection sign discrepancy is reported with the construction value +1 used");
}

HomologyReport seifert_homology(const ManifoldModel& m, int p) {
  std::vector<IsotropySpec> iso;
  IntVec exponents, background;
  Int mi = 1;
  for (const SurfaceClass& s : m.surfaces) {
    mi *= p;
    iso.push_back({s.id, mi});
    exponents.push_back(1);
    background.push_back(0);
  }
  SymplecticOrbifold orb = validate_orbifold(m, iso);
  SeifertBundle bundle = make_seifert_bundle(orb, exponents, background);
  TwistResult t = choose_primitive_twist(bundle, chern_class(bundle));
  return homology_of_total(t.bundle);
}

HomologyReport criterion_3_seifert(const ManifoldModel& m) {
  std::vector<int> genera = expected_genera();
  bool pass = true;
  HomologyReport for_p2;
  for (int p : {2, 3, 5}) {
    HomologyReport h = seifert_homology(m, p);
    bool ok = h.h1_zero && h.rank == 35 && h.torsion.size() == 36;
    Int mod = 1;
    for (size_t i = 0; ok && i < 36; ++i) {
      mod *= p;
      ok = h.torsion[i].modulus == mod && h.torsion[i].copies == 2 * genera[i];
    }
    pass = pass && ok;
    if (p == 2) for_p2 = h;
  }
  report(3, pass,
         "for p in {2, 3, 5} the Seifert 5-manifold has H_1 = 0 and H_2 = Z^35 + "
         "sum_i (Z/p^i)^(2 g_i) over i = 1..36");
  return for_p2;
}

void criterion_4_obstruction(const HomologyReport& h) {
  bool values = noether_k_squared(36) == -26 && m1_lower_bound(3) == 9 &&
                !slope_check(36, 3, 9) && fibration_slope(36, 3, 9) == Rat(-19, 3);

  ObstructionVerdict v = sasakian_excludability(h.h1_zero, h.rank, h.torsion);
  bool chain = v.obstructed && v.chain.size() == 5;
  if (chain) {
    chain = v.chain[0].statement.find("10 - b = -26") != std::string::npos &&
            v.chain[2].statement.find("m1 >= 9") != std::string::npos &&
            v.chain[4].statement.find("36 > 9") != std::string::npos;
  }

  std::vector<Int> boundary{3, 3, 1, 1, 1, 1, 1, 1, 1};
  bool inconclusive = !obstruction_verdict(9, boundary).obstructed;

  report(4, values && chain && inconclusive,
         "the chain gives K^2 = 10 - 36 = -26, m1 >= 9, slope failure 8 > -19, verdict "
         "obstructed; the boundary case b = 9, g = 3 stays inconclusive");
}

void criterion_5_local_models() {
  long points = 0, violations = 0;
  for (long m = 1; m <= 60; ++m)
    for (long j1 = 0; j1 < m; ++j1)
      for (long j2 = 0; j2 < m; ++j2) {
        if (std::gcd(std::gcd(j1, j2), m) != 1) continue;
        LocalModel lm = classify_local_model(m, j1, j2);
        ++points;
        char expected;
        if (m == 1)
          expected = '-';
        else if (lm.m1 == 1 && lm.m2 == 1)
          expected = 'a';
        else if (lm.m1 > 1 && lm.m2 > 1)
          expected = lm.d == 1 ? 'b' : 'c';
        else
          expected = lm.d == 1 ? 'd' : 'e';
        bool ok = lm.m1 * lm.m2 * lm.d == lm.m && gcd(lm.m1, lm.m2) == 1 &&
                  lm.smooth == (lm.d == 1) && lm.label == expected &&
                  lm.regular() == (m == 1);
        if (!ok) ++violations;
      }
  report(5, violations == 0,
         "all " + std::to_string(points) + " effective actions with m <= 60 fall into cases "
         "a-e with m1 m2 d = m and smooth iff d = 1; " + std::to_string(violations) +
         " violations");
}

void criterion_6_oracles() {
  long mismatches = 0;

  auto rng = oracles::rng(0xacce9701);
  for (int iter = 0; iter < 500; ++iter) {
    std::uniform_int_distribution<int> dim(1, 5);
    int rows = dim(rng), cols = dim(rng);
    IntMat a = oracles::random_matrix(rng, rows, cols, -9, 9);
    SmithDecomposition s = smith_normal_form(a);
    IntVec expect = oracles::smith_diagonal_by_minors(a);
    int n = std::min(rows, cols);
    for (int i = 0; i < n; ++i)
      if (s.d.at(i, i) != expect[size_t(i)]) ++mismatches;
  }

  int done = 0;
  while (done < 200) {
    std::uniform_int_distribution<int> dim(1, 3);
    std::uniform_int_distribution<int> modulus(1, 12);
    int rows = dim(rng), cols = dim(rng);
    IntVec m(static_cast<size_t>(cols));
    long prod = 1;
    for (int i = 0; i < cols; ++i) {
      m[size_t(i)] = modulus(rng);
      prod *= m[size_t(i)].get_si();
    }
    if (prod > 10000) continue;
    ++done;
    IntMat a = oracles::random_matrix(rng, rows, cols, -10, 10);
    if (surjects_onto_cyclic_sum(a, m) != oracles::surjects_by_enumeration(a, m)) ++mismatches;
  }

  for (int g1 = 1; g1 <= 3; ++g1) {
    if (m1_lower_bound(g1) != 2 * g1 + 3) ++mismatches;
    for (int m1 = 1; m1 < 2 * g1 + 3; ++m1)
      if (m1_quadratic(g1, m1) >= 0) ++mismatches;
    for (int m1 = -20; m1 <= 60; ++m1)
      if ((m1_quadratic(g1, m1) >= 0) != (m1_upper_branch(g1, m1) || m1_lower_branch(g1, m1)))
        ++mismatches;
  }

  report(6, mismatches == 0,
         "smith form vs determinantal divisors (500 matrices), surjectivity vs image "
         "enumeration (200 instances, products <= 10^4), quadratic branch exclusion for "
         "g1 <= 3; " + std::to_string(mismatches) + " mismatches");
}

void criterion_7_lagrangian() {
  LagrangianConfigReport lag = verify_lagrangian_config();
  bool pass = lag.all_pass && lag.checks.size() == 28;
  bool single_point = false, transverse = false;
  for (const ConfigCheck& c : lag.checks) {
    pass = pass && c.pass;
    single_point = single_point || (c.name == "c1-t1-single-point" && c.pass);
    transverse = transverse || (c.name == "c1-t1-transverse" && c.pass);
  }
  report(7, pass && single_point && transverse,
         "all 28 exact checks pass: the four Lagrangian identities, the tube clearances, "
         "the pairwise disjointness, and the single transverse point of C1 and T1");
}

} // namespace

int main() {
  criterion_1_rebuild_z();
  BuildResult x = build_x();
  criterion_2_rebuild_x(x);
  HomologyReport h = criterion_3_seifert(x.manifold);
  criterion_4_obstruction(h);
  criterion_5_local_models();
  criterion_6_oracles();
  criterion_7_lagrangian();

  if (failures == 0)
    std::printf("all 7 criteria pass\n");
  else
    std::printf("%d criteria FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
