#pragma once

#include "symsurg/homology.hpp"
#include "symsurg/model.hpp"

namespace symsurg {

// Local model C^2/Z_m of a cyclic orbifold point, for the action
// xi . (z1, z2) = (xi^j1 z1, xi^j2 z2) with xi a primitive m-th root of 1.
struct LocalModel {
  Int m = 1;
  Int j1 = 0, j2 = 0;
  // multiplicities of the two coordinate isotropy surfaces: gcd(j_i, m)
  Int m1 = 1, m2 = 1;
  // order of the fundamental group of the link; m1 * m2 * d = m
  Int d = 1;
  // 'a' isolated singular point, 'b' two surfaces + smooth, 'c' two surfaces
  // + singular, 'd' one surface + smooth, 'e' one surface + singular;
  // '-' when m = 1 and the point is regular
  char label = '-';
  bool smooth = true;

  bool regular() const { return m == 1; }
};

LocalModel classify_local_model(const Int& m, const Int& j1, const Int& j2);

struct IsotropySpec {
  std::string surface;
  Int multiplicity;
};

// A manifold ledger with validated isotropy data: every declared surface is
// symplectic with multiplicity >= 2, intersections are transverse and
// positive, and multiplicities of intersecting surfaces are coprime. Every
// point then falls into a smooth local model, so the underlying space is a
// topological manifold and the orbifold is semi-regular.
struct SymplecticOrbifold {
  ManifoldModel base;
  std::vector<IsotropySpec> isotropy;
  bool semi_regular = false;
};

SymplecticOrbifold validate_orbifold(const ManifoldModel& m,
                                     const std::vector<IsotropySpec>& iso);

// Orbit invariant (D, m, j) of a Seifert bundle along an isotropy surface,
// with the inverse exponent b kept alongside: j * b = 1 mod m.
struct OrbitInvariant {
  std::string surface;
  Int m;
  Int j;
  Int b;
};

struct SeifertBundle {
  SymplecticOrbifold base;
  std::vector<OrbitInvariant> invariants;
  // c1 of the background line bundle B, in the tracked class basis
  IntVec background;
  // lcm of the multiplicities
  Int m_x = 1;
};

// One exponent per isotropy surface, each coprime to its multiplicity and
// normalized into (0, m); the background class has one entry per tracked
// class of the base.
SeifertBundle make_seifert_bundle(const SymplecticOrbifold& orb, const IntVec& exponents,
                                  const IntVec& background);

// c1(M/X) = c1(B) + sum_i (b_i / m_i) [D_i], exact, in the tracked basis.
RatVec chern_class(const SeifertBundle& s);

// c1(M/mu) = m_X * c1(M/X), an integral class.
IntVec chern_class_multiple(const SeifertBundle& s);

// The three conditions equivalent to H_1(M, Z) = 0 for a semi-regular bundle:
// H_1(X, Z) = 0, the tracked classes surject onto sum_i H^2(D_i, Z/m_i)
// under S -> (S . D_i mod m_i), and c1(M/mu) is primitive. Only the h1 part
// of the report is filled in.
HomologyReport kollar_h1_check(const SeifertBundle& s);

// Full second homology of the total space: rank b2(X) - 1 plus one block
// (Z/m_i)^(2 g_i) per isotropy surface of positive genus.
HomologyReport homology_of_total(const SeifertBundle& s);

struct TwistResult {
  SeifertBundle bundle;
  // the background shift a that was applied
  IntVec twist;
  // the prescribed symplectic direction, recorded with the result
  RatVec omega;
  std::vector<std::string> notes;
};

// Search for a background shift a making c1(M/mu) primitive, scanning integer
// vectors by increasing sup-norm with lexicographic ties, up to the bound.
// Requires b2(X) >= 3 and a primitive isotropy part sum_i b_i (m_X/m_i) [D_i].
TwistResult choose_primitive_twist(const SeifertBundle& s, const RatVec& omega,
                                   int bound = 8);

struct KContactCertificate {
  std::vector<std::string> hypotheses;
  RatVec chern;
};

// Certifies that the total space carries a K-contact structure: the base is a
// validated smooth symplectic orbifold and c1(M/X) equals the prescribed
// rational symplectic class exactly.
KContactCertificate certify_kcontact(const SeifertBundle& s, const RatVec& omega_class);

} // namespace symsurg
