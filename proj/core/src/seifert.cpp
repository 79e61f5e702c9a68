#include "symsurg/seifert.hpp"

#include "symsurg/lattice.hpp"

#include <set>

namespace symsurg {
namespace {

Int reduce_mod(const Int& j, const Int& m) {
  Int r = j % m;
  if (r < 0) r += m;
  return r;
}

std::string vec_string(const IntVec& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

std::string vec_string(const RatVec& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

int index_in_base(const ManifoldModel& x, const std::string& id) {
  int idx = x.index_of(id);
  if (idx < 0) throw input_error("no tracked surface named '" + id + "'");
  return idx;
}

} // namespace

Int HomologyReport::torsion_order() const {
  Int order = 1;
  for (const TorsionBlock& t : torsion) {
    if (t.copies < 0) throw input_error("negative torsion exponent");
    Int power;
    mpz_pow_ui(power.get_mpz_t(), t.modulus.get_mpz_t(), t.copies.get_ui());
    order *= power;
  }
  return order;
}

LocalModel classify_local_model(const Int& m, const Int& j1, const Int& j2) {
  if (m < 1) throw input_error("isotropy order must be positive");
  LocalModel lm;
  lm.m = m;
  lm.j1 = reduce_mod(j1, m);
  lm.j2 = reduce_mod(j2, m);
  Int g = gcd(lm.j1, gcd(lm.j2, m));
  if (g != 1)
    throw input_error("the action is not effective: gcd(j1, j2, m) = " + to_string(g));
  if (m == 1) return lm;
  lm.m1 = gcd(lm.j1, m);
  lm.m2 = gcd(lm.j2, m);
  lm.d = m / (lm.m1 * lm.m2);
  lm.smooth = lm.d == 1;
  if (lm.m1 == 1 && lm.m2 == 1)
    lm.label = 'a';
  else if (lm.m1 > 1 && lm.m2 > 1)
    lm.label = lm.smooth ? 'b' : 'c';
  else
    lm.label = lm.smooth ? 'd' : 'e';
  return lm;
}

SymplecticOrbifold validate_orbifold(const ManifoldModel& m,
                                     const std::vector<IsotropySpec>& iso) {
  std::set<std::string> seen;
  for (const IsotropySpec& spec : iso) {
    const SurfaceClass& s = m.surface(spec.surface);
    if (!seen.insert(spec.surface).second)
      throw input_error("surface '" + spec.surface + "' is listed twice in the isotropy data");
    if (!s.has(SurfaceFlag::symplectic))
      throw input_error("isotropy surface '" + spec.surface + "' is not symplectic");
    if (spec.multiplicity < 2)
      throw input_error("isotropy multiplicity of '" + spec.surface + "' must be at least 2");
  }
  for (size_t i = 0; i < iso.size(); ++i) {
    for (size_t j = i + 1; j < iso.size(); ++j) {
      const std::string& a = iso[i].surface;
      const std::string& b = iso[j].surface;
      Int pairing = m.pairing(a, b);
      if (pairing < 0)
        throw input_error("surfaces '" + a + "' and '" + b +
                          "' meet negatively, not transversely and positively");
      Int g = gcd(iso[i].multiplicity, iso[j].multiplicity);
      if (g == 1) continue;
      if (pairing > 0)
        throw input_error("multiplicities of the intersecting surfaces '" + a + "' and '" + b +
                          "' are not coprime: gcd(" + to_string(iso[i].multiplicity) + ", " +
                          to_string(iso[j].multiplicity) + ") = " + to_string(g));
      if (!m.asserted_disjoint(a, b))
        throw input_error("surfaces '" + a + "' and '" + b +
                          "' carry non-coprime multiplicities but no disjointness certificate");
    }
  }
  SymplecticOrbifold orb;
  orb.base = m;
  orb.isotropy = iso;
  orb.semi_regular = true;
  return orb;
}

SeifertBundle make_seifert_bundle(const SymplecticOrbifold& orb, const IntVec& exponents,
                                  const IntVec& background) {
  if (!orb.semi_regular) throw input_error("the base orbifold has not been validated");
  if (exponents.size() != orb.isotropy.size())
    throw input_error("one exponent per isotropy surface is required");
  if (background.size() != orb.base.surfaces.size())
    throw input_error("the background class needs one entry per tracked class");
  SeifertBundle s;
  s.base = orb;
  s.background = background;
  for (size_t i = 0; i < orb.isotropy.size(); ++i) {
    const Int& m = orb.isotropy[i].multiplicity;
    Int j = reduce_mod(exponents[i], m);
    if (gcd(j, m) != 1)
      throw input_error("exponent " + to_string(exponents[i]) + " is not invertible modulo " +
                        to_string(m) + " on surface '" + orb.isotropy[i].surface + "'");
    s.invariants.push_back({orb.isotropy[i].surface, m, j, mod_inverse(j, m)});
    s.m_x = lcm(s.m_x, m);
  }
  return s;
}

RatVec chern_class(const SeifertBundle& s) {
  const ManifoldModel& x = s.base.base;
  RatVec c(x.surfaces.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = Rat(s.background[i]);
  for (const OrbitInvariant& inv : s.invariants) {
    Rat t(inv.b, inv.m);
    t.canonicalize();
    c[size_t(index_in_base(x, inv.surface))] += t;
  }
  return c;
}

IntVec chern_class_multiple(const SeifertBundle& s) {
  const ManifoldModel& x = s.base.base;
  IntVec c(x.surfaces.size(), Int(0));
  for (size_t i = 0; i < c.size(); ++i) c[i] = s.m_x * s.background[i];
  for (const OrbitInvariant& inv : s.invariants)
    c[size_t(index_in_base(x, inv.surface))] += inv.b * (s.m_x / inv.m);
  return c;
}

HomologyReport kollar_h1_check(const SeifertBundle& s) {
  if (!s.base.semi_regular) throw input_error("theorem hypothesis (semi-regular) unmet");
  const ManifoldModel& x = s.base.base;
  HomologyReport rep;

  if (x.pi1.state == Pi1State::yes) {
    rep.conditions[0] = true;
    rep.reasons.push_back("condition (1) holds: X is simply connected");
  } else if (x.pi1.state == Pi1State::no && x.pi1.abelian_complete) {
    if (x.pi1.free_generators.empty()) {
      rep.conditions[0] = true;
      rep.reasons.push_back("condition (1) holds: the abelianized fundamental group is trivial");
    } else {
      rep.reasons.push_back("condition (1) fails: H_1(X, Z) is free of rank " +
                            std::to_string(x.pi1.free_generators.size()));
    }
  } else {
    rep.reasons.push_back("condition (1) fails: the ledger does not pin down H_1(X, Z)");
  }

  int n = int(x.surfaces.size());
  int k = int(s.invariants.size());
  IntMat pair_mat(n, k);
  IntVec moduli(k);
  for (int i = 0; i < k; ++i) {
    int col = index_in_base(x, s.invariants[i].surface);
    for (int row = 0; row < n; ++row) pair_mat.at(row, i) = x.gram.at(row, col);
    moduli[i] = s.invariants[i].m;
  }
  rep.conditions[1] = surjects_onto_cyclic_sum(pair_mat, moduli);
  rep.reasons.push_back(
      rep.conditions[1]
          ? "condition (2) holds: S -> (S . D_i mod m_i) maps the tracked classes onto the cyclic sum"
          : "condition (2) fails: the tracked classes do not surject onto sum_i H^2(D_i, Z/m_i)");

  IntVec c = chern_class_multiple(s);
  Int g = gcd_of(c);
  rep.conditions[2] = g == 1;
  if (g == 1)
    rep.reasons.push_back("condition (3) holds: c1(M/mu) = " + vec_string(c) + " is primitive");
  else if (g == 0)
    rep.reasons.push_back("condition (3) fails: c1(M/mu) vanishes");
  else
    rep.reasons.push_back("condition (3) fails: c1(M/mu) = " + vec_string(c) +
                          " is divisible by " + to_string(g));

  rep.h1_zero = rep.conditions[0] && rep.conditions[1] && rep.conditions[2];
  rep.reasons.push_back("stated assumption: H^2(X, Z) is identified with the span of the "
                        "tracked classes, torsion-free once H_1(X, Z) = 0");
  return rep;
}

HomologyReport homology_of_total(const SeifertBundle& s) {
  HomologyReport rep = kollar_h1_check(s);
  if (!rep.h1_zero) {
    std::string what = "the homology formula needs H_1(M, Z) = 0";
    for (size_t i = 0; i < rep.reasons.size(); ++i)
      if (rep.reasons[i].find("fails") != std::string::npos) what += "; " + rep.reasons[i];
    throw input_error(what);
  }
  std::optional<Int> b2 = s.base.base.b2();
  if (!b2) throw input_error("b2(X) is not pinned down by the ledger");
  rep.rank = *b2 - 1;
  for (const OrbitInvariant& inv : s.invariants) {
    int genus = s.base.base.surface(inv.surface).genus;
    if (genus > 0) rep.torsion.push_back({inv.m, Int(2 * genus)});
  }
  return rep;
}

TwistResult choose_primitive_twist(const SeifertBundle& s, const RatVec& omega, int bound) {
  const ManifoldModel& x = s.base.base;
  const size_t n = x.surfaces.size();
  if (omega.size() != n)
    throw input_error("the prescribed class needs one entry per tracked class");
  if (bound < 0) throw input_error("the twist search bound must be nonnegative");
  std::optional<Int> b2 = x.b2();
  if (!b2 || *b2 < 3) throw input_error("the primitive twist needs b2(X) >= 3");
  IntVec iso(n, Int(0));
  for (const OrbitInvariant& inv : s.invariants)
    iso[size_t(index_in_base(x, inv.surface))] += inv.b * (s.m_x / inv.m);
  if (gcd_of(iso) != 1)
    throw input_error("sum_i b_i (m_X/m_i) [D_i] is not primitive; the twist hypothesis fails");

  const long cap = 1000000;
  long examined = 0;
  for (int r = 0; r <= bound; ++r) {
    IntVec a(n, Int(-r));
    while (true) {
      bool on_shell = r == 0;
      for (size_t i = 0; i < n && !on_shell; ++i)
        if (a[i] == r || a[i] == -r) on_shell = true;
      if (on_shell) {
        IntVec cand(n);
        for (size_t i = 0; i < n; ++i) cand[i] = s.m_x * (s.background[i] + a[i]) + iso[i];
        if (gcd_of(cand) == 1) {
          TwistResult res;
          res.bundle = s;
          for (size_t i = 0; i < n; ++i) res.bundle.background[i] += a[i];
          res.twist = a;
          res.omega = omega;
          res.notes.push_back("background shift " + vec_string(a) + " found at sup-norm " +
                              std::to_string(r));
          res.notes.push_back("the twisted class realizes a rescaled small perturbation of the "
                              "prescribed direction; existence is by density of the admissible "
                              "classes and carries no effective bound");
          return res;
        }
      }
      if (++examined >= cap)
        throw input_error("primitive twist search stopped after " + std::to_string(cap) +
                          " candidates below sup-norm bound " + std::to_string(bound));
      bool advanced = false;
      for (size_t pos = n; pos-- > 0;) {
        if (a[pos] < r) {
          a[pos] += 1;
          for (size_t q = pos + 1; q < n; ++q) a[q] = Int(-r);
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
  }
  throw input_error("no primitive twist with sup-norm <= " + std::to_string(bound) + " (" +
                    std::to_string(examined) + " candidates examined)");
}

KContactCertificate certify_kcontact(const SeifertBundle& s, const RatVec& omega_class) {
  if (!s.base.semi_regular)
    throw input_error("the base is not a validated smooth symplectic orbifold");
  RatVec c = chern_class(s);
  if (omega_class.size() != c.size())
    throw input_error("the symplectic class needs one entry per tracked class");
  if (c != omega_class)
    throw input_error("c1(M/X) = " + vec_string(c) + " does not equal the symplectic class " +
                      vec_string(omega_class));
  KContactCertificate cert;
  cert.chern = c;
  cert.hypotheses = {
      "the base is a smooth symplectic cyclic orbifold: isotropy surfaces are embedded and "
      "symplectic, intersections are transverse and positive, and multiplicities of "
      "intersecting surfaces are coprime",
      "a symplectic orbifold admits a compatible almost Kahler structure, and the symplectic "
      "class here is rational",
      "c1(M/X) = " + vec_string(c) + " equals the symplectic class exactly",
      "conclusion: the total space carries a K-contact structure whose Reeb flow generates "
      "the circle action of the Seifert bundle",
  };
  return cert;
}

} // namespace symsurg
