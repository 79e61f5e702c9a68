#pragma once

#include "symsurg/matrix.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace symsurg {

enum class SurfaceFlag { symplectic, lagrangian, sphere, torus, section, fiber, exceptional };

const char* to_cstring(SurfaceFlag f);
std::optional<SurfaceFlag> surface_flag_from_string(const std::string& name);

struct SurfaceClass {
  std::string id;
  int genus = 0;
  std::set<SurfaceFlag> flags;
  std::vector<std::string> provenance;

  bool has(SurfaceFlag f) const { return flags.count(f) != 0; }
  bool operator==(const SurfaceClass&) const = default;
};

enum class Pi1State { yes, no, unknown };

const char* to_cstring(Pi1State s);

// Fundamental-group bookkeeping: a tri-state answer plus, when the group is
// known to be free abelian on named generators, that generator list. The
// 4-torus starts with x1..x4 and fiber sums delete the generators carried by
// the gluing torus.
struct Pi1Info {
  Pi1State state = Pi1State::unknown;
  bool abelian_complete = false;
  std::vector<std::string> free_generators;
  std::vector<std::string> provenance;

  bool operator==(const Pi1Info&) const = default;
};

struct ManifoldModel {
  Int euler_characteristic = 0;
  Pi1Info pi1;
  std::vector<SurfaceClass> surfaces;
  IntMat gram;
  std::string symplectic_form_tag;

  // surface id -> generators of pi1 of the ambient manifold hit by loops on it
  std::map<std::string, std::vector<std::string>> pi1_images;
  // remaining cappable vanishing-cycle slots per packet, e.g. "E2.a" -> 6
  std::map<std::string, int> vanishing_slots;
  // unordered pairs asserted disjoint as submanifolds by the constructing op
  std::set<std::pair<std::string, std::string>> disjoint_pairs;
  // whether the auxiliary cylinder/torus quadruple of the base 4-torus is
  // available to cap into Lagrangian classes
  bool lagrangian_aux_ready = false;
  std::vector<std::string> notes;

  int index_of(const std::string& id) const;
  const SurfaceClass& surface(const std::string& id) const;
  Int self_intersection(const std::string& id) const;
  Int pairing(const std::string& a, const std::string& b) const;

  // second Betti number when pi1 is pinned down: chi - 2 + 2*rank H_1
  std::optional<Int> b2() const;

  void mark_disjoint(const std::string& a, const std::string& b);
  bool asserted_disjoint(const std::string& a, const std::string& b) const;

  // structural invariants; throws std::logic_error on violation
  void validate() const;
};

} // namespace symsurg
