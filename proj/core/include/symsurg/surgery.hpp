#pragma once

#include "symsurg/model.hpp"

namespace symsurg {

// The 4-torus with its six coordinate tori, the auxiliary Lagrangian
// cylinder/torus data flagged as available, and pi1 = Z^4 on x1..x4.
ManifoldModel new_t4();

// The rational elliptic surface CP^2 # 9 CP^2-bar with a fixed fibration:
// tracked classes TAG.h, TAG.e1..TAG.e9, TAG.F = 3h - e1 - ... - e9, and a
// generic line TAG.L missing the nine blown-up points. Two packets of six
// vanishing-cycle slots are registered as TAG.a and TAG.b.
ManifoldModel new_e1(const std::string& tag = "E1");

struct BlowUpBranch {
  std::string id;
  int multiplicity = 1;
};

// Blow up one point. `through` lists the tracked surfaces passing through the
// chosen point (at most two) with their local multiplicities; every listed
// surface is replaced by its proper transform and the exceptional sphere is
// tracked under `new_id`.
ManifoldModel blow_up(const ManifoldModel& m, const std::vector<BlowUpBranch>& through,
                      const std::string& new_id = "E");

// Replace two symplectic surfaces meeting in d >= 1 positive transverse
// points by the smoothing in the class [S1] + [S2], of genus g1 + g2 + d - 1.
ManifoldModel resolve(const ManifoldModel& m, const std::string& s1, const std::string& s2,
                      const std::string& new_id = "");

// Push a self-intersection-zero surface off itself along its trivial normal
// bundle. The copy is homologous to the original and disjoint from it.
ManifoldModel parallel_copy(const ManifoldModel& m, const std::string& s,
                            const std::string& new_id = "");

// One matched batch of neck intersection points: `count` points of
// left . left_neck are identified with `count` points of right . right_neck.
struct GluingPairing {
  std::string left;
  std::string right;
  Int count = 1;
};

struct GluingSpec {
  std::string left_neck;
  std::string right_neck;
  std::vector<GluingPairing> pairings;
};

// Fiber sum of m1 and m2 along the two necks. Every tracked surface either
// survives (zero pairing with its neck plus a disjointness certificate) or is
// enrolled in pairings accounting for all of its neck intersection points;
// each connected component of the pairing graph becomes one glued surface.
ManifoldModel gompf_sum(const ManifoldModel& m1, const ManifoldModel& m2, const GluingSpec& spec);

// Deform the symplectic form so the listed Lagrangian surfaces, whose classes
// must be linearly independent, become symplectic.
ManifoldModel make_symplectic(const ManifoldModel& m, const std::vector<std::string>& targets);

// Trade a symplectic (-2)-sphere l meeting a square-zero symplectic torus t
// in one point for three pairwise disjoint symplectic surfaces of genus
// 1, 1, 2 and self-intersections -1, -1, +1, blowing up once.
ManifoldModel disjoin_pair(const ManifoldModel& m, const std::string& l, const std::string& t);

// Drop a tracked class from the ledger without changing the manifold.
ManifoldModel forget_surface(const ManifoldModel& m, const std::string& id);

ManifoldModel rename_surface(const ManifoldModel& m, const std::string& from,
                             const std::string& to);

struct BuildCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct BuildResult {
  ManifoldModel manifold;
  std::vector<BuildCheck> checks;
  std::vector<std::string> notes;
  bool all_pass = false;
};

// The full construction: the 4-torus is fiber-summed with three elliptic
// pieces, ten glued surfaces are extracted per sum, the four Lagrangian
// classes are capped in and made symplectic, and the two sphere/torus pairs
// are disjoined. stop_after = "z" stops before the disjoining step;
// stop_after = "" runs to the end.
BuildResult build_x(const std::string& stop_after = "");

} // namespace symsurg
