#include "symsurg/model.hpp"

#include "symsurg/smith.hpp"

#include <stdexcept>

namespace symsurg {

const char* to_cstring(SurfaceFlag f) {
  switch (f) {
  case SurfaceFlag::symplectic:
    return "symplectic";
  case SurfaceFlag::lagrangian:
    return "lagrangian";
  case SurfaceFlag::sphere:
    return "sphere";
  case SurfaceFlag::torus:
    return "torus";
  case SurfaceFlag::section:
    return "section";
  case SurfaceFlag::fiber:
    return "fiber";
  case SurfaceFlag::exceptional:
    return "exceptional";
  }
  return "?";
}

std::optional<SurfaceFlag> surface_flag_from_string(const std::string& name) {
  for (SurfaceFlag f :
       {SurfaceFlag::symplectic, SurfaceFlag::lagrangian, SurfaceFlag::sphere, SurfaceFlag::torus,
        SurfaceFlag::section, SurfaceFlag::fiber, SurfaceFlag::exceptional})
    if (name == to_cstring(f))
      return f;
  return std::nullopt;
}

const char* to_cstring(Pi1State s) {
  switch (s) {
  case Pi1State::yes:
    return "yes";
  case Pi1State::no:
    return "no";
  case Pi1State::unknown:
    return "unknown";
  }
  return "?";
}

int ManifoldModel::index_of(const std::string& id) const {
  for (size_t i = 0; i < surfaces.size(); ++i)
    if (surfaces[i].id == id)
      return static_cast<int>(i);
  return -1;
}

const SurfaceClass& ManifoldModel::surface(const std::string& id) const {
  int i = index_of(id);
  if (i < 0)
    throw input_error("no tracked surface named '" + id + "'");
  return surfaces[i];
}

Int ManifoldModel::self_intersection(const std::string& id) const {
  int i = index_of(id);
  if (i < 0)
    throw input_error("no tracked surface named '" + id + "'");
  return gram.at(i, i);
}

Int ManifoldModel::pairing(const std::string& a, const std::string& b) const {
  int i = index_of(a), j = index_of(b);
  if (i < 0 || j < 0)
    throw input_error("no tracked surface named '" + (i < 0 ? a : b) + "'");
  return gram.at(i, j);
}

std::optional<Int> ManifoldModel::b2() const {
  if (pi1.state == Pi1State::yes)
    return euler_characteristic - 2;
  if (pi1.state == Pi1State::no && pi1.abelian_complete)
    return euler_characteristic - 2 + 2 * Int(pi1.free_generators.size());
  return std::nullopt;
}

void ManifoldModel::mark_disjoint(const std::string& a, const std::string& b) {
  disjoint_pairs.insert(a < b ? std::pair{a, b} : std::pair{b, a});
}

bool ManifoldModel::asserted_disjoint(const std::string& a, const std::string& b) const {
  return disjoint_pairs.count(a < b ? std::pair{a, b} : std::pair{b, a}) != 0;
}

void ManifoldModel::validate() const {
  int n = static_cast<int>(surfaces.size());
  if (gram.rows() != n || gram.cols() != n)
    throw std::logic_error("gram dimension does not match the surface count");
  if (!gram.is_symmetric())
    throw std::logic_error("gram is not symmetric");
  for (int i = 0; i < n; ++i) {
    const SurfaceClass& s = surfaces[i];
    if (s.genus < 0)
      throw std::logic_error("surface '" + s.id + "' has negative genus");
    if (s.has(SurfaceFlag::symplectic) && s.has(SurfaceFlag::lagrangian))
      throw std::logic_error("surface '" + s.id + "' flagged both symplectic and lagrangian");
    if (s.has(SurfaceFlag::sphere) && s.genus != 0)
      throw std::logic_error("surface '" + s.id + "' flagged sphere with genus != 0");
    if (s.has(SurfaceFlag::torus) && s.genus != 1)
      throw std::logic_error("surface '" + s.id + "' flagged torus with genus != 1");
    for (int j = i + 1; j < n; ++j)
      if (surfaces[j].id == s.id)
        throw std::logic_error("duplicate surface id '" + s.id + "'");
  }
  if (auto b = b2(); b && Int(n) > *b && smith_normal_form(gram).rank == n)
    throw std::logic_error("more independent tracked classes than b2 allows");
}

} // namespace symsurg
