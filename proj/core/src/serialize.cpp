#include "symsurg/serialize.hpp"

#include "json.hpp"

#include <utility>

namespace symsurg {

namespace {

using nlohmann::json;

json parse_document(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw input_error("the input is not valid JSON");
  return doc;
}

const json& field(const json& o, const char* key) {
  auto it = o.find(key);
  if (it == o.end()) throw input_error("missing field '" + std::string(key) + "'");
  return *it;
}

void check_schema(const json& o, const char* kind) {
  if (!o.is_object()) throw input_error("the manifest must be a JSON object");
  const json& s = field(o, "schema");
  if (!s.is_number_integer() || s.get<long>() != 1)
    throw input_error("unsupported schema version");
  if (kind != nullptr) {
    const json& k = field(o, "kind");
    if (!k.is_string() || k.get<std::string>() != kind)
      throw input_error(std::string("expected a '") + kind + "' manifest");
  }
}

std::string str(const json& v, const char* what) {
  if (!v.is_string()) throw input_error(std::string(what) + " must be a string");
  return v.get<std::string>();
}

bool boolean(const json& v, const char* what) {
  if (!v.is_boolean()) throw input_error(std::string(what) + " must be true or false");
  return v.get<bool>();
}

const json& array_field(const json& v, const char* what) {
  if (!v.is_array()) throw input_error(std::string(what) + " must be an array");
  return v;
}

std::vector<std::string> string_list(const json& v, const char* what) {
  std::vector<std::string> out;
  for (const json& e : array_field(v, what)) out.push_back(str(e, what));
  return out;
}

int small_int(const json& v, const char* what) {
  Int n = parse_int(str(v, what));
  if (!n.fits_sint_p()) throw input_error(std::string(what) + " is out of range");
  return int(n.get_si());
}

json int_array(const IntVec& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(to_string(x));
  return a;
}

json rat_array(const RatVec& v) {
  json a = json::array();
  for (const Rat& x : v) a.push_back(to_string(x));
  return a;
}

Pi1State pi1_state_from(const std::string& s) {
  if (s == "yes") return Pi1State::yes;
  if (s == "no") return Pi1State::no;
  if (s == "unknown") return Pi1State::unknown;
  throw input_error("unknown pi1 state '" + s + "'");
}

json homology_json(const HomologyReport& r) {
  json o;
  o["schema"] = 1;
  o["kind"] = "homology";
  o["h1_zero"] = r.h1_zero;
  o["conditions"] = json::array({r.conditions[0], r.conditions[1], r.conditions[2]});
  o["reasons"] = r.reasons;
  o["rank"] = to_string(r.rank);
  json t = json::array();
  for (const TorsionBlock& b : r.torsion)
    t.push_back(json{{"modulus", to_string(b.modulus)}, {"copies", to_string(b.copies)}});
  o["torsion"] = t;
  return o;
}

// Locates a homology report inside a document: either the node itself or
// one nested under "results" / "homology".
const json* find_homology(const json& o) {
  if (!o.is_object()) return nullptr;
  auto k = o.find("kind");
  if (k != o.end() && k->is_string() && k->get<std::string>() == "homology") return &o;
  for (const char* key : {"results", "homology"}) {
    auto it = o.find(key);
    if (it != o.end())
      if (const json* h = find_homology(*it)) return h;
  }
  if (o.contains("h1_zero") && o.contains("rank") && o.contains("torsion")) return &o;
  return nullptr;
}

// Same descent for manifold manifests, so a full pipeline report can stand
// in for the bare manifest on the next stage's input.
const json* find_manifold(const json& o) {
  if (!o.is_object()) return nullptr;
  auto k = o.find("kind");
  if (k != o.end() && k->is_string() && k->get<std::string>() == "manifold") return &o;
  for (const char* key : {"results", "manifold"}) {
    auto it = o.find(key);
    if (it != o.end())
      if (const json* m = find_manifold(*it)) return m;
  }
  return nullptr;
}

std::string emit(const json& o) { return o.dump(2) + "\n"; }

} // namespace

std::string manifold_manifest(const ManifoldModel& m) {
  json o;
  o["schema"] = 1;
  o["kind"] = "manifold";
  o["euler_characteristic"] = to_string(m.euler_characteristic);
  json pi1;
  pi1["state"] = to_cstring(m.pi1.state);
  pi1["abelian_complete"] = m.pi1.abelian_complete;
  pi1["free_generators"] = m.pi1.free_generators;
  pi1["provenance"] = m.pi1.provenance;
  o["pi1"] = pi1;
  json surfaces = json::array();
  for (const SurfaceClass& s : m.surfaces) {
    json e;
    e["id"] = s.id;
    e["genus"] = std::to_string(s.genus);
    json flags = json::array();
    for (SurfaceFlag f : s.flags) flags.push_back(to_cstring(f));
    e["flags"] = flags;
    e["provenance"] = s.provenance;
    surfaces.push_back(std::move(e));
  }
  o["surfaces"] = surfaces;
  json gram = json::array();
  for (int i = 0; i < m.gram.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.gram.cols(); ++j) row.push_back(to_string(m.gram.at(i, j)));
    gram.push_back(std::move(row));
  }
  o["gram"] = gram;
  o["symplectic_form_tag"] = m.symplectic_form_tag;
  o["pi1_images"] = m.pi1_images;
  json slots = json::object();
  for (const auto& [id, count] : m.vanishing_slots) slots[id] = std::to_string(count);
  o["vanishing_slots"] = slots;
  json pairs = json::array();
  for (const auto& [a, b] : m.disjoint_pairs) pairs.push_back(json::array({a, b}));
  o["disjoint_pairs"] = pairs;
  o["lagrangian_aux_ready"] = m.lagrangian_aux_ready;
  o["notes"] = m.notes;
  return emit(o);
}

ManifoldModel manifold_from_json(const std::string& text) {
  json doc = parse_document(text);
  check_schema(doc, nullptr);
  const json* found = find_manifold(doc);
  if (found == nullptr) throw input_error("no manifold manifest found in the input");
  const json& o = *found;
  ManifoldModel m;
  m.euler_characteristic =
      parse_int(str(field(o, "euler_characteristic"), "euler_characteristic"));
  const json& p = field(o, "pi1");
  m.pi1.state = pi1_state_from(str(field(p, "state"), "pi1 state"));
  m.pi1.abelian_complete = boolean(field(p, "abelian_complete"), "abelian_complete");
  m.pi1.free_generators = string_list(field(p, "free_generators"), "free_generators");
  m.pi1.provenance = string_list(field(p, "provenance"), "pi1 provenance");
  for (const json& e : array_field(field(o, "surfaces"), "surfaces")) {
    SurfaceClass s;
    s.id = str(field(e, "id"), "surface id");
    if (s.id.empty()) throw input_error("surface ids must be nonempty");
    s.genus = small_int(field(e, "genus"), "genus");
    for (const json& f : array_field(field(e, "flags"), "flags")) {
      std::string name = str(f, "surface flag");
      auto flag = surface_flag_from_string(name);
      if (!flag) throw input_error("unknown surface flag '" + name + "'");
      s.flags.insert(*flag);
    }
    s.provenance = string_list(field(e, "provenance"), "surface provenance");
    m.surfaces.push_back(std::move(s));
  }
  const json& g = array_field(field(o, "gram"), "gram");
  int n = int(m.surfaces.size());
  if (int(g.size()) != n)
    throw input_error("the Gram matrix needs one row per tracked surface");
  m.gram = IntMat(n, n);
  for (int i = 0; i < n; ++i) {
    const json& row = array_field(g[size_t(i)], "Gram row");
    if (int(row.size()) != n)
      throw input_error("the Gram matrix needs one column per tracked surface");
    for (int j = 0; j < n; ++j) m.gram.at(i, j) = parse_int(str(row[size_t(j)], "Gram entry"));
  }
  m.symplectic_form_tag = str(field(o, "symplectic_form_tag"), "symplectic_form_tag");
  for (const auto& [id, v] : field(o, "pi1_images").items())
    m.pi1_images[id] = string_list(v, "pi1 image");
  for (const auto& [id, v] : field(o, "vanishing_slots").items())
    m.vanishing_slots[id] = small_int(v, "vanishing slot count");
  for (const json& pr : array_field(field(o, "disjoint_pairs"), "disjoint_pairs")) {
    if (!pr.is_array() || pr.size() != 2)
      throw input_error("disjoint pairs are two-element arrays");
    std::string a = str(pr[0], "disjoint pair"), b = str(pr[1], "disjoint pair");
    if (a == b) throw input_error("a surface cannot be disjoint from itself");
    m.disjoint_pairs.insert(a < b ? std::pair{a, b} : std::pair{b, a});
  }
  m.lagrangian_aux_ready = boolean(field(o, "lagrangian_aux_ready"), "lagrangian_aux_ready");
  m.notes = string_list(field(o, "notes"), "notes");
  return m;
}

std::string homology_manifest(const HomologyReport& r) { return emit(homology_json(r)); }

HomologyReport homology_from_json(const std::string& text) {
  json doc = parse_document(text);
  check_schema(doc, nullptr);
  const json* found = find_homology(doc);
  if (found == nullptr) throw input_error("no homology report found in the input");
  const json& o = *found;
  HomologyReport r;
  r.h1_zero = boolean(field(o, "h1_zero"), "h1_zero");
  if (o.contains("conditions")) {
    const json& c = array_field(o["conditions"], "conditions");
    if (c.size() != 3) throw input_error("conditions must list exactly three booleans");
    for (size_t i = 0; i < 3; ++i) r.conditions[i] = boolean(c[i], "condition");
  }
  if (o.contains("reasons")) r.reasons = string_list(o["reasons"], "reasons");
  r.rank = parse_int(str(field(o, "rank"), "rank"));
  for (const json& b : array_field(field(o, "torsion"), "torsion")) {
    if (!b.is_object()) throw input_error("torsion blocks are objects");
    r.torsion.push_back({parse_int(str(field(b, "modulus"), "torsion modulus")),
                         parse_int(str(field(b, "copies"), "torsion copies"))});
  }
  return r;
}

std::string local_model_manifest(const LocalModel& lm) {
  json o;
  o["schema"] = 1;
  o["kind"] = "local-model";
  o["m"] = to_string(lm.m);
  o["j1"] = to_string(lm.j1);
  o["j2"] = to_string(lm.j2);
  o["m1"] = to_string(lm.m1);
  o["m2"] = to_string(lm.m2);
  o["d"] = to_string(lm.d);
  o["label"] = std::string(1, lm.label);
  o["smooth"] = lm.smooth;
  o["regular"] = lm.regular();
  return emit(o);
}

std::string twist_manifest(const TwistResult& t) {
  json o;
  o["schema"] = 1;
  o["kind"] = "seifert-bundle";
  o["m_x"] = to_string(t.bundle.m_x);
  json inv = json::array();
  for (const OrbitInvariant& oi : t.bundle.invariants)
    inv.push_back(json{{"surface", oi.surface},
                       {"m", to_string(oi.m)},
                       {"j", to_string(oi.j)},
                       {"b", to_string(oi.b)}});
  o["invariants"] = inv;
  o["background"] = int_array(t.bundle.background);
  o["twist"] = int_array(t.twist);
  o["omega"] = rat_array(t.omega);
  o["chern"] = rat_array(chern_class(t.bundle));
  o["chern_multiple"] = int_array(chern_class_multiple(t.bundle));
  o["notes"] = t.notes;
  return emit(o);
}

std::string certificate_manifest(const KContactCertificate& c) {
  json o;
  o["schema"] = 1;
  o["kind"] = "k-contact-certificate";
  o["hypotheses"] = c.hypotheses;
  o["chern"] = rat_array(c.chern);
  return emit(o);
}

std::string verdict_manifest(const ObstructionVerdict& v) {
  json o;
  o["schema"] = 1;
  o["kind"] = "verdict";
  o["verdict"] = v.verdict();
  o["obstructed"] = v.obstructed;
  o["hypotheses"] = v.hypothesis_report;
  json chain = json::array();
  for (const DerivationStep& s : v.chain)
    chain.push_back(json{{"name", s.name}, {"statement", s.statement}});
  o["chain"] = chain;
  return emit(o);
}

std::string lagrangian_manifest(const LagrangianConfigReport& r) {
  json o;
  o["schema"] = 1;
  o["kind"] = "lagrangian-report";
  o["all_pass"] = r.all_pass;
  json checks = json::array();
  for (const ConfigCheck& c : r.checks)
    checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  o["checks"] = checks;
  return emit(o);
}

} // namespace symsurg
