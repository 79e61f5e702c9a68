#include "CLI11.hpp"
#include "json.hpp"
#include "symsurg/serialize.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>

using namespace symsurg;
using nlohmann::json;

namespace {

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-" || path.empty()) {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw input_error("cannot read '" + path + "'");
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-" || path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw input_error("cannot write '" + path + "'");
  out << text;
}

std::string emit(const json& o) { return o.dump(2) + "\n"; }

json check_entry(const std::string& name, bool pass, const std::string& anchor,
                 const std::string& detail) {
  return json{{"name", name}, {"pass", pass}, {"anchor", anchor}, {"detail", detail}};
}

std::string build_anchor(const std::string& name) {
  static const std::map<std::string, std::string> anchors = {
      {"z-euler-characteristic", "chi(Z) = 36"},
      {"z-simply-connected", "pi_1(Z) = 1"},
      {"z-b2", "b_2(Z) = 34"},
      {"z-unimodular", "det Q(Z) = +/-1"},
      {"x-euler-characteristic", "chi(X) = 38"},
      {"x-simply-connected", "pi_1(X) = 1"},
      {"x-b2", "b_2(X) = 36"},
      {"x-genus-vector", "genus vector (1,..,1,3) x3 then (1,1,2) x2"},
      {"x-self-intersections", "squares (-1,..,-1,+1) x3 then (-1,-1,+1) x2"},
      {"x-gram-diagonal", "the tracked classes are orthogonal"},
      {"x-unimodular", "det Q(X) = +/-1"},
      {"x-signature", "signature (5, 0, 31)"},
      {"x-pairwise-disjoint", "36 pairwise disjoint symplectic surfaces"},
  };
  auto it = anchors.find(name);
  return it == anchors.end() ? std::string("plumbing") : it->second;
}

int run_build_x(const std::string& out, const std::string& stop_after, bool verify_lagrangian) {
  BuildResult r = build_x(stop_after);
  bool ok = r.all_pass;

  json checks = json::array();
  for (const BuildCheck& c : r.checks)
    checks.push_back(check_entry(c.name, c.pass, build_anchor(c.name), c.detail));

  json results;
  results["manifold"] = json::parse(manifold_manifest(r.manifold));
  results["notes"] = r.notes;
  if (verify_lagrangian) {
    LagrangianConfigReport lag = verify_lagrangian_config();
    results["lagrangian"] = json::parse(lagrangian_manifest(lag));
    checks.push_back(check_entry("lagrangian-configuration", lag.all_pass,
                                 "two disjoint Lagrangian cylinders and two Lagrangian tori",
                                 std::to_string(lag.checks.size()) + " exact identities"));
    ok = ok && lag.all_pass;
  }

  json report;
  report["schema"] = 1;
  report["command"] = "build-x";
  report["inputs"] = json{{"stop_after", stop_after}, {"verify_lagrangian", verify_lagrangian}};
  report["results"] = results;
  report["checks"] = checks;
  write_output(out, emit(report));
  return ok ? 0 : 1;
}

int run_seifert(const std::string& in, const std::string& out, const std::string& p_text,
                int twist_bound) {
  Int p = parse_int(p_text);
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
    throw input_error("p must be prime; got " + to_string(p));

  ManifoldModel m = manifold_from_json(read_input(in));
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
  TwistResult t = choose_primitive_twist(bundle, chern_class(bundle), twist_bound);
  KContactCertificate cert = certify_kcontact(t.bundle, chern_class(t.bundle));
  HomologyReport h = kollar_h1_check(t.bundle);
  if (h.h1_zero) h = homology_of_total(t.bundle);

  json checks = json::array();
  checks.push_back(check_entry("semi-regular", orb.semi_regular,
                               "every point has a smooth local model", "validated orbifold"));
  checks.push_back(check_entry("primitive-twist", true, "c1(M/mu) is a primitive class",
                               "sup-norm bound " + std::to_string(twist_bound)));
  checks.push_back(check_entry("k-contact", true, "K-contact structure from the circle action",
                               std::to_string(cert.hypotheses.size()) + " hypotheses"));
  const std::string cond_anchor[3] = {"H_1(X, Z) = 0",
                                      "the tracked classes surject onto sum_i H^2(D_i, Z/m_i)",
                                      "c1(M/mu) is primitive"};
  for (size_t i = 0; i < 3; ++i)
    checks.push_back(check_entry("condition-" + std::to_string(i + 1), h.conditions[i],
                                 cond_anchor[i], i < h.reasons.size() ? h.reasons[i] : ""));
  checks.push_back(check_entry("h1-zero", h.h1_zero, "H_1(M, Z) = 0",
                               h.h1_zero ? "all three conditions hold" : "a condition fails"));

  json results;
  results["bundle"] = json::parse(twist_manifest(t));
  results["certificate"] = json::parse(certificate_manifest(cert));
  results["homology"] = json::parse(homology_manifest(h));

  json report;
  report["schema"] = 1;
  report["command"] = "seifert";
  report["inputs"] =
      json{{"input", in}, {"p", p_text}, {"twist_bound", std::to_string(twist_bound)}};
  report["results"] = results;
  report["checks"] = checks;
  write_output(out, emit(report));
  return h.h1_zero ? 0 : 1;
}

int run_check_sasakian(const std::string& in, const std::string& out, bool remark) {
  HomologyReport h = homology_from_json(read_input(in));
  ObstructionVerdict v = sasakian_excludability(h.h1_zero, h.rank, h.torsion, remark);

  json checks = json::array();
  checks.push_back(check_entry(
      "sasakian-excluded", v.obstructed, "no semi-regular Sasakian structure",
      v.chain.empty() ? std::string("hypothesis gate not passed") : v.chain.back().statement));

  json results;
  results["homology"] = json::parse(homology_manifest(h));
  results["verdict"] = json::parse(verdict_manifest(v));

  json report;
  report["schema"] = 1;
  report["command"] = "check-sasakian";
  report["inputs"] = json{{"input", in}, {"assume_genus_one_remark", remark}};
  report["results"] = results;
  report["checks"] = checks;
  write_output(out, emit(report));
  return v.obstructed ? 0 : 1;
}

int run_classify(const std::string& out, const std::string& m_text, const std::string& j1_text,
                 const std::string& j2_text) {
  if (m_text.empty() || j1_text.empty() || j2_text.empty())
    throw input_error("m, j1 and j2 are required without --scan");
  LocalModel lm = classify_local_model(parse_int(m_text), parse_int(j1_text), parse_int(j2_text));

  json report;
  report["schema"] = 1;
  report["command"] = "classify-local-model";
  report["inputs"] = json{{"m", m_text}, {"j1", j1_text}, {"j2", j2_text}};
  report["results"] = json{{"local_model", json::parse(local_model_manifest(lm))}};
  report["checks"] = json::array({check_entry("classification", true, "m1 m2 d = m",
                                              std::string("label ") + lm.label)});
  write_output(out, emit(report));
  return 0;
}

int run_scan(const std::string& out, long max_m) {
  long points = 0, violations = 0;
  for (long m = 1; m <= max_m; ++m)
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
                  lm.smooth == (lm.d == 1) && lm.label == expected;
        if (!ok) ++violations;
      }

  json report;
  report["schema"] = 1;
  report["command"] = "classify-local-model";
  report["inputs"] = json{{"scan", std::to_string(max_m)}};
  report["results"] = json{{"max_m", std::to_string(max_m)},
                           {"points", std::to_string(points)},
                           {"violations", std::to_string(violations)}};
  report["checks"] = json::array(
      {check_entry("local-model-partition", violations == 0,
                   "cases a-e partition all effective actions; m1 m2 d = m; smooth iff d = 1",
                   std::to_string(points) + " points scanned")});
  write_output(out, emit(report));
  return violations == 0 ? 0 : 1;
}

int run_obstruct(const std::string& out, const std::string& b_text,
                 const std::vector<std::string>& genera_text, bool remark) {
  std::vector<Int> genera;
  for (const std::string& g : genera_text) genera.push_back(parse_int(g));
  ObstructionVerdict v = obstruction_verdict(parse_int(b_text), genera, remark);

  json checks = json::array();
  checks.push_back(check_entry(
      "kahler-obstruction", v.obstructed, "no smooth Kahler surface carries the configuration",
      v.chain.empty() ? std::string("hypothesis gate not passed") : v.chain.back().statement));

  json report;
  report["schema"] = 1;
  report["command"] = "obstruct";
  report["inputs"] = json{{"surfaces", b_text},
                          {"genera", genera_text},
                          {"assume_genus_one_remark", remark}};
  report["results"] = json{{"verdict", json::parse(verdict_manifest(v))}};
  report["checks"] = checks;
  write_output(out, emit(report));
  return v.obstructed ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact surgery bookkeeping, Seifert homology, and the Kahler obstruction"};
  app.require_subcommand(1);

  auto* bx = app.add_subcommand("build-x", "construct the 36-surface symplectic 4-manifold X");
  std::string bx_out = "-", bx_stop;
  bool bx_lag = false;
  bx->add_option("-o,--output", bx_out, "output file, - for stdout");
  bx->add_option("--stop-after", bx_stop, "stop after an intermediate stage (z)");
  bx->add_flag("--verify-lagrangian", bx_lag, "append the exact Lagrangian-configuration report");

  auto* sf =
      app.add_subcommand("seifert", "Seifert bundle over the manifest with m_i = p^i; homology");
  std::string sf_in = "-", sf_out = "-", sf_p;
  int sf_bound = 8;
  sf->add_option("input", sf_in, "manifold manifest, - for stdin");
  sf->add_option("-p,--prime", sf_p, "prime p; the i-th tracked surface gets m_i = p^i")
      ->required();
  sf->add_option("--twist-bound", sf_bound, "sup-norm bound for the twist search");
  sf->add_option("-o,--output", sf_out, "output file, - for stdout");

  auto* cs = app.add_subcommand("check-sasakian",
                                "decide the Kahler obstruction from a homology report");
  std::string cs_in = "-", cs_out = "-";
  bool cs_remark = false;
  cs->add_option("input", cs_in, "homology report, - for stdin");
  cs->add_flag("--assume-genus-one-remark", cs_remark,
               "enable the all-genus-one variant bound b <= 9");
  cs->add_option("-o,--output", cs_out, "output file, - for stdout");

  auto* clm =
      app.add_subcommand("classify-local-model", "classify a cyclic local model (m, j1, j2)");
  std::string clm_m, clm_j1, clm_j2, clm_out = "-";
  long clm_scan = 0;
  clm->add_option("m", clm_m, "isotropy order");
  clm->add_option("j1", clm_j1, "first action exponent");
  clm->add_option("j2", clm_j2, "second action exponent");
  clm->add_option("--scan", clm_scan, "verify the case partition for all m up to this bound");
  clm->add_option("-o,--output", clm_out, "output file, - for stdout");

  auto* ob =
      app.add_subcommand("obstruct", "run the obstruction chain on a disjoint curve configuration");
  std::string ob_b, ob_out = "-";
  std::vector<std::string> ob_genera;
  bool ob_remark = false;
  ob->add_option("--surfaces", ob_b, "number of disjoint surfaces b")->required();
  ob->add_option("--genera", ob_genera, "comma-separated genus list, one entry per surface")
      ->required()
      ->delimiter(',');
  ob->add_flag("--assume-genus-one-remark", ob_remark,
               "enable the all-genus-one variant bound b <= 9");
  ob->add_option("-o,--output", ob_out, "output file, - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*bx) return run_build_x(bx_out, bx_stop, bx_lag);
    if (*sf) return run_seifert(sf_in, sf_out, sf_p, sf_bound);
    if (*cs) return run_check_sasakian(cs_in, cs_out, cs_remark);
    if (*clm) return clm_scan > 0 ? run_scan(clm_out, clm_scan)
                                  : run_classify(clm_out, clm_m, clm_j1, clm_j2);
    if (*ob) return run_obstruct(ob_out, ob_b, ob_genera, ob_remark);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
