#include "doctest.h"
#include "symsurg/serialize.hpp"

using namespace symsurg;

TEST_CASE("the manifold manifest round trip") {
  ManifoldModel m = build_x().manifold;
  std::string text = manifold_manifest(m);
  ManifoldModel back = manifold_from_json(text);

  CHECK(back.euler_characteristic == m.euler_characteristic);
  CHECK(back.pi1 == m.pi1);
  CHECK(back.surfaces == m.surfaces);
  CHECK(back.gram == m.gram);
  CHECK(back.symplectic_form_tag == m.symplectic_form_tag);
  CHECK(back.pi1_images == m.pi1_images);
  CHECK(back.vanishing_slots == m.vanishing_slots);
  CHECK(back.disjoint_pairs == m.disjoint_pairs);
  CHECK(back.lagrangian_aux_ready == m.lagrangian_aux_ready);
  CHECK(back.notes == m.notes);
  CHECK(manifold_manifest(back) == text);
  CHECK_NOTHROW(back.validate());
}

TEST_CASE("big integers survive as decimal strings") {
  Int big;
  mpz_ui_pow_ui(big.get_mpz_t(), 2, 200);
  ManifoldModel m;
  m.euler_characteristic = big;
  m.pi1.state = Pi1State::unknown;
  m.surfaces.push_back({"S", 1, {SurfaceFlag::symplectic}, {}});
  m.gram = IntMat(1, 1);
  m.gram.at(0, 0) = -big;
  std::string text = manifold_manifest(m);
  CHECK(text.find(to_string(big)) != std::string::npos);
  ManifoldModel back = manifold_from_json(text);
  CHECK(back.euler_characteristic == big);
  CHECK(back.gram.at(0, 0) == -big);
}

TEST_CASE("the homology manifest round trip") {
  HomologyReport r;
  r.h1_zero = true;
  r.conditions = {true, true, true};
  r.reasons = {"condition (1) holds: the ledger pins pi1 to the trivial group"};
  r.rank = 35;
  r.torsion = {{2, 2}, {4, 6}};

  std::string text = homology_manifest(r);
  HomologyReport back = homology_from_json(text);
  CHECK(back.h1_zero == r.h1_zero);
  CHECK(back.conditions == r.conditions);
  CHECK(back.reasons == r.reasons);
  CHECK(back.rank == r.rank);
  CHECK(back.torsion == r.torsion);
  CHECK(homology_manifest(back) == text);
}

TEST_CASE("embedded homology reports are found") {
  HomologyReport r;
  r.h1_zero = true;
  r.rank = 3;
  r.torsion = {{5, 2}};
  std::string wrapped = "{\"schema\": 1, \"command\": \"seifert\", \"results\": {\"homology\": " +
                        homology_manifest(r) + "}}";
  HomologyReport back = homology_from_json(wrapped);
  CHECK(back.rank == 3);
  CHECK(back.torsion == r.torsion);

  ManifoldModel m = build_x("z").manifold;
  std::string wrapped_m = "{\"schema\": 1, \"command\": \"build-x\", \"results\": {\"manifold\": " +
                          manifold_manifest(m) + "}}";
  ManifoldModel back_m = manifold_from_json(wrapped_m);
  CHECK(back_m.euler_characteristic == 36);
  CHECK(back_m.surfaces == m.surfaces);
}

TEST_CASE("a minimal hand-written homology input parses") {
  HomologyReport r = homology_from_json(
      R"({"schema": 1, "h1_zero": true, "rank": "0",
          "torsion": [{"modulus": "2", "copies": "2"}]})");
  CHECK(r.h1_zero);
  CHECK(r.rank == 0);
  CHECK(r.torsion == std::vector<TorsionBlock>{{2, 2}});
  CHECK(!r.conditions[0]);
  CHECK(r.reasons.empty());
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_WITH_AS(manifold_from_json("not json"), "the input is not valid JSON",
                       input_error);
  CHECK_THROWS_WITH_AS(manifold_from_json("{}"), "missing field 'schema'", input_error);
  CHECK_THROWS_WITH_AS(manifold_from_json(R"({"schema": 2})"), "unsupported schema version",
                       input_error);
  CHECK_THROWS_WITH_AS(manifold_from_json(R"({"schema": 1, "kind": "homology"})"),
                       "no manifold manifest found in the input", input_error);

  HomologyReport r;
  r.rank = 1;
  CHECK_THROWS_WITH_AS(manifold_from_json(homology_manifest(r)),
                       "no manifold manifest found in the input", input_error);
  CHECK_THROWS_WITH_AS(homology_from_json(R"({"schema": 1, "x": "4"})"),
                       "no homology report found in the input", input_error);
  CHECK_THROWS_AS(homology_from_json(R"({"schema": 1, "h1_zero": true, "rank": "1x",
                                          "torsion": []})"),
                  input_error);

  ManifoldModel m = build_x("z").manifold;
  std::string text = manifold_manifest(m);
  std::string truncated(text.begin(), text.begin() + long(text.size() / 2));
  CHECK_THROWS_AS(manifold_from_json(truncated), input_error);

  std::string wrong_genus = text;
  wrong_genus.replace(wrong_genus.find("\"genus\": \"1\""), 12,
                      "\"genus\": \"9999999999999999999\"");
  CHECK_THROWS_WITH_AS(manifold_from_json(wrong_genus), "genus is out of range", input_error);
}

TEST_CASE("gram rows must match the surface count") {
  ManifoldModel m;
  m.surfaces.push_back({"A", 1, {SurfaceFlag::symplectic}, {}});
  m.surfaces.push_back({"B", 1, {SurfaceFlag::symplectic}, {}});
  m.gram = IntMat(2, 2);
  std::string text = manifold_manifest(m);

  std::string bad = text;
  bad.replace(bad.find("\"gram\": ["), 9, "\"gram\": [[\"0\", \"0\"], ");
  CHECK_THROWS_WITH_AS(manifold_from_json(bad),
                       "the Gram matrix needs one row per tracked surface", input_error);
}

TEST_CASE("report manifests carry the decisive fields") {
  std::string lm = local_model_manifest(classify_local_model(12, 2, 3));
  CHECK(lm.find("\"label\": \"c\"") != std::string::npos);
  CHECK(lm.find("\"m1\": \"2\"") != std::string::npos);
  CHECK(lm.find("\"m2\": \"3\"") != std::string::npos);
  CHECK(lm.find("\"d\": \"2\"") != std::string::npos);
  CHECK(lm.find("\"smooth\": false") != std::string::npos);
  CHECK(lm.find("\"schema\": 1") != std::string::npos);

  std::vector<Int> genera(12, Int(1));
  genera[0] = 3;
  genera[1] = 3;
  std::string v = verdict_manifest(obstruction_verdict(12, genera));
  CHECK(v.find("\"verdict\": \"obstructed\"") != std::string::npos);
  CHECK(v.find("\"name\": \"noether\"") != std::string::npos);
  CHECK(v.find("\"name\": \"slope\"") != std::string::npos);

  ManifoldModel base;
  base.euler_characteristic = 5;
  base.pi1.state = Pi1State::yes;
  base.surfaces.push_back({"D", 1, {SurfaceFlag::symplectic}, {}});
  base.surfaces.push_back({"H", 1, {SurfaceFlag::symplectic}, {}});
  base.surfaces.push_back({"K", 1, {SurfaceFlag::symplectic}, {}});
  base.gram = IntMat{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  base.validate();
  SymplecticOrbifold orb = validate_orbifold(base, {{"D", 3}});
  SeifertBundle s = make_seifert_bundle(orb, {1}, {0, 0, 0});
  RatVec omega{Rat(1, 3), Rat(0), Rat(0)};
  TwistResult t = choose_primitive_twist(s, omega);
  std::string tm = twist_manifest(t);
  CHECK(tm.find("\"m_x\": \"3\"") != std::string::npos);
  CHECK(tm.find("\"1/3\"") != std::string::npos);

  std::string cm = certificate_manifest(certify_kcontact(t.bundle, omega));
  CHECK(cm.find("k-contact-certificate") != std::string::npos);
  CHECK(cm.find("\"1/3\"") != std::string::npos);
}
