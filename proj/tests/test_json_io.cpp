#include <doctest.h>

#include <nlohmann/json.hpp>

#include "kuga/json_io.hpp"
#include "kuga/random_lattice.hpp"
#include "kuga/repcat.hpp"

using namespace kuga;

TEST_CASE("rational parsing") {
  CHECK(parse_rat("3") == 3);
  CHECK(parse_rat("-4/6") == rat(-2, 3));
  CHECK(parse_rat("0") == 0);
  CHECK(rat_str(rat(-2, 3)) == "-2/3");
  CHECK(rat_str(Rat(7)) == "7");
  CHECK_THROWS_AS(parse_rat("1/0"), Error);
  CHECK_THROWS_AS(parse_rat("x"), Error);
  CHECK_THROWS_AS(parse_rat("1/2/3"), Error);
  CHECK_THROWS_AS(parse_rat(""), Error);
  CHECK_THROWS_AS(parse_rat("1.5"), Error);
}

TEST_CASE("family description round trip") {
  FamilyDescription family;
  family.profile = standard_ball_profile(2);
  HiggsData v = standard_ball_higgs(2);
  v.observed_length = 1;
  family.summands.push_back(v);
  HiggsData unitary;
  unitary.unitary = true;
  unitary.p10 = {1, ChernVector::zero(1)};
  unitary.p01 = {1, ChernVector::zero(1)};
  unitary.label = "flat";
  family.summands.push_back(unitary);
  family.metadata["name"] = "round trip";

  std::string text = family_to_json(family).dump(2);
  FamilyDescription back = family_from_json_text(text);
  CHECK(back.profile.dims == family.profile.dims);
  CHECK(back.profile.types == family.profile.types);
  CHECK(back.profile.c2_ratios == family.profile.c2_ratios);
  REQUIRE(back.summands.size() == 2);
  CHECK(back.summands[0].p10.rank == 2);
  CHECK(back.summands[0].p10.c1 == family.summands[0].p10.c1);
  CHECK(back.summands[0].observed_length == 1);
  CHECK(back.summands[1].unitary);
  CHECK(back.summands[1].label == "flat");
  CHECK(back.metadata.at("name") == "round trip");
  // Serialization is stable.
  CHECK(family_to_json(back).dump(2) == text);
}

TEST_CASE("lattice round trip") {
  for (std::uint64_t seed : {3u, 17u, 23u}) {
    SubobjectLattice L = random_coherent_lattice(seed, 10);
    std::string text = lattice_to_json(L).dump(2);
    SubobjectLattice back = lattice_from_json_text(text);
    REQUIRE(back.nodes().size() == L.nodes().size());
    for (const LatticeNode& n : L.nodes()) {
      CHECK(back.node(n.id).rank == n.rank);
      CHECK(back.node(n.id).degrees == n.degrees);
    }
    CHECK(back.top() == L.top());
    CHECK(lattice_to_json(back).dump(2) == text);
    // Same filtration on both.
    auto a = hn_filtration(L);
    auto b = hn_filtration(back);
    REQUIRE(is_ok(a));
    REQUIRE(is_ok(b));
    CHECK(value(a).chain == value(b).chain);
  }
}

TEST_CASE("lattice round trip with custom functionals") {
  std::vector<LatticeNode> nodes = {{1, 1, {Rat(1), Rat(2)}}, {2, 2, {Rat(3), Rat(4)}}};
  std::vector<std::vector<Rat>> functionals = {{rat(1, 2), Rat(0)}, {Rat(0), rat(-2, 3)}};
  PerturbationSpec spec;
  spec.rows = {{Rat(1), Rat(1)}};
  SubobjectLattice L = SubobjectLattice::build(nodes, {{1, 2}}, 2, functionals, spec);
  SubobjectLattice back = lattice_from_json_text(lattice_to_json(L).dump());
  CHECK(back.functionals() == L.functionals());
  CHECK(back.default_perturbation().rows == L.default_perturbation().rows);
  CHECK(back.slope_poly(1) == L.slope_poly(1));
  CHECK(back.quotient_slope_poly(1, 2) == L.quotient_slope_poly(1, 2));
}

TEST_CASE("syntax errors carry line and column") {
  try {
    family_from_json_text("{\n  \"profile\": [,]\n}");
    FAIL("expected parse error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("schema violations are enumerated, not first-only") {
  // Three independent problems: bad dims entry, bad type, bad support entry.
  std::string text = R"({
    "schema_version": 1,
    "profile": {"dims": [0], "types": ["Q"]},
    "summands": [{"p10": {"rank": 1, "c1": ["1"]},
                  "p01": {"rank": 1, "c1": ["-1"]},
                  "support": ["x"], "unitary": false}]
  })";
  try {
    family_from_json_text(text);
    FAIL("expected schema errors");
  } catch (const Error& e) {
    std::string what = e.what();
    CHECK(what.find("profile.dims[0]") != std::string::npos);
    CHECK(what.find("profile.types[0]") != std::string::npos);
    CHECK(what.find("summands[0].support[0]") != std::string::npos);
  }
}

TEST_CASE("loaders fail cleanly on every truncation of a valid file") {
  FamilyDescription family;
  family.profile = standard_ball_profile(2);
  family.summands.push_back(standard_ball_higgs(2));
  std::string text = family_to_json(family).dump(2);
  for (std::size_t cut = 0; cut < text.size(); ++cut) {
    try {
      family_from_json_text(text.substr(0, cut));
      FAIL("truncated input parsed");
    } catch (const Error&) {
      // expected: every truncation is a reported parse or schema error
    }
  }
}

TEST_CASE("certificate json shape") {
  FactorProfile profile = standard_ball_profile(2);
  HiggsData v = standard_ball_higgs(2);
  v.observed_length = 1;
  Certificate cert = certify(profile, {v});
  nlohmann::json j = certificate_to_json(cert);
  CHECK(j["pass"] == true);
  CHECK(j["summands"].size() == 1);
  CHECK(j["summands"][0]["purity_index"] == 1); // 1-based on the wire
  CHECK(j["summands"][0]["arakelov_defect"] == "0");
}
