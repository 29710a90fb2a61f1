#include "doctest.h"

#include "lsc/json_io.hpp"

using namespace lsc;

TEST_CASE("weight encoding") {
  Weight w({Rat(3, 2), Rat(-1), Rat(0)});
  Json j = weight_to_json(w);
  CHECK(j[0] == "3/2");
  CHECK(j[1] == -1);
  CHECK(weight_from_json(j) == w);
  CHECK(weight_from_json(Json::parse(R"(["3/2", 1])")) == Weight({Rat(3, 2), Rat(1)}));
  CHECK_THROWS_AS(weight_from_json(Json::parse(R"([1.5])")), Error);
  CHECK_THROWS_AS(weight_from_json(Json::parse(R"([1])"), 2), Error);
}

TEST_CASE("root datum encoding") {
  RootDatum g = gcm_from_json(Json::parse(R"({"type": "A3"})"));
  CHECK(g.label() == "A3");
  RootDatum m = gcm_from_json(Json::parse(R"({"matrix": [[2,-1],[-3,2]]})"));
  CHECK(m.label() == "G2");
  Json round = gcm_to_json(m);
  CHECK(gcm_from_json(round).matrix() == m.matrix());
  CHECK_THROWS_AS(gcm_from_json(Json::parse(R"({"rank": 2})")), Error);
}

TEST_CASE("decomposition report shape") {
  RootDatum a1 = RootDatum::from_type("A1");
  Weight three({Rat(3)}), one({Rat(1)});
  Json rep = decomposition_to_json(a1, decompose(a1, three, one));
  CHECK(rep["dim_check"] == true);
  CHECK(rep["components"].size() == 2);
  CHECK(rep["components"][0].contains("nu"));
  CHECK(rep["components"][0].contains("mult"));
  CHECK(rep["components"][0].contains("dim"));
}

TEST_CASE("monomial encoding uses 1-based nodes") {
  Monomial m = Monomial::of({{0, 1}, {2, 2}});
  Json j = monomial_to_json(m);
  CHECK(j[0]["i"] == 1);
  CHECK(j[1]["i"] == 3);
  Monomial back = monomial_from_json(j);
  CHECK(back.factors == m.factors);
}

TEST_CASE("folding schema round trip and validation") {
  Folding f = Folding::standard("B2");
  Json j = folding_to_json(f);
  CHECK(j["psi"]["1"] == Json::array({1}));
  CHECK(j["psi"]["2"] == Json::array({2, 3}));
  CHECK(j["gamma"]["1"] == 2);
  Folding back = folding_from_json(j);
  CHECK(back.psi() == f.psi());
  CHECK(back.gammas() == f.gammas());

  // user-supplied data is rejected when the character validation fails
  Json bad = j;
  bad["gamma"]["1"] = 1;
  CHECK_THROWS_AS(folding_from_json(bad), Error);
}
