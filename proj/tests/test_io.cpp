#include "doctest.h"

#include "dfilab/error.hpp"
#include "dfilab/io.hpp"

using namespace dfilab;

namespace {

Json base() { return Json::parse(R"({"n": 2, "m": 3, "r": 2, "complex": {"facets": [[1, 2], [2, 3]]}})"); }

}  // namespace

TEST_CASE("fixtures parse") {
  const Problem p = load_problem(DFILAB_FIXTURE_DIR "/ex_nonCM.json");
  CHECK(p.n == 4);
  CHECK(p.complex.facets().size() == 2);
  CHECK(p.ring->field().is_rational());
  const Problem bei = load_problem(DFILAB_FIXTURE_DIR "/path_bei.json");
  CHECK(bei.ring->field().characteristic() == 2);
  const Problem w = load_problem(DFILAB_FIXTURE_DIR "/weight_order.json");
  CHECK(w.ring->order().weights().size() == 1);
  CHECK(is_diagonal(w.ring->order(), 2, 3));
}

TEST_CASE("defaults: row-major lex over the rationals") {
  const Problem p = parse_problem(base());
  CHECK(p.ring->order().tiebreak() == TermOrder::Tiebreak::Lex);
  CHECK(p.ring->order().ranking() == TermOrder::row_major_lex(2, 3).ranking());
}

TEST_CASE("explicit variable order") {
  Json doc = base();
  doc["order"] = Json::parse(R"({"type": "grlex", "variable_order": [[2,1],[2,2],[2,3],[1,1],[1,2],[1,3]]})");
  const Problem p = parse_problem(doc);
  CHECK(p.ring->order().tiebreak() == TermOrder::Tiebreak::GrLex);
  CHECK(p.ring->order().ranking().front() == 3);
}

TEST_CASE("schema violations are input errors") {
  auto rejects = [](const Json& doc) {
    try {
      parse_problem(doc);
    } catch (const Error& e) {
      return e.code() == ErrorCode::InvalidInput || e.code() == ErrorCode::NotPure;
    }
    return false;
  };
  Json doc = base();
  doc.erase("n");
  CHECK(rejects(doc));
  doc = base();
  doc["complex"] = Json::object();
  CHECK(rejects(doc));
  doc = base();
  doc["order"] = {{"type", "revlex"}};
  CHECK(rejects(doc));
  doc = base();
  doc["order"] = {{"type", "weight"}, {"weights", {1, 2}}};
  CHECK(rejects(doc));
  doc = base();
  doc["field"] = {{"type", "prime"}, {"p", 4}};
  CHECK(rejects(doc));
  doc = base();
  doc["complex"] = {{"intervals", {{1, 2, 3}}}};
  CHECK(rejects(doc));
  CHECK(rejects(Json::array()));
  CHECK_THROWS_AS(load_problem(DFILAB_FIXTURE_DIR "/bad_not_pure.json"), Error);
  CHECK_THROWS_AS(load_problem("/nonexistent.json"), Error);
}

TEST_CASE("field flags") {
  CHECK(parse_field("q").is_rational());
  CHECK(parse_field("fp:101").characteristic() == 101);
  CHECK_THROWS_AS(parse_field("fp:"), Error);
  CHECK_THROWS_AS(parse_field("fp:12x"), Error);
  CHECK_THROWS_AS(parse_field("real"), Error);
}

TEST_CASE("reports serialize with sorted keys") {
  const Problem p = load_problem(DFILAB_FIXTURE_DIR "/interval_123_2345.json");
  const RDfi dfi = build_rdfi(p.complex, p.n, p.ring);
  const Json j = to_json(is_lcm_closed(dfi), *p.ring);
  CHECK(j["verdict"] == true);
  CHECK(j["witnesses"][0]["resolver"] == "[1,2,3|2,3,4]");
  CHECK(j.dump().find("\"order\"") < j.dump().find("\"verdict\""));
}
