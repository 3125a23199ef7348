#include <doctest.h>

#include "incline/json_io.hpp"
#include "fixtures.hpp"

using namespace incline;
using json::Json;

namespace {

std::string error_path(const Json& doc) {
  try {
    json::matrix_from_json(doc);
  } catch (const json::JsonError& e) {
    return e.path();
  }
  return "";
}

}  // namespace

TEST_CASE("matrices round trip") {
  for (const auto& m : {fixtures::paper_a4(), fixtures::max_plus_rank_one(),
                        Matrix::parse(Algebra::maxtimes(), {{"pow:1", "0"}, {"0", "pow:1/3"}}),
                        Matrix::parse(Algebra::chain(4), {{"1", "1/3"}, {"2/3", "0"}}),
                        Matrix::parse(Algebra::divisor_lattice(12), {{"12", "4"}, {"6", "1"}})}) {
    const auto j = json::matrix_to_json(m);
    CHECK(json::matrix_from_json(j) == m);
    CHECK(json::matrix_from_json(Json::parse(j.dump())) == m);
  }
}

TEST_CASE("algebra fragments") {
  CHECK(json::algebra_from_json(Json{{"kind", "chain"}, {"size", 3}}) == Algebra::chain(3));
  const Json lattice = {{"kind", "lattice"},
                        {"elements", {"bot", "top"}},
                        {"join", Json::array({Json::array({"bot", "top"}), Json::array({"top", "top"})})},
                        {"meet", Json::array({Json::array({0, 0}), Json::array({0, 1})})}};
  const auto alg = json::algebra_from_json(lattice);
  CHECK(alg.kind() == Kind::lattice);
  CHECK(alg.zero() == alg.parse("bot"));
  CHECK(json::algebra_from_json(json::algebra_to_json(alg)) == alg);

  try {
    json::algebra_from_json(Json{{"kind", "tropical"}});
    FAIL("unknown kind accepted");
  } catch (const json::JsonError& e) {
    CHECK(e.path() == "$.kind");
  }
  CHECK_THROWS_AS(json::algebra_from_json(Json{{"kind", "chain"}}), json::JsonError);
  CHECK_THROWS_AS(json::algebra_from_json(Json{{"kind", "chain"}, {"size", 1}}), json::JsonError);
}

TEST_CASE("errors name the offending element") {
  Json doc = json::matrix_to_json(fixtures::paper_a3());
  CHECK(error_path(doc).empty());
  doc["matrix"][1][0] = "-1";
  CHECK(error_path(doc) == "$.matrix[1][0]");
  doc = json::matrix_to_json(fixtures::paper_a3());
  doc["matrix"][2] = Json::array({"0", "1"});
  CHECK(error_path(doc) == "$.matrix[2]");
  doc = json::matrix_to_json(fixtures::paper_a3());
  doc["matrix"][0][2] = 1.5;
  CHECK(error_path(doc) == "$.matrix[0][2]");
  CHECK(error_path(Json{{"matrix", Json::array()}}) == "$.incline");
  CHECK(error_path(Json{{"incline", {{"kind", "boolean"}}}}) == "$.matrix");
  CHECK(error_path(Json{{"incline", {{"kind", "boolean"}}}, {"matrix", Json::array()}}) == "$.matrix");
  CHECK_THROWS_AS(json::parse_text("{\"incline\": ", "x.json"), json::JsonError);
}

TEST_CASE("integer and boolean literals") {
  const Json doc = {{"incline", {{"kind", "boolean"}}}, {"matrix", {{1, 0}, {true, false}}}};
  const auto m = json::matrix_from_json(doc);
  CHECK(m == Matrix::parse(Algebra::boolean(), {{"1", "0"}, {"1", "0"}}));
  const Json mp = {{"incline", {{"kind", "maxplus"}}}, {"matrix", {{-4, -5}, {-5, -6}}}};
  CHECK(json::matrix_from_json(mp) == fixtures::max_plus_rank_one());
}

TEST_CASE("decomposition certificates round trip") {
  const auto a = fixtures::paper_a4();
  const auto dec = djl_decompose(a);
  const auto j = json::decomposition_to_json(dec);
  CHECK(j["n"] == 4);
  CHECK(j["permutation"].size() == 4);
  const auto back = json::decomposition_from_json(a.algebra(), j);
  CHECK(back.factors == dec.factors);
  CHECK(back.permutation == dec.permutation);
  CHECK(verify_decomposition(a, back));

  Json bad = j;
  bad["permutation"][0] = 0;
  CHECK_THROWS_AS(json::decomposition_from_json(a.algebra(), bad), json::JsonError);
}

TEST_CASE("triangular certificates round trip") {
  const auto a = fixtures::paper_a3();
  const auto cert = *lu_factor(a).certificate;
  const auto j = json::triangular_to_json(cert);
  CHECK(j["mode"] == "LU");
  const auto back = json::triangular_from_json(a.algebra(), j);
  CHECK(back.mode == cert.mode);
  CHECK(back.factor == cert.factor);
  Json bad = j;
  bad["mode"] = "QR";
  CHECK_THROWS_AS(json::triangular_from_json(a.algebra(), bad), json::JsonError);
}

TEST_CASE("transcripts list small carriers") {
  const auto r = brute_force_cp_rank(fixtures::max_plus_rank_one());
  const auto j = json::transcript_to_json(Algebra::maxplus(), r.transcript);
  CHECK(j["outcome"] == "found");
  CHECK(j["carrier"].size() == r.transcript.carrier.size());
  CHECK(j["witness"] == Json::array({Json::array({"-2"}), Json::array({"-3"})}));

  SearchTranscript big;
  big.carrier.assign(70, Algebra::boolean().zero());
  CHECK(json::transcript_to_json(Algebra::boolean(), big)["carrier"].is_null());
}
