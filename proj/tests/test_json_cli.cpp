#include "ribbonlab/cli.hpp"
#include "ribbonlab/json_io.hpp"
#include "ribbonlab/rnc.hpp"
#include "ribbonlab/sampling.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>

using namespace ribbonlab;

namespace {

Json payload_of(const std::vector<std::string>& args) {
  const CliOutcome out = run_cli(args);
  REQUIRE(out.exit_code == 0);
  REQUIRE(out.result["status"] == "ok");
  return out.result["payload"];
}

}  // namespace

TEST_CASE("JSON encodings") {
  CHECK(to_json(Rational(-3, 6)) == "-1/2");
  CHECK(rational_from_json(Json(5)) == 5);
  CHECK(rational_from_json(Json("7/21")) == Rational(1, 3));
  const RatMatrix m = matrix_from_json(Json::parse(R"([["1","1/2"],[2,0]])"));
  CHECK(m(0, 1) == Rational(1, 2));
  CHECK(matrix_from_json(to_json(m)) == m);
  const BinaryForm f = parse_binary_form("3/2*x0^3 - x1^3", 3);
  CHECK(binary_form_from_json(to_json(f)) == f);
  const XgIdeal ideal = hyperelliptic_model(4, Sampler(1).squarefree_form(10));
  CHECK(xg_ideal_from_json(to_json(ideal)) == ideal);
  CHECK_THROWS(matrix_from_json(Json::parse(R"([[1,2],[3]])")));
}

TEST_CASE("limit-quadric command") {
  const Json a = payload_of({"limit-quadric", "--g", "4", "--q", "[[1,0],[0,0]]"});
  CHECK(a["degenerate"] == true);
  CHECK(a["witness_lambda"] == Json::parse(R"(["0","1"])"));
  const Json b = payload_of({"limit-quadric", "--g", "3", "--q", "[[1]]"});
  CHECK(b["degenerate"] == false);
  CHECK(b["witness_lambda"].is_null());
  const Json c = payload_of({"limit-quadric", "--g", "4", "--q", "[[1,0],[0,1]]"});
  CHECK(c["degenerate"] == false);
  CHECK(c["det"] == "1");

  const CliOutcome bad = run_cli({"limit-quadric", "--g", "4", "--q", "[[1,2],[3,4]]"});
  CHECK(bad.exit_code == 1);
  CHECK(bad.result["status"] == "error");
  CHECK(run_cli({"limit-quadric", "--g", "4", "--q", "[[1,0,0]]"}).exit_code == 1);
  CHECK(run_cli({"limit-quadric", "--g", "4", "--q", "not json"}).exit_code == 1);
}

TEST_CASE("limit-relation command") {
  const IdealSlice sq = ideal_square_slice(4, 4);
  const Json a = payload_of({"limit-relation", "--g", "4", "--d", "4", "--poly", to_json(sq.basis[0]).dump()});
  CHECK(a["rank"] == 0);
  CHECK(a["limit"] == true);

  const Json b = payload_of({"limit-relation", "--g", "4", "--d", "3", "--poly", "u0*u0*u2 - u0*u1^2 + u0*u1*u3 - u0*u2^2"});
  CHECK(b["limit"] == false);
  CHECK(b["rank"] == 2);

  const CliOutcome c = run_cli({"limit-relation", "--g", "4", "--d", "2", "--poly", "u0*u1"});
  CHECK(c.exit_code == 1);
  CHECK(c.result["payload"]["message"].get<std::string>().find("not a canonical relation") != std::string::npos);
}

TEST_CASE("family commands") {
  const Json built = payload_of({"family", "build", "--g", "3", "--d", "1", "--h", "x0^8+x1^8"});
  const std::string fam = built["family"].dump();
  CHECK(built["family"]["N"] == 4);
  const Json order = payload_of({"family", "order", "--family", fam});
  CHECK(order["hyperell_order"] == 1);
  const Json rescaled = payload_of({"family", "rescale", "--family", fam, "--k", "1"});
  const std::string r = rescaled["family"].dump();
  CHECK(payload_of({"family", "order", "--family", r})["ribbon_order"] == 2);
  const Json disc = payload_of({"family", "discriminant", "--family", r});
  CHECK(binary_form_from_json(disc["section"]) == parse_binary_form("x0^8 + x1^8", 8));

  const std::string split = to_json(constant_family(split_ribbon_ideal(4), 5)).dump();
  const Json constant = payload_of({"family", "order", "--family", split});
  CHECK(constant["ribbon_order"] == "\xE2\x89\xA5 5");
  CHECK(run_cli({"family", "discriminant", "--family", split}).exit_code == 1);
}

TEST_CASE("xg and fitting commands") {
  const Json h = payload_of({"xg", "--model", "split", "--g", "5", "--op", "hilbert", "--max-degree", "4"});
  CHECK(h["weighted"] == Json::parse("[1,5,12,20,28]"));
  const Json gb = payload_of({"xg", "--model", "split", "--g", "4", "--op", "groebner", "--max-degree", "5"});
  CHECK(gb["normal_monomial_counts"] == gb["hilbert_function"]);
  const Json fit = payload_of({"fitting", "--m", "3", "--mode", "phi2"});
  CHECK(fit["all_realized"] == true);
  CHECK(fit["monomials_checked"] == 10);
  CHECK(run_cli({"xg", "--model", "nope", "--g", "4"}).exit_code == 1);
  CHECK(run_cli({"bogus"}).exit_code == 1);
}

TEST_CASE("verify command exit codes") {
  const CliOutcome ok = run_cli({"verify", "--suite", "fitting", "--gmax", "6"});
  CHECK(ok.exit_code == 0);
  CHECK(ok.result["payload"]["all_pass"] == true);
  CHECK(ok.result["payload"]["seed"] == 1);
  CHECK(run_cli({"verify", "--suite", "nope"}).exit_code == 1);
}

TEST_CASE("deterministic output, quiet mode and json-out") {
  const std::vector<std::string> args{"verify", "--suite", "families", "--gmax", "4", "--dmax", "3", "--seed", "9"};
  CHECK(run_cli(args).text == run_cli(args).text);
  const std::vector<std::string> xg{"xg", "--model", "hyperelliptic", "--g", "4", "--op", "ideal", "--seed", "5"};
  CHECK(run_cli(xg).text == run_cli(xg).text);

  const std::string path = "cli_json_out_test.json";
  const CliOutcome quiet = run_cli({"--quiet", "--json-out", path, "fitting", "--m", "2"});
  CHECK(quiet.exit_code == 0);
  CHECK(quiet.text.empty());
  std::ifstream in(path);
  const Json written = Json::parse(in);
  CHECK(written == quiet.result);
  std::remove(path.c_str());

  const CliOutcome timed = run_cli({"--timing", "fitting", "--m", "2"});
  CHECK(timed.result.contains("timing_ms"));
  CHECK_FALSE(run_cli({"fitting", "--m", "2"}).result.contains("timing_ms"));
}
