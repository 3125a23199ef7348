#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <sys/wait.h>

#include "incline/cli.hpp"
#include "incline/json_io.hpp"
#include "fixtures.hpp"

using namespace incline;
using json::Json;
namespace fs = std::filesystem;

namespace {

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("incline_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write(const std::string& name, const Json& doc) {
  const auto p = scratch() / name;
  std::ofstream(p) << doc.dump();
  return p.string();
}

struct Result {
  int code;
  Json report;
  std::string out;
  std::string err;
};

Result call(cli::CommandRequest req) {
  std::ostringstream out, err;
  const int code = cli::run(req, out, err);
  Json report = out.str().empty() ? Json(nullptr) : Json::parse(out.str());
  return {code, report, out.str(), err.str()};
}

cli::CommandRequest request(cli::Command c, const std::string& input) {
  cli::CommandRequest r;
  r.command = c;
  r.input_path = input;
  return r;
}

// runs the real executable; returns the exit status and captures stdout
int shell(const std::string& args, std::string& out) {
  const std::string cmd = std::string(INCLINE_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  out.clear();
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = ::pclose(pipe);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("check") {
  const auto mp = write("mp.json", json::matrix_to_json(fixtures::max_plus_rank_one()));
  auto r = call(request(cli::Command::check, mp));
  CHECK(r.code == cli::kHolds);
  CHECK(r.report["cp"] == true);
  CHECK(r.report["diagonally_dominant"] == false);
  CHECK(r.report["claims"] == Json::array({"cp-iff-principal-2x2"}));

  const auto bad = write("bad.json", json::matrix_to_json(Matrix::parse(Algebra::maxmin(), {{"0.5", "0.8"}, {"0.8", "1"}})));
  r = call(request(cli::Command::check, bad));
  CHECK(r.code == cli::kRefuted);
  CHECK(r.report["witness"] == Json::array({1, 2}));

  const auto asym = write("asym.json", json::matrix_to_json(Matrix::parse(Algebra::maxmin(), {{"1", "0.5"}, {"0.2", "1"}})));
  r = call(request(cli::Command::check, asym));
  CHECK(r.code == cli::kRefuted);
  CHECK(r.report["symmetric"] == false);
}

TEST_CASE("decompose and verify") {
  const auto a = write("a4.json", json::matrix_to_json(fixtures::paper_a4()));
  for (const char* method : {"djl", "pairwise"}) {
    auto req = request(cli::Command::decompose, a);
    req.method = method;
    const auto r = call(req);
    REQUIRE(r.code == cli::kHolds);
    CHECK(r.report["method"] == method);
    const auto cert = write(std::string("cert_") + method + ".json", r.report);
    auto v = request(cli::Command::verify, a);
    v.certificate_path = cert;
    const auto vr = call(v);
    CHECK(vr.code == cli::kHolds);
    CHECK(vr.report["certificate_kind"] == "decomposition");
    // the bare certificate works too
    v.certificate_path = write("bare.json", r.report["certificate"]);
    CHECK(call(v).code == cli::kHolds);
    // mutate one entry
    auto mutated = r.report["certificate"];
    mutated["factors"][0][0] = mutated["factors"][0][0] == "0" ? "1/8" : "0";
    v.certificate_path = write("mut.json", mutated);
    CHECK(call(v).code == cli::kRefuted);
  }
}

TEST_CASE("factor modes") {
  const auto a3 = write("a3.json", json::matrix_to_json(fixtures::paper_a3()));
  auto r = call(request(cli::Command::factor, a3));
  CHECK(r.code == cli::kHolds);
  CHECK(r.report["certificate"]["mode"] == "LU");
  CHECK(r.report["inequalities"] == Json::array({true, true, false}));

  auto req = request(cli::Command::factor, a3);
  req.mode = "ul";
  r = call(req);
  CHECK(r.code == cli::kRefuted);
  CHECK(r.report["refusals"][0]["reason"] == "precondition failed");
  CHECK(r.report["refusals"][0]["side"] == "left");

  const auto a4 = write("a4f.json", json::matrix_to_json(fixtures::paper_a4()));
  r = call(request(cli::Command::factor, a4));
  // auto on n = 4: LU first
  CHECK(r.report["claims"][0] == "right-apm-implies-lu");

  auto v = request(cli::Command::verify, a4);
  v.certificate_path = write("paper_u.json", json::triangular_to_json({TriangularMode::ul, fixtures::paper_u4()}));
  CHECK(call(v).code == cli::kHolds);
}

TEST_CASE("cprank") {
  const auto mp = write("mp2.json", json::matrix_to_json(fixtures::max_plus_rank_one()));
  auto req = request(cli::Command::cprank, mp);
  req.exact = true;
  auto r = call(req);
  CHECK(r.code == cli::kHolds);
  CHECK(r.report["rank"] == 1);
  CHECK(r.report["complete"] == false);
  CHECK(r.report["transcript"]["witness"] == Json::array({Json::array({"-2"}), Json::array({"-3"})}));

  const auto c4 = write("c4.json", json::matrix_to_json(djl_tightness_witness(4)));
  req = request(cli::Command::cprank, c4);
  req.exact = true;
  req.max_width = 3;
  r = call(req);
  CHECK(r.code == cli::kRefuted);
  CHECK(r.report["rank"].is_null());

  req.max_width.reset();
  req.budget = 5;
  r = call(req);
  CHECK(r.code == cli::kUsage);
  CHECK(r.report["transcript"]["outcome"] == "budget_exceeded");

  r = call(request(cli::Command::cprank, c4));
  CHECK(r.code == cli::kHolds);
  CHECK(r.report["djl_rank"] == 4);
}

TEST_CASE("axioms") {
  const auto b = write("bool.json", json::algebra_to_json(Algebra::boolean()));
  auto r = call(request(cli::Command::axioms, b));
  CHECK(r.code == cli::kHolds);
  CHECK(r.report["mode"] == "exhaustive");

  const auto mm = write("mm.json", json::algebra_to_json(Algebra::maxmin()));
  r = call(request(cli::Command::axioms, mm));
  CHECK(r.code == cli::kUsage);
  CHECK(r.err.find("--seed") != std::string::npos);

  auto req = request(cli::Command::axioms, mm);
  req.seed = 4;
  req.samples = 200;
  r = call(req);
  CHECK(r.code == cli::kHolds);
  CHECK(r.report["tuples"] == 200);
}

TEST_CASE("usage errors") {
  const auto a3 = write("a3u.json", json::matrix_to_json(fixtures::paper_a3()));
  auto req = request(cli::Command::check, a3);
  req.method = "djl";
  CHECK(call(req).code == cli::kUsage);

  req = request(cli::Command::decompose, a3);
  req.method = "qr";
  CHECK(call(req).code == cli::kUsage);

  req = request(cli::Command::cprank, a3);
  req.max_width = 2;
  CHECK(call(req).code == cli::kUsage);

  CHECK(call(request(cli::Command::verify, a3)).code == cli::kUsage);
  CHECK(call(request(cli::Command::check, (scratch() / "missing.json").string())).code == cli::kUsage);

  const auto p = scratch() / "broken.json";
  std::ofstream(p) << "{\"incline\": {\"kind\": \"maxmin\"}, \"matrix\": [[\"1\", ";
  auto r = call(request(cli::Command::check, p.string()));
  CHECK(r.code == cli::kUsage);
  CHECK(r.out.empty());

  Json doc = json::matrix_to_json(fixtures::paper_a3());
  doc["matrix"][1][2] = "pow:1";
  r = call(request(cli::Command::check, write("wrong.json", doc)));
  CHECK(r.code == cli::kUsage);
  CHECK(r.err.find("$.matrix[1][2]") != std::string::npos);

  doc["incline"]["kind"] = "fuzzy";
  r = call(request(cli::Command::check, write("kind.json", doc)));
  CHECK(r.code == cli::kUsage);
  CHECK(r.err.find("$.incline.kind") != std::string::npos);

  const auto d = write("d30.json", json::matrix_to_json(Matrix::parse(Algebra::divisor_lattice(30), {{"30", "3"}, {"3", "15"}})));
  req = request(cli::Command::decompose, d);
  CHECK(call(req).code == cli::kUsage);
  req.method = "pairwise";
  CHECK(call(req).code == cli::kHolds);
}

TEST_CASE("executable exit codes and determinism") {
  const auto a3 = write("x3.json", json::matrix_to_json(fixtures::paper_a3()));
  std::string first, second;
  CHECK(shell("decompose " + a3 + " --method djl", first) == 0);
  CHECK(shell("decompose " + a3 + " --method djl", second) == 0);
  CHECK(first == second);
  const auto cert = (scratch() / "x3cert.json").string();
  std::ofstream(cert) << first;
  std::string out;
  CHECK(shell("verify " + a3 + " --certificate " + cert, out) == 0);
  CHECK(shell("factor " + a3 + " --mode ul", out) == 1);
  CHECK(shell("factor " + a3 + " --mode sideways", out) == 2);
  CHECK(shell("frobnicate " + a3, out) == 2);
  CHECK(shell("check", out) == 2);
  CHECK(shell("check " + a3 + " --bogus", out) == 2);

  const auto mm = write("xmm.json", json::algebra_to_json(Algebra::maxplus()));
  CHECK(shell("axioms " + mm + " --seed 9 --samples 300", first) == 0);
  CHECK(shell("axioms " + mm + " --seed 9 --samples 300", second) == 0);
  CHECK(first == second);
}

TEST_CASE("round trip over random inputs") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 20; ++t) {
    const auto alg = t % 2 ? Algebra::maxplus() : Algebra::maxmin();
    const auto a = fixtures::random_cp(alg, 2 + t % 5, 3, rng);
    const auto in = write("rt.json", json::matrix_to_json(a));
    auto req = request(cli::Command::factor, in);
    const auto r = call(req);
    if (r.code != cli::kHolds) continue;
    auto v = request(cli::Command::verify, in);
    v.certificate_path = write("rtc.json", r.report);
    CHECK(call(v).code == cli::kHolds);
  }
}
