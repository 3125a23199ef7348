#include "incline/cli.hpp"

#include <ostream>

#include "incline/cp.hpp"
#include "incline/errors.hpp"
#include "incline/factorization.hpp"
#include "incline/json_io.hpp"
#include "incline/laws.hpp"
#include "incline/oracle.hpp"

namespace incline::cli {

using json::Json;

namespace {

constexpr const char* kCommandNames[] = {"axioms", "check", "decompose", "factor", "cprank", "verify"};

std::string command_name(Command c) { return kCommandNames[static_cast<int>(c)]; }

// Ids of the results a report relies on.
namespace claim {
constexpr const char* cp_equivalence = "cp-iff-principal-2x2";
constexpr const char* regular_cp = "regular-cp-iff-diag-dominant";
constexpr const char* djl_bound = "djl-bound";
constexpr const char* left_apm = "left-apm-implies-ul";
constexpr const char* right_apm = "right-apm-implies-lu";
constexpr const char* dichotomy = "3x3-lu-or-ul";
}  // namespace claim

struct Outcome {
  Json report;
  int code = kHolds;
};

void validate(const CommandRequest& req) {
  auto only = [&](bool given, const char* flag, std::initializer_list<Command> allowed) {
    if (!given) return;
    for (auto c : allowed) {
      if (c == req.command) return;
    }
    throw UsageError(std::string(flag) + " does not apply to '" + command_name(req.command) + "'");
  };
  only(req.method.has_value(), "--method", {Command::decompose});
  only(req.mode.has_value(), "--mode", {Command::factor});
  only(req.exact, "--exact", {Command::cprank});
  only(req.max_width.has_value(), "--max-width", {Command::cprank});
  only(req.budget.has_value(), "--budget", {Command::cprank});
  only(req.samples.has_value(), "--samples", {Command::axioms});
  only(req.seed.has_value(), "--seed", {Command::axioms});
  only(req.certificate_path.has_value(), "--certificate", {Command::verify});
  if ((req.max_width || req.budget) && !req.exact) throw UsageError("--max-width and --budget need --exact");
  if (req.method && *req.method != "djl" && *req.method != "pairwise") {
    throw UsageError("--method must be djl or pairwise, not '" + *req.method + "'");
  }
  if (req.mode && *req.mode != "ul" && *req.mode != "lu" && *req.mode != "auto") {
    throw UsageError("--mode must be ul, lu or auto, not '" + *req.mode + "'");
  }
  if (req.command == Command::verify && !req.certificate_path) throw UsageError("verify needs --certificate PATH");
  if (req.input_path.empty()) throw UsageError("missing input file");
}

Matrix square_matrix(const Json& doc) {
  auto m = json::matrix_from_json(doc);
  if (!m.is_square()) {
    throw json::JsonError("$.matrix", "expected a square matrix, got " + std::to_string(m.rows()) + "x" +
                                          std::to_string(m.cols()));
  }
  return m;
}

Json pair_json(const std::optional<std::pair<std::size_t, std::size_t>>& w) {
  if (!w) return nullptr;
  return Json::array({w->first + 1, w->second + 1});
}

// Writes the CP verdict into the report; false when A is not CP.
bool cp_verdict(const Matrix& a, Json& report) {
  report["n"] = a.rows();
  report["symmetric"] = a.is_symmetric();
  if (!a.is_symmetric()) {
    report["cp"] = false;
    report["witness"] = nullptr;
    return false;
  }
  const auto v = is_cp(a);
  report["cp"] = v.cp;
  report["witness"] = pair_json(v.witness);
  return v.cp;
}

Json claims_for_cp(const Algebra& alg) {
  Json out = Json::array();
  if (alg.flags().normal) out.push_back(claim::cp_equivalence);
  if (alg.flags().regular) out.push_back(claim::regular_cp);
  return out;
}

Outcome axioms(const CommandRequest& req, const Json& doc) {
  const auto alg = doc.contains("incline") ? json::algebra_from_json(doc["incline"], "$.incline")
                                           : json::algebra_from_json(doc, "$");
  const auto mode = alg.is_finite() ? LawMode::exhaustive : LawMode::sampled;
  if (mode == LawMode::sampled && !req.seed) throw UsageError(alg.name() + " is sampled; --seed is required");
  const auto report = check_axioms(alg, mode, req.samples.value_or(10000), req.seed.value_or(0));
  Outcome o{json::law_report_to_json(alg, report)};
  o.report["incline"] = json::algebra_to_json(alg);
  if (req.seed) o.report["seed"] = *req.seed;
  o.code = report.all_passed() ? kHolds : kRefuted;
  return o;
}

Outcome check(const Json& doc) {
  const auto a = square_matrix(doc);
  Outcome o;
  const bool cp = cp_verdict(a, o.report);
  o.report["diagonally_dominant"] = is_diagonally_dominant(a);
  o.report["tn2"] = is_tn2(a).holds;
  o.report["claims"] = claims_for_cp(a.algebra());
  o.code = cp ? kHolds : kRefuted;
  return o;
}

Outcome decompose(const CommandRequest& req, const Json& doc) {
  const auto a = square_matrix(doc);
  const auto method = req.method.value_or("djl");
  Outcome o;
  o.report["method"] = method;
  o.report["claims"] = claims_for_cp(a.algebra());
  if (!cp_verdict(a, o.report)) {
    o.code = kRefuted;
    return o;
  }
  const auto dec = method == "djl" ? djl_decompose(a) : pairwise_decompose(a);
  if (method == "djl") o.report["claims"].push_back(claim::djl_bound);
  o.report["certificate"] = json::decomposition_to_json(dec);
  o.report["rank"] = dec.rank();
  o.report["max_support"] = dec.max_support();
  o.report["bound"] = cp_rank_upper_bound(a.rows());
  return o;
}

Json refusal_json(const Matrix& a, TriangularMode mode, const FactorResult& r) {
  Json violations = Json::array();
  for (const auto& ap : r.violations) violations.push_back(json::almost_principal_to_json(a.algebra(), ap));
  return Json{{"mode", std::string(mode_name(mode))},
              {"reason", "precondition failed"},
              {"side", mode == TriangularMode::ul ? "left" : "right"},
              {"violations", std::move(violations)}};
}

Outcome factor(const CommandRequest& req, const Json& doc) {
  const auto a = square_matrix(doc);
  const auto& alg = a.algebra();
  const auto mode = req.mode.value_or("auto");
  Outcome o;
  o.report["mode_requested"] = mode;
  o.report["claims"] = Json::array();
  o.report["refusals"] = Json::array();
  o.report["certificate"] = nullptr;
  if (!cp_verdict(a, o.report)) {
    o.report["factored"] = false;
    o.code = kRefuted;
    return o;
  }
  auto attempt = [&](TriangularMode m) {
    o.report["claims"].push_back(m == TriangularMode::ul ? claim::left_apm : claim::right_apm);
    auto r = m == TriangularMode::ul ? ul_factor(a) : lu_factor(a);
    if (r.ok()) {
      o.report["certificate"] = json::triangular_to_json(*r.certificate);
      return true;
    }
    o.report["refusals"].push_back(refusal_json(a, m, r));
    return false;
  };
  bool done = false;
  if (mode == "ul") {
    done = attempt(TriangularMode::ul);
  } else if (mode == "lu") {
    done = attempt(TriangularMode::lu);
  } else if (a.rows() == 3 && alg.flags().totally_ordered && alg.flags().normal) {
    const auto d = factor_3x3(a);
    o.report["claims"].push_back(claim::dichotomy);
    o.report["claims"].push_back(d.certificate.mode == TriangularMode::ul ? claim::left_apm : claim::right_apm);
    o.report["inequalities"] = d.inequalities;
    o.report["certificate"] = json::triangular_to_json(d.certificate);
    done = true;
  } else {
    done = attempt(TriangularMode::lu) || attempt(TriangularMode::ul);
  }
  o.report["factored"] = done;
  o.code = done ? kHolds : kRefuted;
  return o;
}

Outcome cprank(const CommandRequest& req, const Json& doc, std::ostream& err) {
  const auto a = square_matrix(doc);
  const auto& alg = a.algebra();
  const std::size_t n = a.rows();
  Outcome o;
  o.report["exact"] = req.exact;
  o.report["upper_bound"] = cp_rank_upper_bound(n);
  if (!req.exact) {
    const bool cp = cp_verdict(a, o.report);
    o.report["claims"] = claims_for_cp(alg);
    if (cp && alg.flags().totally_ordered && alg.flags().normal) {
      o.report["claims"].push_back(claim::djl_bound);
      o.report["djl_rank"] = djl_decompose(a).rank();
    }
    o.code = cp ? kHolds : kRefuted;
    return o;
  }
  SearchOptions opts;
  opts.max_width = req.max_width.value_or(cp_rank_upper_bound(n));
  if (req.budget) opts.node_budget = *req.budget;
  o.report["n"] = n;
  o.report["max_width"] = opts.max_width;
  o.report["budget"] = opts.node_budget;
  try {
    const auto r = brute_force_cp_rank(a, opts);
    o.report["rank"] = r.rank ? Json(*r.rank) : Json(nullptr);
    o.report["transcript"] = json::transcript_to_json(alg, r.transcript);
    // restricting entries to the carrier is exact for idempotent products only
    const bool complete = alg.is_finite() || (alg.flags().regular && !r.transcript.carrier_truncated);
    o.report["complete"] = complete;
    if (!r.rank) o.report["note"] = complete ? "no factorization within max_width" : "not found within restricted carrier";
    o.code = r.rank ? kHolds : kRefuted;
  } catch (const SearchBudgetExceeded& e) {
    err << "incline: " << e.what() << "\n";
    o.report["rank"] = nullptr;
    o.report["transcript"] = json::transcript_to_json(alg, e.partial());
    o.report["transcript"]["outcome"] = "budget_exceeded";
    o.code = kUsage;
  }
  return o;
}

Outcome verify(const CommandRequest& req, const Json& doc) {
  const auto a = square_matrix(doc);
  const auto cert_doc = json::read_file(*req.certificate_path);
  const bool wrapped = cert_doc.is_object() && cert_doc.contains("certificate");
  const Json& cert = wrapped ? cert_doc["certificate"] : cert_doc;
  const std::string path = wrapped ? "$.certificate" : "$";
  Outcome o;
  if (cert.is_object() && cert.contains("mode")) {
    o.report["certificate_kind"] = "triangular";
    o.report["valid"] = verify_triangular(a, json::triangular_from_json(a.algebra(), cert, path));
  } else if (cert.is_object() && cert.contains("factors")) {
    o.report["certificate_kind"] = "decomposition";
    o.report["valid"] = verify_decomposition(a, json::decomposition_from_json(a.algebra(), cert, path));
  } else {
    throw json::JsonError(path, "expected a decomposition or triangular certificate");
  }
  o.code = o.report["valid"].get<bool>() ? kHolds : kRefuted;
  return o;
}

}  // namespace

std::optional<Command> parse_command(const std::string& name) {
  for (int c = 0; c < 6; ++c) {
    if (name == kCommandNames[c]) return static_cast<Command>(c);
  }
  return std::nullopt;
}

int run(const CommandRequest& req, std::ostream& out, std::ostream& err) {
  try {
    validate(req);
    const auto doc = json::read_file(req.input_path);
    Outcome o;
    switch (req.command) {
      case Command::axioms:
        o = axioms(req, doc);
        break;
      case Command::check:
        o = check(doc);
        break;
      case Command::decompose:
        o = decompose(req, doc);
        break;
      case Command::factor:
        o = factor(req, doc);
        break;
      case Command::cprank:
        o = cprank(req, doc, err);
        break;
      case Command::verify:
        o = verify(req, doc);
        break;
    }
    o.report["command"] = command_name(req.command);
    out << o.report.dump(2) << "\n";
    return o.code;
  } catch (const UsageError& e) {
    err << "incline: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceError& e) {
    err << "incline: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "incline: " << e.what() << "\n";
    return kRefuted;
  } catch (const InternalError& e) {
    err << "incline: internal error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace incline::cli
