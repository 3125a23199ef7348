#pragma once

// JSON schemas for algebras, matrices, certificates and reports.
//
//   algebra   {"kind": ..., "size": k, "elements": [...], "join": [[...]], "meet": [[...]]}
//   matrix    {"incline": <algebra>, "matrix": [[literal, ...], ...]}
//   CP        {"n": n, "permutation": [...], "factors": [[literal, ...], ...], "supports": [...]}
//   triangle  {"mode": "UL" | "LU", "factor": [[literal, ...], ...]}
//
// Positions in emitted JSON are 1-based. Readers throw JsonError naming the
// offending element as a path such as "$.matrix[1][0]".

#include <string>

#include <json.hpp>

#include "incline/algebra.hpp"
#include "incline/cp.hpp"
#include "incline/errors.hpp"
#include "incline/factorization.hpp"
#include "incline/laws.hpp"
#include "incline/matrix.hpp"
#include "incline/oracle.hpp"

namespace incline::json {

using Json = nlohmann::json;

class JsonError : public UsageError {
 public:
  JsonError(const std::string& path, const std::string& what) : UsageError(path + ": " + what), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// Reads and parses a file; malformed JSON is reported with its byte offset.
Json read_file(const std::string& file);
Json parse_text(const std::string& text, const std::string& origin);

Algebra algebra_from_json(const Json& j, const std::string& path = "$");
Json algebra_to_json(const Algebra& alg);

// Accepts strings, and integers or booleans where the literal would be the
// same digits.
Value value_from_json(const Algebra& alg, const Json& j, const std::string& path);
Json value_to_json(const Algebra& alg, const Value& v);

Matrix grid_from_json(const Algebra& alg, const Json& j, const std::string& path);
Json grid_to_json(const Matrix& m);

Matrix matrix_from_json(const Json& j);
Json matrix_to_json(const Matrix& m);

Json decomposition_to_json(const CpDecomposition& dec);
CpDecomposition decomposition_from_json(const Algebra& alg, const Json& j, const std::string& path = "$");

Json triangular_to_json(const TriangularCertificate& cert);
TriangularCertificate triangular_from_json(const Algebra& alg, const Json& j, const std::string& path = "$");

Json index_set_to_json(const IndexSet& s);
Json almost_principal_to_json(const Algebra& alg, const AlmostPrincipal& ap);
Json tn2_violation_to_json(const Algebra& alg, const Tn2Violation& v);

Json law_report_to_json(const Algebra& alg, const LawReport& report);

inline constexpr std::size_t kCarrierListingLimit = 64;
Json transcript_to_json(const Algebra& alg, const SearchTranscript& t);

}  // namespace incline::json
