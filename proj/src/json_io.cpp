#include "incline/json_io.hpp"

#include <fstream>
#include <sstream>

namespace incline::json {

namespace {

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }
std::string key(const std::string& path, const std::string& k) { return path + "." + k; }

const Json& member(const Json& j, const std::string& path, const std::string& k) {
  if (!j.is_object()) throw JsonError(path, "expected an object");
  auto it = j.find(k);
  if (it == j.end()) throw JsonError(key(path, k), "missing");
  return *it;
}

const Json& array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw JsonError(path, "expected an array");
  return j;
}

std::size_t count(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw JsonError(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

std::string text(const Json& j, const std::string& path) {
  if (!j.is_string()) throw JsonError(path, "expected a string");
  return j.get<std::string>();
}

// lattice table entries may be element names or 0-based indices
std::uint32_t lattice_node(const std::vector<std::string>& names, const Json& j, const std::string& path) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    for (std::uint32_t i = 0; i < names.size(); ++i) {
      if (names[i] == s) return i;
    }
    throw JsonError(path, "unknown lattice element '" + s + "'");
  }
  const auto idx = count(j, path);
  if (idx >= names.size()) throw JsonError(path, "lattice index out of range");
  return static_cast<std::uint32_t>(idx);
}

std::vector<std::vector<std::uint32_t>> lattice_table(const std::vector<std::string>& names, const Json& j,
                                                      const std::string& path) {
  std::vector<std::vector<std::uint32_t>> out;
  for (std::size_t i = 0; i < array(j, path).size(); ++i) {
    const auto row_path = at(path, i);
    std::vector<std::uint32_t> row;
    for (std::size_t c = 0; c < array(j[i], row_path).size(); ++c) {
      row.push_back(lattice_node(names, j[i][c], at(row_path, c)));
    }
    out.push_back(std::move(row));
  }
  return out;
}

Json value_list(const Algebra& alg, const std::vector<Value>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(value_to_json(alg, v));
  return out;
}

Json one_based(const std::vector<std::size_t>& xs) {
  Json out = Json::array();
  for (auto x : xs) out.push_back(x + 1);
  return out;
}

}  // namespace

Json parse_text(const std::string& content, const std::string& origin) {
  try {
    return Json::parse(content);
  } catch (const nlohmann::json::parse_error& e) {
    throw JsonError(origin, "malformed JSON at byte " + std::to_string(e.byte));
  }
}

Json read_file(const std::string& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + file + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str(), file);
}

// ---------------------------------------------------------------------------
// Algebras and values

Algebra algebra_from_json(const Json& j, const std::string& path) {
  const auto kind = text(member(j, path, "kind"), key(path, "kind"));
  if (kind == "boolean") return Algebra::boolean();
  if (kind == "maxmin") return Algebra::maxmin();
  if (kind == "maxplus") return Algebra::maxplus();
  if (kind == "maxtimes") return Algebra::maxtimes();
  if (kind == "chain") {
    const auto size = count(member(j, path, "size"), key(path, "size"));
    if (size < 2) throw JsonError(key(path, "size"), "a chain needs at least 2 elements");
    return Algebra::chain(size);
  }
  if (kind == "lattice") {
    const auto& elems = member(j, path, "elements");
    const auto elems_path = key(path, "elements");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < array(elems, elems_path).size(); ++i) {
      names.push_back(text(elems[i], at(elems_path, i)));
    }
    auto join = lattice_table(names, member(j, path, "join"), key(path, "join"));
    auto meet = lattice_table(names, member(j, path, "meet"), key(path, "meet"));
    try {
      return Algebra::lattice(std::move(names), std::move(join), std::move(meet));
    } catch (const UsageError& e) {
      throw JsonError(path, e.what());
    }
  }
  throw JsonError(key(path, "kind"), "unknown incline kind '" + kind + "'");
}

Json algebra_to_json(const Algebra& alg) {
  Json out;
  out["kind"] = std::string(kind_name(alg.kind()));
  if (alg.kind() == Kind::chain) out["size"] = alg.chain_size();
  if (const auto* t = alg.lattice_tables()) {
    out["elements"] = t->names;
    Json join = Json::array();
    Json meet = Json::array();
    for (std::size_t i = 0; i < t->names.size(); ++i) {
      Json jr = Json::array();
      Json mr = Json::array();
      for (std::size_t c = 0; c < t->names.size(); ++c) {
        jr.push_back(t->names[t->join[i][c]]);
        mr.push_back(t->names[t->meet[i][c]]);
      }
      join.push_back(std::move(jr));
      meet.push_back(std::move(mr));
    }
    out["join"] = std::move(join);
    out["meet"] = std::move(meet);
  }
  return out;
}

Value value_from_json(const Algebra& alg, const Json& j, const std::string& path) {
  std::string literal;
  if (j.is_string()) {
    literal = j.get<std::string>();
  } else if (j.is_number_integer()) {
    literal = std::to_string(j.get<long long>());
  } else if (j.is_boolean()) {
    literal = j.get<bool>() ? "1" : "0";
  } else {
    throw JsonError(path, "expected a value literal string");
  }
  try {
    return alg.parse(literal);
  } catch (const UsageError& e) {
    throw JsonError(path, e.what());
  }
}

Json value_to_json(const Algebra& alg, const Value& v) { return alg.format(v); }

// ---------------------------------------------------------------------------
// Matrices

Matrix grid_from_json(const Algebra& alg, const Json& j, const std::string& path) {
  array(j, path);
  const std::size_t rows = j.size();
  if (rows == 0 || j[0].empty()) throw JsonError(path, "matrix must have at least one row and one column");
  std::size_t cols = 0;
  std::vector<Value> entries;
  for (std::size_t i = 0; i < rows; ++i) {
    const auto row_path = at(path, i);
    array(j[i], row_path);
    if (i == 0) {
      cols = j[i].size();
    } else if (j[i].size() != cols) {
      throw JsonError(row_path, "row has " + std::to_string(j[i].size()) + " entries, expected " + std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) entries.push_back(value_from_json(alg, j[i][c], at(row_path, c)));
  }
  return Matrix(alg, rows, cols, std::move(entries));
}

Json grid_to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(value_to_json(m.algebra(), m(i, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Matrix matrix_from_json(const Json& j) {
  const auto alg = algebra_from_json(member(j, "$", "incline"), "$.incline");
  return grid_from_json(alg, member(j, "$", "matrix"), "$.matrix");
}

Json matrix_to_json(const Matrix& m) {
  return Json{{"incline", algebra_to_json(m.algebra())}, {"matrix", grid_to_json(m)}};
}

// ---------------------------------------------------------------------------
// Certificates

Json decomposition_to_json(const CpDecomposition& dec) {
  Json factors = Json::array();
  for (const auto& f : dec.factors) factors.push_back(value_list(dec.algebra, f));
  return Json{{"n", dec.n},
              {"permutation", one_based(dec.permutation)},
              {"factors", std::move(factors)},
              {"supports", dec.supports}};
}

CpDecomposition decomposition_from_json(const Algebra& alg, const Json& j, const std::string& path) {
  CpDecomposition dec{alg, 0, {}, {}, {}};
  dec.n = count(member(j, path, "n"), key(path, "n"));
  const auto perm_path = key(path, "permutation");
  const auto& perm = member(j, path, "permutation");
  for (std::size_t i = 0; i < array(perm, perm_path).size(); ++i) {
    const auto p = count(perm[i], at(perm_path, i));
    if (p == 0) throw JsonError(at(perm_path, i), "positions are 1-based");
    dec.permutation.push_back(p - 1);
  }
  const auto fac_path = key(path, "factors");
  const auto& facs = member(j, path, "factors");
  for (std::size_t k = 0; k < array(facs, fac_path).size(); ++k) {
    const auto f_path = at(fac_path, k);
    std::vector<Value> f;
    for (std::size_t i = 0; i < array(facs[k], f_path).size(); ++i) {
      f.push_back(value_from_json(alg, facs[k][i], at(f_path, i)));
    }
    dec.factors.push_back(std::move(f));
  }
  const auto sup_path = key(path, "supports");
  const auto& sups = member(j, path, "supports");
  for (std::size_t k = 0; k < array(sups, sup_path).size(); ++k) dec.supports.push_back(count(sups[k], at(sup_path, k)));
  return dec;
}

Json triangular_to_json(const TriangularCertificate& cert) {
  return Json{{"mode", std::string(mode_name(cert.mode))}, {"factor", grid_to_json(cert.factor)}};
}

TriangularCertificate triangular_from_json(const Algebra& alg, const Json& j, const std::string& path) {
  const auto mode = text(member(j, path, "mode"), key(path, "mode"));
  TriangularMode m;
  if (mode == "UL") {
    m = TriangularMode::ul;
  } else if (mode == "LU") {
    m = TriangularMode::lu;
  } else {
    throw JsonError(key(path, "mode"), "expected \"UL\" or \"LU\"");
  }
  return {m, grid_from_json(alg, member(j, path, "factor"), key(path, "factor"))};
}

// ---------------------------------------------------------------------------
// Reports

Json index_set_to_json(const IndexSet& s) { return one_based(s.indices()); }

Json almost_principal_to_json(const Algebra& alg, const AlmostPrincipal& ap) {
  return Json{{"rows", index_set_to_json(ap.rows)},
              {"cols", index_set_to_json(ap.cols)},
              {"det_plus", value_to_json(alg, ap.det.plus)},
              {"det_minus", value_to_json(alg, ap.det.minus)}};
}

Json tn2_violation_to_json(const Algebra& alg, const Tn2Violation& v) {
  return Json{{"rows", {v.i + 1, v.k + 1}},
              {"cols", {v.j + 1, v.l + 1}},
              {"det_plus", value_to_json(alg, v.det.plus)},
              {"det_minus", value_to_json(alg, v.det.minus)}};
}

Json law_report_to_json(const Algebra& alg, const LawReport& report) {
  Json laws = Json::array();
  for (const auto& r : report.laws) {
    Json entry{{"law", r.law}, {"passed", r.passed}, {"cases", r.cases}};
    entry["counterexample"] = r.counterexample.empty() ? Json(nullptr) : value_list(alg, r.counterexample);
    laws.push_back(std::move(entry));
  }
  return Json{{"algebra", report.algebra},
              {"mode", report.mode == LawMode::exhaustive ? "exhaustive" : "sampled"},
              {"tuples", report.tuples},
              {"all_passed", report.all_passed()},
              {"laws", std::move(laws)}};
}

Json transcript_to_json(const Algebra& alg, const SearchTranscript& t) {
  Json out{{"carrier_size", t.carrier.size()},
           {"carrier_truncated", t.carrier_truncated},
           {"widths_tried", t.widths_tried},
           {"candidate_columns", t.candidate_columns},
           {"any_width_feasible", t.any_width_feasible},
           {"outcome", t.found ? "found" : "exhausted"},
           {"nodes_explored", t.nodes_explored}};
  out["carrier"] = t.carrier.size() <= kCarrierListingLimit ? value_list(alg, t.carrier) : Json(nullptr);
  out["witness"] = t.witness ? grid_to_json(*t.witness) : Json(nullptr);
  return out;
}

}  // namespace incline::json
