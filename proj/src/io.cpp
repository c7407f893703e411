#include "liebax/io.hpp"

#include <fstream>
#include <sstream>

#include "fixture_data.hpp"

namespace liebax {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw Error(where + ": " + what); }

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing \"") + key + "\"");
  return *it;
}

std::size_t index_value(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  auto v = j.get<long long>();
  if (v < 0) fail(where, "negative index");
  return static_cast<std::size_t>(v);
}

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fail(where, "expected a rational string such as \"3/4\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

Json rational_to_json(const Rational& q) { return to_string(q); }

Vector vector_from_json(const Json& j, std::size_t n, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  if (j.size() != n) fail(where, "expected " + std::to_string(n) + " entries, got " + std::to_string(j.size()));
  Vector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(scalar_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

Matrix rows_from_json(const Json& j, std::size_t n, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of rows");
  if (j.size() != n) fail(where, "expected " + std::to_string(n) + " rows, got " + std::to_string(j.size()));
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i) rows.push_back(vector_from_json(j[i], n, where + "[" + std::to_string(i) + "]"));
  return Matrix::from_rows(rows, n);
}

Json rows_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(origin + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path);
}

Scalar scalar_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) return Scalar(rational_from_json(j, where));
  Rational a = rational_from_json(member(j, "a", where), where + ".a");
  Rational b = rational_from_json(member(j, "b", where), where + ".b");
  const Json& dj = member(j, "d", where);
  if (!dj.is_number_integer()) fail(where + ".d", "expected an integer");
  const auto d = dj.get<std::int64_t>();
  if (sgn(b) == 0) return Scalar(a);
  try {
    return Scalar(a, b, d);
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

Json scalar_to_json(const Scalar& s) {
  if (s.is_rational()) return rational_to_json(s.a());
  Json o = Json::object();
  o["a"] = rational_to_json(s.a());
  o["b"] = rational_to_json(s.b());
  o["d"] = s.d();
  return o;
}

LieAlgebra algebra_from_json(const Json& j, const std::string& where) {
  const std::size_t n = index_value(member(j, "dim", where), where + ".dim");
  if (n == 0) fail(where + ".dim", "dimension must be positive");
  Field field;
  if (j.contains("field")) {
    const Json& f = j["field"];
    const Json& kind = member(f, "kind", where + ".field");
    if (kind == "Q") {
    } else if (kind == "QuadExt") {
      const Json& d = member(f, "d", where + ".field");
      if (!d.is_number_integer()) fail(where + ".field.d", "expected an integer");
      try {
        field = Field(d.get<std::int64_t>());
      } catch (const Error& e) {
        fail(where + ".field.d", e.what());
      }
    } else {
      fail(where + ".field.kind", "expected \"Q\" or \"QuadExt\"");
    }
  }
  std::vector<std::string> names;
  if (j.contains("basis")) {
    const Json& b = j["basis"];
    if (!b.is_array() || b.size() != n) fail(where + ".basis", "expected " + std::to_string(n) + " names");
    for (std::size_t i = 0; i < n; ++i) {
      if (!b[i].is_string()) fail(where + ".basis[" + std::to_string(i) + "]", "expected a string");
      names.push_back(b[i].get<std::string>());
    }
  }
  LieAlgebra L(n, field, names);
  if (j.contains("brackets")) {
    const Json& br = j["brackets"];
    if (!br.is_array()) fail(where + ".brackets", "expected an array");
    std::vector<bool> seen(n * n, false);
    for (std::size_t e = 0; e < br.size(); ++e) {
      const std::string at = where + ".brackets[" + std::to_string(e) + "]";
      const std::size_t i = index_value(member(br[e], "i", at), at + ".i");
      const std::size_t k = index_value(member(br[e], "j", at), at + ".j");
      if (i >= n || k >= n) fail(at, "index out of range");
      if (i >= k) fail(at, "entries must have i < j; the rest follows by antisymmetry");
      if (seen[i * n + k]) fail(at, "duplicate entry");
      seen[i * n + k] = true;
      Vector v = vector_from_json(member(br[e], "coeffs", at), n, at + ".coeffs");
      for (const auto& s : v)
        if (!s.is_rational() && s.d() != field.d()) fail(at + ".coeffs", "scalar outside " + field.to_string());
      L.set_bracket(i, k, v);
    }
  }
  return L;
}

Json algebra_to_json(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  if (!is_antisymmetric(L)) throw Error("only antisymmetric products can be written as algebra files");
  Json j = Json::object();
  j["dim"] = n;
  j["basis"] = L.basis_names();
  j["field"] = L.field().is_rational() ? Json{{"kind", "Q"}} : Json{{"kind", "QuadExt"}, {"d", L.field().d()}};
  Json br = Json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 1; k < n; ++k) {
      const Vector v = L.product(i, k);
      if (is_zero(v)) continue;
      Json coeffs = Json::array();
      for (const auto& s : v) coeffs.push_back(scalar_to_json(s));
      br.push_back(Json{{"i", i}, {"j", k}, {"coeffs", coeffs}});
    }
  j["brackets"] = br;
  return j;
}

Matrix matrix_from_json(const Json& j, std::size_t n, const std::string& where) {
  return rows_from_json(member(j, "matrix", where), n, where + ".matrix");
}

Json matrix_to_json(const Matrix& m) { return Json{{"matrix", rows_to_json(m)}}; }

Tensor2 tensor_from_json(const Json& j, std::size_t n, const std::string& where) {
  return {rows_from_json(member(j, "coeffs", where), n, where + ".coeffs")};
}

Json tensor_to_json(const Tensor2& t) { return Json{{"coeffs", rows_to_json(t.coeffs)}}; }

Json report_to_json(const ClassificationReport& report) {
  Json j = Json::object();
  j["verdict"] = to_string(report.verdict);
  if (report.nu) j["nu"] = rows_to_json(*report.nu);
  if (report.mu) j["mu"] = rows_to_json(*report.mu);
  if (report.extension_d) j["extension_d"] = *report.extension_d;
  if (report.witness) j["witness"] = rows_to_json(report.witness->coeffs);
  if (report.witness_weight) j["witness_weight"] = rows_to_json(*report.witness_weight);
  Json res = Json::object();
  if (report.theta) {
    Json th = Json::array();
    for (const auto& v : report.theta->entries) {
      Json row = Json::array();
      for (const auto& s : v) row.push_back(scalar_to_json(s));
      th.push_back(std::move(row));
    }
    res["theta"] = th;
  }
  Json checks = Json::object();
  for (const auto& c : report.checks) checks[c.name] = c.passed;
  res["checks"] = checks;
  j["residuals"] = res;
  if (!report.note.empty()) j["note"] = report.note;
  return j;
}

Fixture fixture_from_json(const Json& j, const std::string& where) {
  Fixture fx;
  const Json& name = member(j, "name", where);
  if (!name.is_string()) fail(where + ".name", "expected a string");
  fx.name = name.get<std::string>();
  fx.algebra = algebra_from_json(member(j, "algebra", where), where + ".algebra");
  const std::size_t n = fx.algebra.dim();
  fx.form = {matrix_from_json(member(j, "form", where), n, where + ".form")};
  if (j.contains("tensors"))
    for (const auto& [key, value] : j["tensors"].items())
      fx.tensors.emplace(key, tensor_from_json(value, n, where + ".tensors." + key));
  if (j.contains("maps"))
    for (const auto& [key, value] : j["maps"].items())
      fx.maps.emplace(key, matrix_from_json(value, n, where + ".maps." + key));
  return fx;
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const auto& [name, text] : embedded_fixtures()) names.push_back(name);
  return names;
}

const std::string& fixture_source(const std::string& name) {
  for (const auto& [n, text] : embedded_fixtures())
    if (n == name) return text;
  throw Error("unknown fixture \"" + name + "\"");
}

Fixture fixture(const std::string& name) {
  return fixture_from_json(parse_json(fixture_source(name), "fixture " + name), name);
}

}  // namespace liebax
