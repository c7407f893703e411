#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "liebax/bialg.hpp"

namespace liebax {

using Json = nlohmann::ordered_json;

/// Parses a JSON document; syntax errors carry the byte offset. `origin`
/// names the source in messages.
Json parse_json(const std::string& text, const std::string& origin);
Json read_json_file(const std::string& path);

/// "p/q" or {"a": "p/q", "b": "p/q", "d": int}. `where` prefixes error messages.
Scalar scalar_from_json(const Json& j, const std::string& where);
Json scalar_to_json(const Scalar& s);

LieAlgebra algebra_from_json(const Json& j, const std::string& where = "algebra");
Json algebra_to_json(const LieAlgebra& L);

/// {"matrix": [[...], ...]} row-major, n x n.
Matrix matrix_from_json(const Json& j, std::size_t n, const std::string& where);
Json matrix_to_json(const Matrix& m);
/// {"coeffs": [[...], ...]}, row index = first tensor slot.
Tensor2 tensor_from_json(const Json& j, std::size_t n, const std::string& where);
Json tensor_to_json(const Tensor2& t);

Json report_to_json(const ClassificationReport& report);

struct Fixture {
  std::string name;
  LieAlgebra algebra;
  BilinearForm form;
  std::map<std::string, Tensor2> tensors;
  std::map<std::string, LinearMap> maps;
};

Fixture fixture_from_json(const Json& j, const std::string& where);
/// Built-in fixtures "sl2q" and "sl2c6". Throws on unknown names.
Fixture fixture(const std::string& name);
std::vector<std::string> fixture_names();
/// The stored JSON text of a built-in fixture.
const std::string& fixture_source(const std::string& name);

}  // namespace liebax
