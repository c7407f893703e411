#include <gtest/gtest.h>

#include <filesystem>

#include "liebax/cli.hpp"
#include "support.hpp"

using namespace liebax;
using namespace testsupport;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "liebax");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto dir = std::filesystem::temp_directory_path() / "liebax_cli_tests";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST(Json, AlgebraRoundTrip) {
  for (const auto& name : fixture_names()) {
    const LieAlgebra L = fixture(name).algebra;
    const Json emitted = algebra_to_json(L);
    EXPECT_EQ(algebra_from_json(parse_json(emitted.dump(), "emitted")), L);
  }
  const LieAlgebra e = extend_scalars(fixture("sl2q").algebra, -1);
  EXPECT_EQ(algebra_from_json(algebra_to_json(e)), e);
  const LieAlgebra d = drinfeld_double(fixture("sl2q").algebra, fixture("sl2q").form, fixture("sl2q").tensors.at("r3"));
  EXPECT_EQ(algebra_from_json(algebra_to_json(d)), d);
}

TEST(Json, ScalarForms) {
  EXPECT_EQ(scalar_from_json(Json("3/4"), "s"), Scalar(Rational(3, 4)));
  EXPECT_EQ(scalar_from_json(Json(-2), "s"), Scalar(-2));
  const Scalar q(Rational(1, 2), Rational(-3), -1);
  EXPECT_EQ(scalar_from_json(scalar_to_json(q), "s"), q);
  EXPECT_THROW(scalar_from_json(Json("x"), "s"), Error);
  EXPECT_THROW(scalar_from_json(parse_json(R"({"a": "1", "b": "1", "d": 4})", "t"), "s"), Error);
}

TEST(Json, MalformedInputsCarryPositions) {
  try {
    parse_json("{\"dim\": 3,, }", "bad.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("bad.json: malformed JSON at byte"), std::string::npos);
  }
  const Json j = parse_json(R"({"dim": 2, "brackets": [{"i": 0, "j": 1, "coeffs": ["1", "q"]}]})", "t");
  try {
    algebra_from_json(j);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("algebra.brackets[0].coeffs[1]"), std::string::npos) << e.what();
  }
  const Json dup = parse_json(
      R"({"dim": 2, "brackets": [{"i": 0, "j": 1, "coeffs": ["1", "0"]}, {"i": 0, "j": 1, "coeffs": ["1", "0"]}]})",
      "t");
  EXPECT_THROW(algebra_from_json(dup), Error);
  const Json order = parse_json(R"({"dim": 2, "brackets": [{"i": 1, "j": 0, "coeffs": ["1", "0"]}]})", "t");
  EXPECT_THROW(algebra_from_json(order), Error);
  EXPECT_THROW(matrix_from_json(parse_json(R"({"matrix": [["1"]]})", "t"), 2, "m"), Error);
  EXPECT_THROW(tensor_from_json(parse_json(R"({"coeffs": [["1", "0"], ["0"]]})", "t"), 2, "r"), Error);
}

TEST(Fixtures, Contents) {
  EXPECT_EQ(fixture_names(), (std::vector<std::string>{"sl2q", "sl2c6"}));
  for (const auto& name : fixture_names()) {
    const Fixture f = fixture(name);
    EXPECT_TRUE(jacobi_check(f.algebra));
    EXPECT_TRUE(invariance_check(f.algebra, f.form));
    EXPECT_TRUE(is_nondegenerate(f.form));
    EXPECT_EQ(fixture_from_json(parse_json(fixture_source(name), name), name).algebra, f.algebra);
  }
  EXPECT_EQ(fixture("sl2q").tensors.size(), 3u);
  EXPECT_THROW(fixture("unknown"), Error);
  // R(x) = R(y) = -h, R(h) = 2(x + y), and likewise on the imaginary copy
  const Fixture c = fixture("sl2c6");
  const LinearMap& R = c.maps.at("R");
  EXPECT_EQ(R.column(0), -unit_vector(6, 1));
  EXPECT_EQ(R.column(2), -unit_vector(6, 1));
  EXPECT_EQ(R.column(1), Scalar(2) * (unit_vector(6, 0) + unit_vector(6, 2)));
  EXPECT_EQ(R.column(4), Scalar(2) * (unit_vector(6, 3) + unit_vector(6, 5)));
  EXPECT_EQ(R.column(3), -unit_vector(6, 4));
  EXPECT_EQ(R, map_from_tensor(c.tensors.at("r"), c.form));
}

TEST(Cli, ClassifyExamples) {
  const CliRun a = run_cli({"classify", "--fixture", "sl2q", "--tensor", "r1"});
  EXPECT_EQ(a.code, 0);
  EXPECT_NE(a.out.find("verdict: TRIANGULAR"), std::string::npos);
  const CliRun b = run_cli({"classify", "--fixture", "sl2q", "--tensor", "r2", "--format", "structured"});
  EXPECT_EQ(b.code, 0);
  const Json j = parse_json(b.out, "output");
  EXPECT_EQ(j.at("verdict"), "FACTORIZABLE");
  EXPECT_EQ(matrix_from_json(Json{{"matrix", j.at("mu")}}, 3, "mu"), LinearMap::identity(3));
  const CliRun c = run_cli({"classify", "--fixture", "sl2q", "--tensor", "r3", "--format", "structured"});
  EXPECT_EQ(parse_json(c.out, "output").at("extension_d"), -1);
  const CliRun d = run_cli({"classify", "--fixture", "sl2c6", "--tensor", "rB"});
  EXPECT_EQ(d.code, 0);
  EXPECT_NE(d.out.find("verdict: FACTORIZABLE"), std::string::npos);
}

TEST(Cli, TextAndStructuredAgree) {
  for (const char* t : {"r1", "r2", "r3"}) {
    const CliRun text = run_cli({"classify", "--fixture", "sl2q", "--tensor", t});
    const CliRun st = run_cli({"classify", "--fixture", "sl2q", "--tensor", t, "--format", "structured"});
    const std::string verdict = parse_json(st.out, "output").at("verdict").get<std::string>();
    EXPECT_NE(text.out.find("verdict: " + verdict + "\n"), std::string::npos) << t;
    EXPECT_EQ(text.code, st.code);
  }
}

TEST(Cli, RejectionsExitOne) {
  const std::string r = temp_file("noncoalgebra.json", read_json_file(data_path("non_coalgebra_r.json")).at("tensor").dump());
  const CliRun a = run_cli({"classify", "--fixture", "sl2c6", "--tensor", r});
  EXPECT_EQ(a.code, 1);
  EXPECT_NE(a.out.find("NOT_BIALGEBRA"), std::string::npos);
  const CliRun b = run_cli({"rb", "--fixture", "sl2c6", "--map", "B", "--weight", "phi"});
  EXPECT_EQ(b.code, 1);
}

TEST(Cli, RotaBaxterAndDouble) {
  const CliRun a = run_cli({"rb", "--fixture", "sl2c6", "--map", "B", "--weight", "2phi"});
  EXPECT_EQ(a.code, 0);
  EXPECT_NE(a.out.find("residual: zero"), std::string::npos);
  const CliRun d = run_cli({"double", "--fixture", "sl2q", "--map", "-1", "--weight", "1"});
  ASSERT_EQ(d.code, 0) << d.err;
  const LieAlgebra sl2 = fixture("sl2q").algebra;
  EXPECT_EQ(algebra_from_json(parse_json(d.out, "output")),
            build_double(sl2, Scalar(-1) * LinearMap::identity(3), LinearMap::identity(3)));
  const CliRun t = run_cli({"double", "--fixture", "sl2q", "--tensor", "r2"});
  ASSERT_EQ(t.code, 0) << t.err;
  const Fixture f = fixture("sl2q");
  EXPECT_EQ(algebra_from_json(parse_json(t.out, "output")), drinfeld_double(f.algebra, f.form, f.tensors.at("r2")));
}

TEST(Cli, CentroidAndCheck) {
  const CliRun c = run_cli({"centroid", "--fixture", "sl2c6", "--format", "structured"});
  EXPECT_EQ(c.code, 0);
  const Json j = parse_json(c.out, "output");
  EXPECT_EQ(j.at("dim"), 2);
  EXPECT_EQ(j.at("simplicity"), "SIMPLE_NOT_ABSOLUTELY");
  const CliRun k = run_cli({"check", "--fixture", "sl2q", "--tensor", "r1"});
  EXPECT_EQ(k.code, 0);
  EXPECT_NE(k.out.find("tensor_cybe: yes"), std::string::npos);
  const CliRun l = run_cli({"fixtures"});
  EXPECT_EQ(l.out, "sl2q\nsl2c6\n");
  const CliRun m = run_cli({"fixtures", "--fixture", "sl2c6"});
  EXPECT_EQ(fixture_from_json(parse_json(m.out, "output"), "output").maps.at("B"), fixture("sl2c6").maps.at("B"));
}

TEST(Cli, InputErrorsExitTwo) {
  // antisymmetric constants violating Jacobi: [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e1
  const std::string bad = temp_file("bad.json", R"({"dim": 3, "brackets": [
    {"i": 0, "j": 1, "coeffs": ["0", "0", "1"]},
    {"i": 1, "j": 2, "coeffs": ["1", "0", "0"]},
    {"i": 0, "j": 2, "coeffs": ["-1", "0", "0"]}]})");
  const std::string form = temp_file("id.json", R"({"matrix": [["1","0","0"],["0","1","0"],["0","0","1"]]})");
  const std::string zero = temp_file("zero.json", R"({"coeffs": [["0","0","0"],["0","0","0"],["0","0","0"]]})");
  const CliRun a = run_cli({"classify", "--algebra", bad, "--form", form, "--tensor", zero});
  EXPECT_EQ(a.code, 2);
  EXPECT_NE(a.err.find("Jacobi"), std::string::npos);
  const std::string broken = temp_file("broken.json", "{\"dim\": 3, \"brackets\": [ }");
  const CliRun b = run_cli({"check", "--algebra", broken});
  EXPECT_EQ(b.code, 2);
  EXPECT_NE(b.err.find("byte"), std::string::npos);
  EXPECT_EQ(run_cli({"classify", "--fixture", "unknown", "--tensor", "r1"}).code, 2);
  EXPECT_EQ(run_cli({"classify", "--fixture", "sl2q"}).code, 2);
  EXPECT_EQ(run_cli({"bogus"}).code, 2);
  EXPECT_EQ(run_cli({"classify", "--fixture", "sl2q", "--tensor", "r1", "--format", "xml"}).code, 2);
  // a non-skew tensor that is not a CYBE solution is a rejection, not an input error
  const std::string idt = temp_file("idt.json", R"({"coeffs": [["1","0","0"],["0","1","0"],["0","0","1"]]})");
  const CliRun c = run_cli({"classify", "--fixture", "sl2q", "--tensor", idt});
  EXPECT_EQ(c.code, 1);
  EXPECT_NE(c.out.find("NOT_CYBE_SOLUTION"), std::string::npos);
}
