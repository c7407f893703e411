#include "liebax/cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <sstream>

#include "liebax/io.hpp"

namespace liebax {

namespace {

struct Options {
  std::string algebra;
  std::string form;
  std::string tensor;
  std::string map;
  std::string weight;
  std::string fixture;
  std::string format = "text";
  std::int64_t extend = 1;
};

/// Algebra, form and named objects resolved from --fixture and file options.
struct Inputs {
  LieAlgebra algebra;
  std::optional<BilinearForm> form;
  std::optional<Fixture> fx;
};

Inputs load_inputs(const Options& o) {
  Inputs in;
  if (!o.fixture.empty()) in.fx = fixture(o.fixture);
  if (!o.algebra.empty()) {
    in.algebra = algebra_from_json(read_json_file(o.algebra), o.algebra);
  } else if (in.fx) {
    in.algebra = in.fx->algebra;
  } else {
    throw Error("an algebra is required: pass --algebra FILE or --fixture NAME");
  }
  if (!jacobi_check(in.algebra)) throw Error("algebra: structure constants violate the Jacobi identity");
  if (!o.form.empty())
    in.form = BilinearForm{matrix_from_json(read_json_file(o.form), in.algebra.dim(), o.form)};
  else if (in.fx && o.algebra.empty())
    in.form = in.fx->form;
  if (o.extend != 1) in.algebra = extend_scalars(in.algebra, o.extend);
  return in;
}

const BilinearForm& need_form(const Inputs& in) {
  if (!in.form) throw Error("a bilinear form is required: pass --form FILE");
  return *in.form;
}

Tensor2 load_tensor(const Inputs& in, const std::string& ref) {
  if (ref.empty()) throw Error("a tensor is required: pass --tensor FILE|NAME");
  if (in.fx) {
    auto it = in.fx->tensors.find(ref);
    if (it != in.fx->tensors.end()) return it->second;
  }
  return tensor_from_json(read_json_file(ref), in.algebra.dim(), ref);
}

/// A fixture map name, a rational for that multiple of the identity, or a file.
LinearMap load_map(const Inputs& in, const std::string& ref, const char* what) {
  if (ref.empty()) throw Error(std::string("a ") + what + " is required");
  if (in.fx) {
    auto it = in.fx->maps.find(ref);
    if (it != in.fx->maps.end()) return it->second;
  }
  try {
    return LinearMap::scalar(in.algebra.dim(), Scalar(parse_rational(ref)));
  } catch (const Error&) {
  }
  return matrix_from_json(read_json_file(ref), in.algebra.dim(), ref);
}

void put_vector(std::ostream& os, const LieAlgebra& L, const Vector& v) {
  bool any = false;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    os << (any ? " + " : "") << "(" << v[k] << ")" << L.basis_names()[k];
    any = true;
  }
  if (!any) os << "0";
}

Json matrix_rows(const Matrix& m) { return matrix_to_json(m)["matrix"]; }

int cmd_check(const Options& o, std::ostream& out) {
  const Inputs in = load_inputs(o);
  Json j = Json::object();
  j["jacobi"] = jacobi_check(in.algebra);
  bool ok = true;
  if (in.form) {
    const bool sym = is_symmetric(*in.form), inv = invariance_check(in.algebra, *in.form),
               nondeg = is_nondegenerate(*in.form);
    j["form_symmetric"] = sym;
    j["form_invariant"] = inv;
    j["form_nondegenerate"] = nondeg;
    ok = ok && sym && inv && nondeg;
  }
  if (!o.tensor.empty()) {
    const Tensor2 r = load_tensor(in, o.tensor);
    j["tensor_skew"] = r.is_skew();
    j["tensor_cybe"] = cybe_residual(in.algebra, r).is_zero();
    j["tensor_symmetric_part_invariant"] = tensor_invariance_check(in.algebra, r.symmetric_sum());
  }
  if (o.format == "structured") {
    out << j.dump(2) << "\n";
  } else {
    for (const auto& [k, v] : j.items()) out << k << ": " << (v.get<bool>() ? "yes" : "no") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_centroid(const Options& o, std::ostream& out) {
  const Inputs in = load_inputs(o);
  const CentroidBasis basis = centroid_basis(in.algebra);
  const Simplicity simp = absolute_simplicity(in.algebra);
  if (o.format == "structured") {
    Json j = Json::object();
    j["dim"] = basis.dim();
    j["oversized"] = basis.oversized;
    Json els = Json::array();
    for (const auto& m : basis.elements) els.push_back(matrix_rows(m));
    j["basis"] = els;
    j["simplicity"] = to_string(simp);
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "centroid dimension: " << basis.dim() << "\n";
  if (basis.oversized) out << "warning: centroid is larger than the algebra\n";
  for (std::size_t k = 0; k < basis.dim(); ++k) out << "basis[" << k << "]: " << basis.elements[k].to_string() << "\n";
  out << "simplicity: " << to_string(simp) << "\n";
  return 0;
}

int cmd_rb(const Options& o, std::ostream& out) {
  const Inputs in = load_inputs(o);
  const LinearMap R = load_map(in, o.map, "map (--map)");
  const LinearMap mu = o.weight.empty() ? LinearMap(in.algebra.dim(), in.algebra.dim()) : load_map(in, o.weight, "weight");
  const BilinearTable res = rb_residual(in.algebra, R, mu);
  const bool centrum = is_centrum(in.algebra, mu);
  const bool zero = res.is_zero();
  if (o.format == "structured") {
    Json j = Json::object();
    j["residual_zero"] = zero;
    j["weight_in_centroid"] = centrum;
    Json nz = Json::array();
    for (std::size_t i = 0; i < res.n; ++i)
      for (std::size_t k = 0; k < res.n; ++k)
        if (!is_zero(res.entry(i, k))) {
          Json v = Json::array();
          for (const auto& s : res.entry(i, k)) v.push_back(scalar_to_json(s));
          nz.push_back(Json{{"i", i}, {"j", k}, {"value", v}});
        }
    j["nonzero_entries"] = nz;
    out << j.dump(2) << "\n";
  } else {
    out << "weight in centroid: " << (centrum ? "yes" : "no") << "\n";
    out << "residual: " << (zero ? "zero" : "nonzero") << "\n";
    const auto& names = in.algebra.basis_names();
    for (std::size_t i = 0; i < res.n; ++i)
      for (std::size_t k = 0; k < res.n; ++k)
        if (!is_zero(res.entry(i, k))) {
          out << "  (" << names[i] << ", " << names[k] << ") -> ";
          put_vector(out, in.algebra, res.entry(i, k));
          out << "\n";
        }
  }
  return zero ? 0 : 1;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const Inputs in = load_inputs(o);
  const BilinearForm& w = need_form(in);
  const Tensor2 r = load_tensor(in, o.tensor);
  const ClassificationReport rep = r.is_skew() ? classify(in.algebra, w, r) : classify_nonskew(in.algebra, w, r);
  if (o.format == "structured")
    out << report_to_json(rep).dump(2) << "\n";
  else
    out << render_text(rep, in.algebra);
  return is_bialgebra(rep.verdict) ? 0 : 1;
}

int cmd_double(const Options& o, std::ostream& out) {
  const Inputs in = load_inputs(o);
  LieAlgebra D;
  if (!o.map.empty()) {
    const LinearMap R = load_map(in, o.map, "map (--map)");
    const LinearMap mu = o.weight.empty() ? LinearMap(in.algebra.dim(), in.algebra.dim()) : load_map(in, o.weight, "weight");
    D = build_double(in.algebra, R, mu);
  } else if (!o.tensor.empty()) {
    D = drinfeld_double(in.algebra, need_form(in), load_tensor(in, o.tensor));
  } else {
    throw Error("double needs --map (with optional --weight) or --tensor");
  }
  out << algebra_to_json(D).dump(2) << "\n";
  return 0;
}

int cmd_fixtures(const Options& o, std::ostream& out) {
  if (o.fixture.empty()) {
    for (const auto& name : fixture_names()) out << name << "\n";
    return 0;
  }
  out << fixture_source(o.fixture);
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Lie bialgebra and Rota-Baxter toolkit", "liebax"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--algebra", o.algebra, "algebra JSON file");
    sub->add_option("--form", o.form, "bilinear form JSON file");
    sub->add_option("--fixture", o.fixture, "built-in fixture name");
    sub->add_option("--format", o.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
    sub->add_option("--extend", o.extend, "read the algebra over Q(sqrt(d))");
  };
  auto* check = app.add_subcommand("check", "validate algebra, form and tensor");
  add_common(check);
  check->add_option("--tensor", o.tensor, "tensor file or fixture name");
  auto* centroid = app.add_subcommand("centroid", "centroid basis and simplicity");
  add_common(centroid);
  auto* rb = app.add_subcommand("rb", "Rota-Baxter residual of --map with --weight");
  add_common(rb);
  rb->add_option("--map", o.map, "operator file or fixture name")->required();
  rb->add_option("--weight", o.weight, "weight file, fixture name or rational multiple of id");
  auto* cls = app.add_subcommand("classify", "classify the cobracket of --tensor");
  add_common(cls);
  cls->add_option("--tensor", o.tensor, "tensor file or fixture name")->required();
  auto* dbl = app.add_subcommand("double", "emit the double of (--map, --weight) or of --tensor");
  add_common(dbl);
  dbl->add_option("--map", o.map, "operator file or fixture name");
  dbl->add_option("--weight", o.weight, "weight file, fixture name or rational multiple of id");
  dbl->add_option("--tensor", o.tensor, "tensor file or fixture name");
  auto* fx = app.add_subcommand("fixtures", "list fixtures or print one");
  fx->add_option("--fixture", o.fixture, "fixture to print");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (check->parsed()) return cmd_check(o, out);
    if (centroid->parsed()) return cmd_centroid(o, out);
    if (rb->parsed()) return cmd_rb(o, out);
    if (cls->parsed()) return cmd_classify(o, out);
    if (dbl->parsed()) return cmd_double(o, out);
    if (fx->parsed()) return cmd_fixtures(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace liebax
