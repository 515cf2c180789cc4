#include "stereohomology/cli.hpp"

#include "stereohomology/classify.hpp"
#include "stereohomology/compose.hpp"
#include "stereohomology/construct.hpp"
#include "stereohomology/desargues.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

namespace stereo::cli {

namespace {

using io::SchemaError;

const json& require(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw SchemaError(std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

// A transform operand is either a 4x4 matrix, {"matrix": ...} or a spec object.
template <Scalar T>
HomMatrix<T> operand(const json& j, const std::string& where) {
  if (j.is_array()) return io::matrix_from_json<T>(j, where);
  if (j.is_object() && j.contains("matrix")) return io::matrix_from_json<T>(j.at("matrix"), where + ".matrix");
  if (j.is_object() && j.contains("kind")) return construct(io::spec_from_json<T>(j));
  throw SchemaError(where + ": expected a matrix or a spec object");
}

// Classification of the canonically scaled matrix, so lambda and rho_or_mu
// match the printed entries.
template <Scalar T>
json classify_json(const HomMatrix<T>& m) {
  m.require_transformation();
  return io::classification_to_json(classify(HomMatrix<T>(canonical(m.matrix()))));
}

template <Scalar T>
json do_construct(const json& doc) {
  const ElementarySpec<T> s = io::spec_from_json<T>(doc);
  const HomMatrix<T> m = construct(s);
  return {{"kind", spec_kind_name(spec_row(s))}, {"matrix", io::matrix_to_json(m.matrix())}};
}

template <Scalar T>
json do_classify(const json& doc) {
  const HomMatrix<T> m = io::matrix_from_json<T>(require(doc, "matrix"), "matrix");
  return classify_json(m);
}

template <Scalar T>
json do_compose(const json& doc) {
  const HomMatrix<T> left = operand<T>(require(doc, "left"), "left");
  const HomMatrix<T> right = operand<T>(require(doc, "right"), "right");
  const Composition<T> c = compose(left, right);
  return {{"matrix", io::matrix_to_json(c.product.matrix())},
          {"note", io::note_to_json(c.note)},
          {"classification", classify_json(c.product)}};
}

template <Scalar T>
json do_apply(const json& doc) {
  const HomMatrix<T> m = operand<T>(require(doc, "matrix"), "matrix");
  json out = json::object();
  if (doc.contains("points")) {
    const json& pts = doc.at("points");
    if (!pts.is_array()) throw SchemaError("points: expected an array");
    json images = json::array();
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const Vec4<T> v = m.matrix() * io::point_from_json<T>(pts[i], "points[" + std::to_string(i) + "]").coords();
      images.push_back(all_zero<T>(v) ? json(nullptr) : io::vec4_to_json(v));
    }
    out["points"] = images;
  }
  if (doc.contains("hyperplanes")) {
    const json& hs = doc.at("hyperplanes");
    if (!hs.is_array()) throw SchemaError("hyperplanes: expected an array");
    json images = json::array();
    if (!hs.empty()) {
      const HomMatrix<T> h = hyperplane_transform(m);
      for (std::size_t i = 0; i < hs.size(); ++i)
        images.push_back(io::vec4_to_json<T>(
            h.matrix() * io::hyperplane_from_json<T>(hs[i], "hyperplanes[" + std::to_string(i) + "]").coeffs()));
    }
    out["hyperplanes"] = images;
  }
  return out;
}

json do_rotate(const json& doc) {
  json out;
  RotationSpec spec;
  HomMatrix<double> r(Mat4<double>::identity());
  if (doc.is_object() && doc.contains("planes")) {
    const json& planes = doc.at("planes");
    if (!planes.is_array() || planes.size() != 2) throw SchemaError("planes: expected two hyperplanes");
    const auto pi1 = io::hyperplane_from_json<double>(planes[0], "planes[0]");
    const auto pi2 = io::hyperplane_from_json<double>(planes[1], "planes[1]");
    r = rotation_from_reflections(pi1, pi2);
    if (proportional(pi1, pi2)) {
      out["spec"] = nullptr;
      out["rodrigues_deviation"] = nullptr;
      out["eigenstructure_ok"] = nullptr;
      out["matrix"] = io::matrix_to_json(r.matrix());
      return out;
    }
    spec = reflection_pair_axis(pi1, pi2);
    out["rodrigues_deviation"] = scaled_max_deviation(r.matrix(), rotation_rodrigues(spec).matrix());
  } else {
    spec = io::rotation_spec_from_json(doc);
    r = rotation_rodrigues(spec);
  }
  out["spec"] = io::rotation_spec_to_json(spec);
  out["matrix"] = io::matrix_to_json(r.matrix());
  out["eigenstructure_ok"] = check_rotation_eigenstructure(r, spec);
  return out;
}

template <Scalar T>
json do_verify(const json& doc) {
  return io::report_to_json(verify_configuration(io::config_from_json<T>(doc)));
}

template <Scalar T>
json do_solve(const json& doc) {
  const DesarguesConfig<T> cfg = io::config_from_json<T>(doc);
  const HomMatrix<T> a = construct_cramer(cfg);
  const HomMatrix<T> b = construct_linear_system(cfg);
  return {{"matrix", io::matrix_to_json(a.matrix())},
          {"linear_system", io::matrix_to_json(b.matrix())},
          {"oracle_agreement", proportional(a, b)},
          {"classification", classify_json(a)}};
}

using Handler = std::function<json(const json&)>;

template <Scalar T>
const std::map<std::string, Handler, std::less<>>& handlers() {
  static const std::map<std::string, Handler, std::less<>> table{
      {"construct", do_construct<T>},      {"classify", do_classify<T>},
      {"compose", do_compose<T>},          {"apply", do_apply<T>},
      {"rotate", do_rotate},               {"desargues-verify", do_verify<T>},
      {"desargues-solve", do_solve<T>},
  };
  return table;
}

Backend resolve_backend(std::string_view sub, const json& doc, std::optional<Backend> flag) {
  if (sub == "rotate") return Backend::Float;
  if (flag) return *flag;
  if (doc.is_object() && doc.contains("backend")) {
    const json& b = doc.at("backend");
    const auto parsed = b.is_string() ? parse_backend(b.get<std::string>()) : std::nullopt;
    if (!parsed) throw SchemaError("backend: expected \"rational\" or \"float\"");
    return *parsed;
  }
  return Backend::Rational;
}

}  // namespace

Response run_request(std::string_view subcommand, const json& doc, std::optional<Backend> backend) {
  try {
    const auto& table = handlers<Rational>();
    if (table.find(subcommand) == table.end())
      return {kSchema, io::error_body("SchemaError", "unknown subcommand " + std::string(subcommand))};
    const Backend b = resolve_backend(subcommand, doc, backend);
    json out = b == Backend::Rational ? handlers<Rational>().find(subcommand)->second(doc)
                                      : handlers<double>().find(subcommand)->second(doc);
    out["backend"] = backend_name(b);
    return {kOk, std::move(out)};
  } catch (const SchemaError& e) {
    return {kSchema, io::error_body("SchemaError", e.what())};
  } catch (const json::exception& e) {
    return {kSchema, io::error_body("SchemaError", e.what())};
  } catch (const GeometryError& e) {
    json detail = e.what();
    if (e.row()) detail = json{{"message", e.what()}, {"row", *e.row()}};
    return {kDomain, io::error_body(e.name(), detail)};
  }
}

int run_cli(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stereohomology construction, classification and Desargues solvers"};
  app.require_subcommand(1, 1);
  std::string in_path, out_path, backend_text;
  bool pretty = false;
  app.add_option("--in", in_path, "input JSON file (default stdin)");
  app.add_option("--out", out_path, "output JSON file (default stdout)");
  app.add_option("--backend", backend_text, "rational or float")->check(CLI::IsMember({"rational", "float"}));
  app.add_flag("--pretty", pretty, "indent the output");
  for (const auto& [name, fn] : handlers<Rational>()) app.add_subcommand(name, "")->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kSchema;
  }
  const std::string sub = app.get_subcommands().front()->get_name();

  Response resp;
  json doc;
  bool parsed = false;
  std::ifstream file;
  std::istream* src = &in;
  if (!in_path.empty()) {
    file.open(in_path);
    src = &file;
  }
  if (!*src) {
    resp = {kSchema, io::error_body("SchemaError", "cannot open " + in_path)};
  } else {
    try {
      doc = json::parse(*src);
      parsed = true;
    } catch (const json::parse_error& e) {
      resp = {kSchema, io::error_body("SchemaError", e.what())};
    }
  }
  if (parsed) resp = run_request(sub, doc, backend_text.empty() ? std::nullopt : parse_backend(backend_text));

  const std::string text = resp.output.dump(pretty ? 2 : -1) + "\n";
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(out_path);
    if (!f) {
      err << "cannot write " << out_path << "\n";
      return kSchema;
    }
    f << text;
  }
  return resp.exit_code;
}

}  // namespace stereo::cli
