#include "stereohomology/cli.hpp"
#include "stereohomology/compose.hpp"
#include "stereohomology/construct.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace stereo;

namespace {

using Rows = std::array<std::array<double, 4>, 4>;

Rows to_rows(const HomMatrix<double>& m) {
  Rows out{};
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) out[r][c] = m(r, c);
  return out;
}

HomMatrix<double> from_rows(const Rows& rows) {
  Mat4<double> m;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) m(r, c) = rows[r][c];
  return HomMatrix<double>(m);
}

MuConvention convention(const std::string& name) {
  if (name == "normalized") return MuConvention::Normalized;
  if (name == "raw") return MuConvention::Raw;
  throw py::value_error("mu_convention must be 'normalized' or 'raw'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Stereohomology construction, classification and Desargues solvers";

  // GeometryError(name, detail), a ValueError subclass.
  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> geometry_error;
  geometry_error.call_once_and_store_result(
      [&]() { return py::exception<GeometryError>(m, "GeometryError", PyExc_ValueError); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const GeometryError& e) {
      PyErr_SetObject(geometry_error.get_stored().ptr(), py::make_tuple(e.name(), e.what()).ptr());
    }
  });

  m.def(
      "run",
      [](const std::string& subcommand, const std::string& document,
         std::optional<std::string> backend) -> std::pair<int, std::string> {
        std::optional<Backend> b;
        if (backend) {
          b = parse_backend(*backend);
          if (!b) throw py::value_error("backend must be 'rational' or 'float'");
        }
        nlohmann::json doc;
        try {
          doc = nlohmann::json::parse(document);
        } catch (const nlohmann::json::parse_error& e) {
          return {cli::kSchema, io::error_body("SchemaError", e.what()).dump()};
        }
        const cli::Response r = cli::run_request(subcommand, doc, b);
        return {r.exit_code, r.output.dump()};
      },
      py::arg("subcommand"), py::arg("document"), py::arg("backend") = py::none(),
      "Run one request; returns (exit_code, JSON text).");

  m.def(
      "homology",
      [](const Vec4<double>& s, const Vec4<double>& pi, double lambda, double rho) {
        return to_rows(homology<double>({HomPoint<double>(s), HomHyperplane<double>(pi), lambda, rho}));
      },
      py::arg("s"), py::arg("pi"), py::arg("lam"), py::arg("rho"));
  m.def(
      "perspective",
      [](const Vec4<double>& s, const Vec4<double>& pi, double lambda, double mu, const std::string& conv) {
        return to_rows(
            perspective<double>({HomPoint<double>(s), HomHyperplane<double>(pi), lambda, mu, convention(conv)}));
      },
      py::arg("s"), py::arg("pi"), py::arg("lam"), py::arg("mu"), py::arg("mu_convention") = "normalized");
  m.def(
      "singular",
      [](const Vec4<double>& s, const Vec4<double>& pi) {
        return to_rows(singular(HomPoint<double>(s), HomHyperplane<double>(pi)));
      },
      py::arg("s"), py::arg("pi"));
  m.def(
      "involutory",
      [](const Vec4<double>& s, const Vec4<double>& pi) {
        return to_rows(involutory(HomPoint<double>(s), HomHyperplane<double>(pi)));
      },
      py::arg("s"), py::arg("pi"));

  m.def(
      "rotation_rodrigues",
      [](const std::array<double, 3>& anchor, const std::array<double, 3>& direction, double theta) {
        return to_rows(rotation_rodrigues(RotationSpec{anchor, direction, theta}));
      },
      py::arg("anchor"), py::arg("direction"), py::arg("theta"));
  m.def(
      "rotation_from_reflections",
      [](const Vec4<double>& pi1, const Vec4<double>& pi2) {
        return to_rows(rotation_from_reflections(HomHyperplane<double>(pi1), HomHyperplane<double>(pi2)));
      },
      py::arg("pi1"), py::arg("pi2"));
  m.def(
      "reflection_pair_axis",
      [](const Vec4<double>& pi1, const Vec4<double>& pi2) {
        const RotationSpec s = reflection_pair_axis(HomHyperplane<double>(pi1), HomHyperplane<double>(pi2));
        return py::make_tuple(s.anchor, s.direction, s.theta);
      },
      py::arg("pi1"), py::arg("pi2"), "Returns (anchor, direction, theta).");
  m.def(
      "check_rotation_eigenstructure",
      [](const Rows& matrix, const std::array<double, 3>& anchor, const std::array<double, 3>& direction,
         double theta) { return check_rotation_eigenstructure(from_rows(matrix), RotationSpec{anchor, direction, theta}); },
      py::arg("matrix"), py::arg("anchor"), py::arg("direction"), py::arg("theta"));
}
