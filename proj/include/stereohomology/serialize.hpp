#pragma once

#include "stereohomology/classify.hpp"
#include "stereohomology/compose.hpp"
#include "stereohomology/construct.hpp"
#include "stereohomology/desargues.hpp"
#include "stereohomology/projective.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>

namespace stereo::io {

using nlohmann::json;

/// Malformed document: wrong shape, wrong type, missing field.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rationals travel as strings ("1/9", "-3") so golden files stay exact;
// integer JSON numbers are also accepted on input. Floats travel as numbers;
// on input they also accept rational strings.
template <Scalar T>
json scalar_to_json(const T& v);
template <Scalar T>
T scalar_from_json(const json& j, const std::string& where);

template <Scalar T>
Vec4<T> vec4_from_json(const json& j, const std::string& where);

/// Canonical representative (largest-magnitude entry +1) as a JSON array.
template <Scalar T>
json vec4_to_json(const Vec4<T>& v);

template <Scalar T>
HomPoint<T> point_from_json(const json& j, const std::string& where);
template <Scalar T>
HomHyperplane<T> hyperplane_from_json(const json& j, const std::string& where);
template <Scalar T>
json point_to_json(const HomPoint<T>& p) {
  return vec4_to_json(p.coords());
}
template <Scalar T>
json hyperplane_to_json(const HomHyperplane<T>& h) {
  return vec4_to_json(h.coeffs());
}

template <Scalar T>
HomMatrix<T> matrix_from_json(const json& j, const std::string& where);
/// Canonically scaled rows.
template <Scalar T>
json matrix_to_json(const Mat4<T>& m);

/// {"kind": ..., "center": [..], "hyperplane": [..], "ratio": r, "mu": m,
///  "mu_convention": "normalized"|"raw", "displacement": [dx, dy, dz]}
template <Scalar T>
ElementarySpec<T> spec_from_json(const json& j);

/// lambda and rho_or_mu carry the matrix's own scale; "ratio" is rho/lambda
/// (homology family) or mu/lambda (perspective family) and is scale-free.
template <Scalar T>
json classification_to_json(const Classification<T>& c);

/// {"X": [[..] x4], "S": [..], "Y": [[..] x4]}
template <Scalar T>
DesarguesConfig<T> config_from_json(const json& j);

template <Scalar T>
json report_to_json(const DesarguesReport<T>& r);

template <Scalar T>
json note_to_json(const CompositionNote<T>& n);

/// {"anchor": [x0, y0, z0], "direction": [a, b, c], "theta": radians}
RotationSpec rotation_spec_from_json(const json& j);
json rotation_spec_to_json(const RotationSpec& s);

json error_body(std::string_view name, const json& detail);

}  // namespace stereo::io
