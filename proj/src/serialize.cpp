#include "stereohomology/serialize.hpp"

#include <cmath>

namespace stereo::io {

namespace {

[[noreturn]] void schema(const std::string& where, const std::string& what) {
  throw SchemaError(where + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) schema(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) schema(where, std::string("missing field \"") + key + "\"");
  return *it;
}

bool has(const json& j, const char* key) {
  return j.is_object() && j.contains(key) && !j.at(key).is_null();
}

template <Scalar T>
std::array<T, 3> triple_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3) schema(where, "expected an array of 3 scalars");
  return {scalar_from_json<T>(j[0], where + "[0]"), scalar_from_json<T>(j[1], where + "[1]"),
          scalar_from_json<T>(j[2], where + "[2]")};
}

MuConvention convention_from_json(const json& j) {
  if (!has(j, "mu_convention")) return MuConvention::Normalized;
  const json& c = j.at("mu_convention");
  if (c == "normalized") return MuConvention::Normalized;
  if (c == "raw") return MuConvention::Raw;
  schema("mu_convention", "expected \"normalized\" or \"raw\"");
}

}  // namespace

template <>
json scalar_to_json<Rational>(const Rational& v) {
  return format_rational(v);
}

template <>
json scalar_to_json<double>(const double& v) {
  // -0.0 prints as "-0.0"; keep golden output stable.
  return v == 0 ? 0.0 : v;
}

template <>
Rational scalar_from_json<Rational>(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::exception& e) {
      schema(where, e.what());
    }
  }
  schema(where, "expected a rational literal string or an integer");
}

template <>
double scalar_from_json<double>(const json& j, const std::string& where) {
  if (j.is_number()) {
    const double v = j.get<double>();
    if (!std::isfinite(v)) schema(where, "non-finite number");
    return v;
  }
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>()).convert_to<double>();
    } catch (const std::exception& e) {
      schema(where, e.what());
    }
  }
  schema(where, "expected a number");
}

template <Scalar T>
Vec4<T> vec4_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 4) schema(where, "expected an array of 4 scalars");
  Vec4<T> v;
  for (std::size_t i = 0; i < 4; ++i) v[i] = scalar_from_json<T>(j[i], where + "[" + std::to_string(i) + "]");
  return v;
}

template <Scalar T>
json vec4_to_json(const Vec4<T>& v) {
  const Vec4<T> c = canonical(v);
  json out = json::array();
  for (const T& x : c) out.push_back(scalar_to_json(x));
  return out;
}

template <Scalar T>
HomPoint<T> point_from_json(const json& j, const std::string& where) {
  return HomPoint<T>(vec4_from_json<T>(j, where));
}

template <Scalar T>
HomHyperplane<T> hyperplane_from_json(const json& j, const std::string& where) {
  return HomHyperplane<T>(vec4_from_json<T>(j, where));
}

template <Scalar T>
HomMatrix<T> matrix_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 4) schema(where, "expected 4 rows");
  Mat4<T> m;
  for (std::size_t r = 0; r < 4; ++r) {
    const Vec4<T> row = vec4_from_json<T>(j[r], where + "[" + std::to_string(r) + "]");
    for (std::size_t c = 0; c < 4; ++c) m(r, c) = row[c];
  }
  return HomMatrix<T>(m);
}

template <Scalar T>
json matrix_to_json(const Mat4<T>& m) {
  const Mat4<T> c = canonical(m);
  json out = json::array();
  for (std::size_t r = 0; r < 4; ++r) {
    json row = json::array();
    for (std::size_t k = 0; k < 4; ++k) row.push_back(scalar_to_json(c(r, k)));
    out.push_back(std::move(row));
  }
  return out;
}

template <Scalar T>
ElementarySpec<T> spec_from_json(const json& j) {
  const json& kind_j = field(j, "kind", "spec");
  if (!kind_j.is_string()) schema("kind", "expected a string");
  const auto kind = parse_kind(kind_j.get<std::string>());
  if (!kind || *kind == Kind::NotElementary) schema("kind", "unknown kind " + kind_j.dump());

  auto center = [&] { return point_from_json<T>(field(j, "center", "spec"), "center"); };
  auto plane = [&] { return hyperplane_from_json<T>(field(j, "hyperplane", "spec"), "hyperplane"); };
  auto ratio = [&] { return scalar_from_json<T>(field(j, "ratio", "spec"), "ratio"); };
  auto mu = [&] { return scalar_from_json<T>(field(j, "mu", "spec"), "mu"); };

  switch (*kind) {
    case Kind::CentralProjection: return spec::CentralProjection<T>{center(), plane()};
    case Kind::ParallelProjection: return spec::ParallelProjection<T>{center(), plane()};
    case Kind::Direction: return spec::Direction<T>{center()};
    case Kind::SpaceHomology: return spec::SpaceHomology<T>{center(), plane(), ratio()};
    case Kind::ElementaryScaling: return spec::ElementaryScaling<T>{center(), plane(), ratio()};
    case Kind::CentralDilation: return spec::CentralDilation<T>{center(), ratio()};
    case Kind::InvolutorySpaceHomology: return spec::InvolutorySpaceHomology<T>{center(), plane()};
    case Kind::Reflection: {
      std::optional<HomPoint<T>> dir;
      if (has(j, "center")) dir = center();
      return spec::Reflection<T>{plane(), dir};
    }
    case Kind::CentralSymmetry: return spec::CentralSymmetry<T>{center()};
    case Kind::SpaceElation: return spec::SpaceElation<T>{center(), plane(), mu(), convention_from_json(j)};
    case Kind::Shearing: return spec::Shearing<T>{center(), plane(), mu(), convention_from_json(j)};
    case Kind::Translation:
      return spec::Translation<T>{triple_from_json<T>(field(j, "displacement", "spec"), "displacement")};
    case Kind::NotElementary: break;
  }
  schema("kind", "unknown kind");
}

template <Scalar T>
json classification_to_json(const Classification<T>& c) {
  json out;
  out["kind"] = kind_name(c.kind.tag);
  if (c.kind.tag == Kind::NotElementary) {
    out["detail"] = c.detail;
    return out;
  }
  out["sub"] = c.kind.sub == SubKind::None ? json(nullptr) : json(sub_kind_name(c.kind.sub));
  out["center"] = c.center ? point_to_json(*c.center) : json(nullptr);
  out["hyperplane"] = c.hyperplane ? hyperplane_to_json(*c.hyperplane) : json(nullptr);
  out["lambda"] = c.lambda ? scalar_to_json(*c.lambda) : json(nullptr);
  out["rho_or_mu"] = c.rho_or_mu ? scalar_to_json(*c.rho_or_mu) : json(nullptr);
  out["ratio"] = c.lambda && c.rho_or_mu ? scalar_to_json(T(*c.rho_or_mu / *c.lambda)) : json(nullptr);
  out["involutory"] = c.involutory;
  out["singular"] = c.singular;
  out["family"] = c.perspective_family ? "perspective" : "homology";
  if (c.perspective_family) out["mu_convention"] = mu_convention_name(c.mu_convention);
  return out;
}

template <Scalar T>
DesarguesConfig<T> config_from_json(const json& j) {
  auto four = [&](const char* key) {
    const json& a = field(j, key, "config");
    if (!a.is_array() || a.size() != 4) schema(key, "expected 4 points");
    return std::array<HomPoint<T>, 4>{
        point_from_json<T>(a[0], std::string(key) + "[0]"), point_from_json<T>(a[1], std::string(key) + "[1]"),
        point_from_json<T>(a[2], std::string(key) + "[2]"), point_from_json<T>(a[3], std::string(key) + "[3]")};
  };
  return DesarguesConfig<T>{four("X"), point_from_json<T>(field(j, "S", "config"), "S"), four("Y")};
}

template <Scalar T>
json report_to_json(const DesarguesReport<T>& r) {
  json inter = json::array();
  for (const auto& e : r.intersections) {
    inter.push_back({{"pair", {e.i, e.j}},
                     {"point", e.point ? point_to_json(*e.point) : json(nullptr)},
                     {"status", e.status}});
  }
  return {{"valid", r.valid},
          {"violated", r.violated},
          {"intersection_points", inter},
          {"intersection_rank", r.intersection_rank},
          {"degenerate", r.degenerate}};
}

template <Scalar T>
json note_to_json(const CompositionNote<T>& n) {
  return {{"relation", relation_name(n.relation)},
          {"predicted_center", n.predicted_center ? point_to_json(*n.predicted_center) : json(nullptr)},
          {"predicted_hyperplane", n.predicted_hyperplane ? hyperplane_to_json(*n.predicted_hyperplane) : json(nullptr)},
          {"predicted_perspective", n.predicted_perspective},
          {"predicted_identity", n.predicted_identity}};
}

RotationSpec rotation_spec_from_json(const json& j) {
  RotationSpec s;
  s.anchor = triple_from_json<double>(field(j, "anchor", "rotation"), "anchor");
  s.direction = triple_from_json<double>(field(j, "direction", "rotation"), "direction");
  s.theta = scalar_from_json<double>(field(j, "theta", "rotation"), "theta");
  return s;
}

json rotation_spec_to_json(const RotationSpec& s) {
  auto triple = [](const std::array<double, 3>& v) {
    return json::array({scalar_to_json(v[0]), scalar_to_json(v[1]), scalar_to_json(v[2])});
  };
  return {{"anchor", triple(s.anchor)}, {"direction", triple(s.direction)}, {"theta", scalar_to_json(s.theta)}};
}

json error_body(std::string_view name, const json& detail) {
  return {{"error", name}, {"detail", detail}};
}

#define STEREO_INSTANTIATE(T)                                                             \
  template Vec4<T> vec4_from_json<T>(const json&, const std::string&);                   \
  template json vec4_to_json<T>(const Vec4<T>&);                                         \
  template HomPoint<T> point_from_json<T>(const json&, const std::string&);              \
  template HomHyperplane<T> hyperplane_from_json<T>(const json&, const std::string&);    \
  template HomMatrix<T> matrix_from_json<T>(const json&, const std::string&);            \
  template json matrix_to_json<T>(const Mat4<T>&);                                       \
  template ElementarySpec<T> spec_from_json<T>(const json&);                             \
  template json classification_to_json<T>(const Classification<T>&);                     \
  template DesarguesConfig<T> config_from_json<T>(const json&);                          \
  template json report_to_json<T>(const DesarguesReport<T>&);                            \
  template json note_to_json<T>(const CompositionNote<T>&);

STEREO_INSTANTIATE(Rational)
STEREO_INSTANTIATE(double)

#undef STEREO_INSTANTIATE

}  // namespace stereo::io
