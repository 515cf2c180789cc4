#include "stereohomology/classify.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <vector>

namespace stereo {

std::string_view kind_name(Kind k) {
  if (k == Kind::NotElementary) return "NotElementary";
  return spec_kind_name(kind_row(k));
}

std::string_view sub_kind_name(SubKind s) {
  switch (s) {
    case SubKind::Orthographic: return "orthographic";
    case SubKind::Oblique: return "oblique";
    case SubKind::None: break;
  }
  return "";
}

std::optional<Kind> parse_kind(std::string_view name) {
  for (int row = 1; row <= 12; ++row)
    if (spec_kind_name(row) == name) return static_cast<Kind>(row - 1);
  if (name == "NotElementary") return Kind::NotElementary;
  return std::nullopt;
}

namespace {

template <Scalar T>
double frobenius(const Mat4<T>& m) {
  return norm<T>(m.flat());
}

// Roots of p''(x) = 12x^2 + 6*c3*x + 2*c2 plus the root of p'''(x), for the
// monic characteristic polynomial x^4 + c3 x^3 + c2 x^2 + ...
template <Scalar T>
std::vector<T> axial_candidates(const Mat4<T>& m) {
  const T tr = m.trace();
  const T tr2 = (m * m).trace();
  const T c3 = -tr;
  const T c2 = (tr * tr - tr2) / T(2);
  std::vector<T> out{T(tr / T(4))};
  T disc = T(36) * c3 * c3 - T(96) * c2;
  if constexpr (is_exact_v<T>) {
    if (const auto root = exact_sqrt(disc)) {
      out.push_back((-T(6) * c3 + *root) / T(24));
      out.push_back((-T(6) * c3 - *root) / T(24));
    }
  } else {
    const double scale = 36 * c3 * c3 + 96 * std::fabs(c2);
    if (disc < 0 && disc >= -kEpsRel * scale) disc = 0;
    if (disc >= 0) {
      const double root = std::sqrt(disc);
      out.push_back((-6 * c3 + root) / 24);
      out.push_back((-6 * c3 - root) / 24);
    }
  }
  return out;
}

}  // namespace

template <Scalar T>
AxialEigen<T> axial_eigenvalue(const HomMatrix<T>& t) {
  t.require_transformation();
  const Mat4<T>& m = t.matrix();
  const Mat4<T> id = Mat4<T>::identity();
  if constexpr (is_exact_v<T>) {
    for (const T& lambda : axial_candidates(m)) {
      if (lambda == 0) continue;
      Mat4<T> n = m - id * lambda;
      if (rank(n) <= 1) return {lambda, std::move(n)};
    }
  } else {
    const double scale = top_singular_values(m)[0];
    std::optional<AxialEigen<T>> best;
    double best_score = std::numeric_limits<double>::infinity();
    for (const double lambda : axial_candidates(m)) {
      if (near_zero(lambda, scale)) continue;
      Mat4<T> n = m - id * lambda;
      const double s2 = top_singular_values(n)[1];
      if (s2 <= kEpsRank * scale && s2 < best_score) {
        best_score = s2;
        best = AxialEigen<T>{lambda, std::move(n)};
      }
    }
    if (best) return *best;
  }
  throw GeometryError(ErrorCode::NotStereohomology, "no eigenvalue has a three-dimensional eigenspace");
}

template <Scalar T>
CenterAxis<T> extract_center_axis(const HomMatrix<T>& t) {
  const AxialEigen<T> ae = axial_eigenvalue(t);
  const Mat4<T>& n = ae.rank1_part;
  const bool vanishing = is_exact_v<T> ? all_zero<T>(n.flat())
                                       : frobenius(n) <= kEpsRel * frobenius(t.matrix());
  if (vanishing)
    throw GeometryError(ErrorCode::IdentityAmbiguous, "matrix is proportional to the identity");

  std::size_t col = 0, row = 0;
  for (std::size_t i = 1; i < 4; ++i) {
    if (norm(n.col(i)) > norm(n.col(col))) col = i;
    if (norm(n.row(i)) > norm(n.row(row))) row = i;
  }
  const Vec4<T> s = canonical(n.col(col));
  const Vec4<T> pi = canonical(n.row(row));

  // n = k * s pi^T; least-squares k is exact on rationals.
  const Mat4<T> unit = Mat4<T>::outer(s, pi);
  T num = 0, den = 0;
  for (std::size_t i = 0; i < 16; ++i) {
    num += n.flat()[i] * unit.flat()[i];
    den += unit.flat()[i] * unit.flat()[i];
  }
  const T k = num / den;

  CenterAxis<T> out{HomPoint<T>(s), HomHyperplane<T>(pi), ae.lambda, T(0)};
  out.perspective = incidence(out.s, out.pi);
  if (!out.perspective) {
    out.second = ae.lambda + n.trace();
  } else {
    const T radicand = dot(s, s) * dot(pi, pi);
    if (const auto root = exact_sqrt(radicand)) {
      out.second = k * *root;
      out.convention = MuConvention::Normalized;
    } else {
      out.second = k;
      out.convention = MuConvention::Raw;
    }
  }
  return out;
}

template <Scalar T>
bool is_involutory(const HomMatrix<T>& t) {
  const Mat4<T> sq = t.matrix() * t.matrix();
  if (all_zero<T>(sq.flat())) return false;
  return proportional(sq, Mat4<T>::identity());
}

template <Scalar T>
Classification<T> classify(const HomMatrix<T>& t) {
  t.require_transformation();
  Classification<T> c;
  c.involutory = is_involutory(t);
  c.singular = t.is_singular();

  std::optional<CenterAxis<T>> ca;
  try {
    ca = extract_center_axis(t);
  } catch (const GeometryError& e) {
    if (e.code() == ErrorCode::IdentityAmbiguous) {
      c.detail = "Identity";
    } else if (e.code() == ErrorCode::NotStereohomology) {
      c.detail = "NotStereohomology";
    } else {
      throw;
    }
    return c;
  }

  c.center = ca->s;
  c.hyperplane = ca->pi;
  c.lambda = ca->lambda;
  c.rho_or_mu = ca->second;
  c.perspective_family = ca->perspective;
  c.mu_convention = ca->convention;
  c.singular = !ca->perspective && near_zero(ca->second, magnitude(ca->lambda));

  const bool s_inf = is_infinite_point(ca->s);
  const bool pi_ideal = is_ideal_hyperplane(ca->pi);
  auto sub_tag = [&] {
    return proportional(ca->s, normal_direction_of(ca->pi)) ? SubKind::Orthographic : SubKind::Oblique;
  };

  // Rows of the classification table, keyed by (s on pi, singular,
  // involutory, pi ideal, s infinite).
  ElementaryKind kind{Kind::NotElementary, SubKind::None};
  if (ca->perspective) {
    if (pi_ideal && s_inf) kind = {Kind::Translation};
    else if (!pi_ideal && s_inf) kind = {Kind::Shearing};
    else if (!pi_ideal && !s_inf) kind = {Kind::SpaceElation};
  } else {
    const int band = c.singular ? 0 : (c.involutory ? 2 : 1);
    static constexpr Kind rows[3][3] = {
        {Kind::CentralProjection, Kind::ParallelProjection, Kind::Direction},
        {Kind::SpaceHomology, Kind::ElementaryScaling, Kind::CentralDilation},
        {Kind::InvolutorySpaceHomology, Kind::Reflection, Kind::CentralSymmetry},
    };
    if (!pi_ideal && !s_inf) kind = {rows[band][0]};
    else if (!pi_ideal && s_inf) kind = {rows[band][1], sub_tag()};
    else if (pi_ideal && !s_inf) kind = {rows[band][2]};
  }
  if (kind.tag == Kind::NotElementary) c.detail = "Inconsistent";
  c.kind = kind;
  return c;
}

template <Scalar T>
HomMatrix<T> reconstruct(const Classification<T>& c) {
  if (!c.center || !c.hyperplane || !c.lambda || !c.rho_or_mu)
    throw GeometryError(ErrorCode::NotElementary, "classification carries no center and hyperplane");
  if (c.perspective_family)
    return perspective(PerspectiveParams<T>{*c.center, *c.hyperplane, *c.lambda, *c.rho_or_mu, c.mu_convention});
  return homology(HomologyParams<T>{*c.center, *c.hyperplane, *c.lambda, *c.rho_or_mu});
}

#define STEREO_INSTANTIATE(T)                                              \
  template AxialEigen<T> axial_eigenvalue<T>(const HomMatrix<T>&);         \
  template CenterAxis<T> extract_center_axis<T>(const HomMatrix<T>&);      \
  template bool is_involutory<T>(const HomMatrix<T>&);                     \
  template Classification<T> classify<T>(const HomMatrix<T>&);             \
  template HomMatrix<T> reconstruct<T>(const Classification<T>&);

STEREO_INSTANTIATE(Rational)
STEREO_INSTANTIATE(double)

#undef STEREO_INSTANTIATE

}  // namespace stereo
