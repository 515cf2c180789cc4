#include "stereohomology/compose.hpp"
#include "stereohomology/construct.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>

namespace stereo {

namespace {

using V3 = std::array<double, 3>;

V3 cross(const V3& a, const V3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double dot3(const V3& a, const V3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
double norm3(const V3& a) { return std::sqrt(dot3(a, a)); }

V3 unit(const V3& v) {
  const double n = norm3(v);
  if (n == 0 || !std::isfinite(n)) throw GeometryError(ErrorCode::ZeroDirection, "rotation axis direction is zero");
  return {v[0] / n, v[1] / n, v[2] / n};
}

V3 plane_normal(const HomHyperplane<double>& h) {
  if (is_ideal_hyperplane(h)) throw GeometryError(ErrorCode::IdealPlane, "reflection plane is the ideal plane");
  return {h[0], h[1], h[2]};
}

HomMatrix<double> orthographic_reflection(const HomHyperplane<double>& h) {
  return involutory(normal_direction_of(h), h);
}

}  // namespace

HomMatrix<double> rotation_from_reflections(const HomHyperplane<double>& pi1, const HomHyperplane<double>& pi2) {
  const V3 n1 = plane_normal(pi1);
  const V3 n2 = plane_normal(pi2);
  if (!proportional(pi1, pi2) && norm3(cross(n1, n2)) <= kEpsRel * norm3(n1) * norm3(n2))
    throw GeometryError(ErrorCode::ParallelPlanes, "parallel planes compose to a translation");
  return orthographic_reflection(pi2) * orthographic_reflection(pi1);
}

RotationSpec reflection_pair_axis(const HomHyperplane<double>& pi1, const HomHyperplane<double>& pi2) {
  const V3 n1 = plane_normal(pi1);
  const V3 n2 = plane_normal(pi2);
  const V3 axis = cross(n1, n2);
  if (norm3(axis) <= kEpsRel * norm3(n1) * norm3(n2))
    throw GeometryError(ErrorCode::ParallelPlanes, "parallel planes have no common axis");
  const V3 dir = unit(axis);

  // Point of the axis nearest the origin: on both planes and orthogonal to dir.
  Eigen::Matrix3d a;
  a << n1[0], n1[1], n1[2], n2[0], n2[1], n2[2], dir[0], dir[1], dir[2];
  const Eigen::Vector3d rhs(-pi1[3], -pi2[3], 0.0);
  const Eigen::Vector3d p = a.fullPivLu().solve(rhs);

  const double c = std::clamp(dot3(n1, n2) / (norm3(n1) * norm3(n2)), -1.0, 1.0);
  return RotationSpec{{p(0), p(1), p(2)}, dir, 2 * std::acos(c)};
}

HomMatrix<double> rotation_rodrigues(const RotationSpec& spec) {
  const V3 d = unit(spec.direction);
  const double s = std::sin(spec.theta);
  const double c = std::cos(spec.theta);
  const auto& [x0, y0, z0] = spec.anchor;
  const auto& [a, b, cc] = d;

  const Mat4<double> dilation = Mat4<double>::diagonal({1, 1, 1, 2 - c});
  const Mat4<double> skew{{0, -cc, b, 0}, {cc, 0, -a, 0}, {-b, a, 0, 0}, {0, 0, 0, 0}};
  const Vec4<double> n{a, b, cc, 0};
  const Mat4<double> projection = Mat4<double>::identity() - Mat4<double>::outer(n, n);
  const Mat4<double> shift{{1, 0, 0, -x0}, {0, 1, 0, -y0}, {0, 0, 1, -z0}, {0, 0, 0, 1}};

  return HomMatrix<double>(dilation + (skew * s - projection * (1 - c)) * shift);
}

bool check_rotation_eigenstructure(const HomMatrix<double>& r, const RotationSpec& spec) {
  constexpr double tol = 1e-8;
  V3 d;
  try {
    d = unit(spec.direction);
  } catch (const GeometryError&) {
    return false;
  }
  const Vec4<double> p{spec.anchor[0], spec.anchor[1], spec.anchor[2], 1};
  const Vec4<double> dir{d[0], d[1], d[2], 0};
  const Vec4<double> rp = r.matrix() * p;
  const double k = dot(p, rp) / dot(p, p);
  if (!std::isfinite(k) || std::fabs(k) <= kEpsRel * top_singular_values(r.matrix())[0]) return false;
  const Mat4<double> scaled = r.matrix() * (1.0 / k);

  auto fixed = [&](const Vec4<double>& v) {
    const Vec4<double> w = scaled * v;
    double err = 0;
    for (std::size_t i = 0; i < 4; ++i) err = std::max(err, std::fabs(w[i] - v[i]));
    return err <= tol * std::max(1.0, norm(v));
  };
  if (!fixed(p) || !fixed(dir)) return false;

  Eigen::Matrix4d m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = scaled(i, j);
  const Eigen::EigenSolver<Eigen::Matrix4d> es(m, false);
  if (es.info() != Eigen::Success) return false;
  std::array<std::complex<double>, 4> got;
  for (int i = 0; i < 4; ++i) got[i] = es.eigenvalues()(i);

  std::array<std::complex<double>, 4> want{std::polar(1.0, spec.theta), std::polar(1.0, -spec.theta), 1.0, 1.0};
  std::array<int, 4> perm{0, 1, 2, 3};
  double best = std::numeric_limits<double>::infinity();
  do {
    double worst = 0;
    for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs(got[i] - want[perm[i]]));
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best <= tol;
}

}  // namespace stereo
