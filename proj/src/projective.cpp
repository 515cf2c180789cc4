#include "stereohomology/projective.hpp"

#include <algorithm>
#include <cmath>

namespace stereo {

template <Scalar T>
bool incidence(const HomPoint<T>& p, const HomHyperplane<T>& h) {
  return near_zero(dot(p.coords(), h.coeffs()), norm(p.coords()) * norm(h.coeffs()));
}

template <Scalar T>
bool is_infinite_point(const HomPoint<T>& p) {
  return near_zero(p[3], norm(p.coords()));
}

template <Scalar T>
bool is_ideal_hyperplane(const HomHyperplane<T>& h) {
  const double n = norm(h.coeffs());
  for (std::size_t i = 0; i < 3; ++i)
    if (!near_zero(h[i], n)) return false;
  return true;
}

template <Scalar T>
HomPoint<T> normal_direction_of(const HomHyperplane<T>& h) {
  if (is_ideal_hyperplane(h))
    throw GeometryError(ErrorCode::DegenerateNormal, "the ideal hyperplane has no normal direction");
  return HomPoint<T>(h[0], h[1], h[2], T(0));
}

template <Scalar T>
HomPoint<T> line_line_intersection(const HomPoint<T>& p1, const HomPoint<T>& p2,
                                   const HomPoint<T>& q1, const HomPoint<T>& q2) {
  const std::array<Vec4<T>, 2> pp{p1.coords(), p2.coords()};
  const std::array<Vec4<T>, 2> qq{q1.coords(), q2.coords()};
  if (rank_of_points<T>(pp) < 2 || rank_of_points<T>(qq) < 2)
    throw GeometryError(ErrorCode::InvalidElement, "line defined by coincident points");

  const std::array<Vec4<T>, 4> all{p1.coords(), p2.coords(), q1.coords(), q2.coords()};
  const int r = rank_of_points<T>(all);
  if (r == 4) throw GeometryError(ErrorCode::SkewLines, "lines do not meet");
  if (r == 2) throw GeometryError(ErrorCode::CoincidentLines, "lines coincide");

  // alpha*p1 + beta*p2 - gamma*q1 - delta*q2 = 0; columns are the points.
  Dense<T> sys(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    sys(i, 0) = p1[i];
    sys(i, 1) = p2[i];
    sys(i, 2) = -q1[i];
    sys(i, 3) = -q2[i];
  }
  const auto kernel = nullspace(sys);
  if (kernel.empty()) throw GeometryError(ErrorCode::SkewLines, "lines do not meet");
  const auto& k = kernel.front();
  Vec4<T> x;
  for (std::size_t i = 0; i < 4; ++i) x[i] = k[0] * p1[i] + k[1] * p2[i];
  return HomPoint<T>(canonical(x));
}

template <Scalar T>
HomMatrix<T> hyperplane_transform(const HomMatrix<T>& p) {
  const auto inv = inverse(p.matrix());
  if (!inv) throw GeometryError(ErrorCode::SingularMatrix, "hyperplane transform needs a nonsingular matrix");
  return HomMatrix<T>(inv->transpose());
}

template <Scalar T>
bool proportional(std::span<const T> a, std::span<const T> b) {
  if (all_zero(a) || all_zero(b))
    throw GeometryError(ErrorCode::InvalidElement, "proportionality of a zero vector");
  if (a.size() != b.size()) return false;
  if constexpr (is_exact_v<T>) {
    // Compare against the first nonzero entry of a; exact cross terms.
    std::size_t k = 0;
    while (a[k] == 0) ++k;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] * b[k] != a[k] * b[i]) return false;
    return true;
  } else {
    const double scale = norm(a) * norm(b);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = i + 1; j < a.size(); ++j)
        if (std::fabs(a[i] * b[j] - a[j] * b[i]) > kEpsRel * scale) return false;
    return true;
  }
}

namespace {
template <Scalar T>
std::size_t argmax_abs(std::span<const T> v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (ScalarTraits<T>::abs(v[i]) > ScalarTraits<T>::abs(v[best])) best = i;
  return best;
}
}  // namespace

template <Scalar T>
Vec4<T> canonical(const Vec4<T>& v) {
  const std::size_t k = argmax_abs<T>(v);
  if (v[k] == 0) throw GeometryError(ErrorCode::InvalidElement, "cannot normalize a zero vector");
  const T pivot = v[k];
  Vec4<T> out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = v[i] / pivot;
  out[k] = 1;
  return out;
}

template <Scalar T>
Mat4<T> canonical(const Mat4<T>& m) {
  const auto flat = m.flat();
  const std::size_t k = argmax_abs<T>(flat);
  if (flat[k] == 0) throw GeometryError(ErrorCode::InvalidElement, "cannot normalize a zero matrix");
  const T pivot = flat[k];
  Mat4<T> out;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) out(r, c) = m(r, c) / pivot;
  out(k / 4, k % 4) = 1;
  return out;
}

#define STEREO_INSTANTIATE(T)                                                                   \
  template bool incidence<T>(const HomPoint<T>&, const HomHyperplane<T>&);                      \
  template bool is_infinite_point<T>(const HomPoint<T>&);                                       \
  template bool is_ideal_hyperplane<T>(const HomHyperplane<T>&);                                \
  template HomPoint<T> normal_direction_of<T>(const HomHyperplane<T>&);                         \
  template HomPoint<T> line_line_intersection<T>(const HomPoint<T>&, const HomPoint<T>&,        \
                                                 const HomPoint<T>&, const HomPoint<T>&);       \
  template HomMatrix<T> hyperplane_transform<T>(const HomMatrix<T>&);                           \
  template bool proportional<T>(std::span<const T>, std::span<const T>);                        \
  template Vec4<T> canonical<T>(const Vec4<T>&);                                                \
  template Mat4<T> canonical<T>(const Mat4<T>&);

STEREO_INSTANTIATE(Rational)
STEREO_INSTANTIATE(double)

#undef STEREO_INSTANTIATE

}  // namespace stereo
