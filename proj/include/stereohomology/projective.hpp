#pragma once

#include "stereohomology/errors.hpp"
#include "stereohomology/linalg.hpp"
#include "stereohomology/scalar.hpp"

#include <span>

namespace stereo {

namespace detail {
template <Scalar T>
Vec4<T> checked_nonzero(const Vec4<T>& v, const char* what) {
  if (all_zero<T>(v)) throw GeometryError(ErrorCode::InvalidElement, std::string(what) + " has all-zero coordinates");
  return v;
}
}  // namespace detail

/// Point of P^3 in homogeneous coordinates (x1..x4), never the zero vector.
/// Projective equality is `proportional`, not `==` on coordinates.
template <Scalar T>
class HomPoint {
 public:
  explicit HomPoint(const Vec4<T>& coords) : coords_(detail::checked_nonzero(coords, "point")) {}
  HomPoint(T x1, T x2, T x3, T x4) : HomPoint(Vec4<T>{x1, x2, x3, x4}) {}

  const Vec4<T>& coords() const { return coords_; }
  const T& operator[](std::size_t i) const { return coords_[i]; }

 private:
  Vec4<T> coords_;
};

/// Hyperplane a*x + b*y + c*z + d*w = 0 of P^3, never the zero vector.
template <Scalar T>
class HomHyperplane {
 public:
  explicit HomHyperplane(const Vec4<T>& coeffs) : coeffs_(detail::checked_nonzero(coeffs, "hyperplane")) {}
  HomHyperplane(T a, T b, T c, T d) : HomHyperplane(Vec4<T>{a, b, c, d}) {}

  const Vec4<T>& coeffs() const { return coeffs_; }
  const T& operator[](std::size_t i) const { return coeffs_[i]; }

 private:
  Vec4<T> coeffs_;
};

/// 4x4 homogeneous transformation with its rank cached. Any grid can be
/// wrapped; `is_transformation()` is the rank >= 3 validity predicate and
/// operations that need a valid transformation call `require_transformation`.
template <Scalar T>
class HomMatrix {
 public:
  explicit HomMatrix(const Mat4<T>& m) : m_(m), rank_(stereo::rank(m)) {}

  const Mat4<T>& matrix() const { return m_; }
  const T& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }
  int rank() const { return rank_; }
  bool is_transformation() const { return rank_ >= 3; }
  bool is_singular() const { return rank_ < 4; }

  void require_transformation() const {
    if (!is_transformation())
      throw GeometryError(ErrorCode::InvalidTransform,
                          "matrix rank " + std::to_string(rank_) + " is below 3");
  }

  HomPoint<T> apply(const HomPoint<T>& p) const { return HomPoint<T>(m_ * p.coords()); }

  HomMatrix operator*(const HomMatrix& o) const { return HomMatrix(m_ * o.m_); }

 private:
  Mat4<T> m_;
  int rank_;
};

template <Scalar T>
bool incidence(const HomPoint<T>& p, const HomHyperplane<T>& h);

template <Scalar T>
bool is_infinite_point(const HomPoint<T>& p);

template <Scalar T>
bool is_ideal_hyperplane(const HomHyperplane<T>& h);

/// (a, b, c, 0) for h = (a, b, c, d). DegenerateNormal for the ideal hyperplane.
template <Scalar T>
HomPoint<T> normal_direction_of(const HomHyperplane<T>& h);

/// Meet of lines p1p2 and q1q2. SkewLines when the four points span P^3,
/// CoincidentLines when both pairs span the same line.
template <Scalar T>
HomPoint<T> line_line_intersection(const HomPoint<T>& p1, const HomPoint<T>& p2,
                                   const HomPoint<T>& q1, const HomPoint<T>& q2);

/// Inverse transpose: the action of P on hyperplane coordinates.
template <Scalar T>
HomMatrix<T> hyperplane_transform(const HomMatrix<T>& p);

template <Scalar T>
bool proportional(std::span<const T> a, std::span<const T> b);

template <Scalar T>
bool proportional(const Vec4<T>& a, const Vec4<T>& b) {
  return proportional<T>(std::span<const T>(a), std::span<const T>(b));
}
template <Scalar T>
bool proportional(const HomPoint<T>& a, const HomPoint<T>& b) {
  return proportional(a.coords(), b.coords());
}
template <Scalar T>
bool proportional(const HomHyperplane<T>& a, const HomHyperplane<T>& b) {
  return proportional(a.coeffs(), b.coeffs());
}
template <Scalar T>
bool proportional(const Mat4<T>& a, const Mat4<T>& b) {
  return proportional<T>(a.flat(), b.flat());
}
template <Scalar T>
bool proportional(const HomMatrix<T>& a, const HomMatrix<T>& b) {
  return proportional(a.matrix(), b.matrix());
}

/// Representative with the largest-magnitude entry scaled to exactly +1
/// (first index wins ties).
template <Scalar T>
Vec4<T> canonical(const Vec4<T>& v);

template <Scalar T>
Mat4<T> canonical(const Mat4<T>& m);

template <Scalar T>
HomPoint<T> canonical(const HomPoint<T>& p) {
  return HomPoint<T>(canonical(p.coords()));
}
template <Scalar T>
HomHyperplane<T> canonical(const HomHyperplane<T>& h) {
  return HomHyperplane<T>(canonical(h.coeffs()));
}

}  // namespace stereo
