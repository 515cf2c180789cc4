#pragma once

#include "stereohomology/scalar.hpp"

#include <array>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace stereo {

template <Scalar T>
using Vec4 = std::array<T, 4>;

template <Scalar T>
T dot(const Vec4<T>& a, const Vec4<T>& b) {
  T sum = 0;
  for (std::size_t i = 0; i < 4; ++i) sum += a[i] * b[i];
  return sum;
}

template <Scalar T>
double norm(std::span<const T> v) {
  double s = 0;
  for (const T& x : v) {
    const double d = ScalarTraits<T>::to_double(x);
    s += d * d;
  }
  return std::sqrt(s);
}

template <Scalar T>
double norm(const Vec4<T>& v) {
  return norm<T>(std::span<const T>(v));
}

template <Scalar T>
bool all_zero(std::span<const T> v) {
  for (const T& x : v)
    if (x != 0) return false;
  return true;
}

/// Dense 4x4 grid, row-major. Plain value type; projective meaning lives in
/// HomMatrix.
template <Scalar T>
class Mat4 {
 public:
  Mat4() { data_.fill(T(0)); }
  Mat4(std::initializer_list<std::initializer_list<T>> rows) {
    data_.fill(T(0));
    std::size_t r = 0;
    for (const auto& row : rows) {
      std::size_t c = 0;
      for (const auto& v : row) (*this)(r, c++) = v;
      ++r;
    }
  }

  static Mat4 identity() {
    Mat4 m;
    for (std::size_t i = 0; i < 4; ++i) m(i, i) = 1;
    return m;
  }
  static Mat4 diagonal(const Vec4<T>& d) {
    Mat4 m;
    for (std::size_t i = 0; i < 4; ++i) m(i, i) = d[i];
    return m;
  }
  static Mat4 outer(const Vec4<T>& u, const Vec4<T>& v) {
    Mat4 m;
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) m(r, c) = u[r] * v[c];
    return m;
  }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * 4 + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * 4 + c]; }

  std::span<const T> flat() const { return data_; }

  Vec4<T> row(std::size_t r) const { return {data_[r * 4], data_[r * 4 + 1], data_[r * 4 + 2], data_[r * 4 + 3]}; }
  Vec4<T> col(std::size_t c) const { return {data_[c], data_[4 + c], data_[8 + c], data_[12 + c]}; }

  T trace() const { return data_[0] + data_[5] + data_[10] + data_[15]; }

  Mat4 transpose() const {
    Mat4 t;
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Mat4 operator*(const Mat4& o) const {
    Mat4 m;
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) {
        T s = 0;
        for (std::size_t k = 0; k < 4; ++k) s += (*this)(r, k) * o(k, c);
        m(r, c) = s;
      }
    return m;
  }
  Vec4<T> operator*(const Vec4<T>& v) const {
    Vec4<T> out;
    for (std::size_t r = 0; r < 4; ++r) {
      T s = 0;
      for (std::size_t k = 0; k < 4; ++k) s += (*this)(r, k) * v[k];
      out[r] = s;
    }
    return out;
  }
  Mat4 operator+(const Mat4& o) const {
    Mat4 m;
    for (std::size_t i = 0; i < 16; ++i) m.data_[i] = data_[i] + o.data_[i];
    return m;
  }
  Mat4 operator-(const Mat4& o) const {
    Mat4 m;
    for (std::size_t i = 0; i < 16; ++i) m.data_[i] = data_[i] - o.data_[i];
    return m;
  }
  Mat4 operator*(const T& k) const {
    Mat4 m;
    for (std::size_t i = 0; i < 16; ++i) m.data_[i] = data_[i] * k;
    return m;
  }
  friend Mat4 operator*(const T& k, const Mat4& a) { return a * k; }

  bool operator==(const Mat4& o) const { return data_ == o.data_; }

 private:
  std::array<T, 16> data_;
};

/// Row-major dense matrix of arbitrary shape, for the rank/kernel/solve
/// kernels behind the projective operations.
template <Scalar T>
struct Dense {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<T> data;

  Dense() = default;
  Dense(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, T(0)) {}

  static Dense from_rows(std::span<const Vec4<T>> vs) {
    Dense d(vs.size(), 4);
    for (std::size_t r = 0; r < vs.size(); ++r)
      for (std::size_t c = 0; c < 4; ++c) d(r, c) = vs[r][c];
    return d;
  }
  static Dense from(const Mat4<T>& m) {
    Dense d(4, 4);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) d(r, c) = m(r, c);
    return d;
  }

  T& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

// Rationals: fraction-free elimination, exact. Floats: column-pivoted
// Householder QR with pivots below kEpsRank * max pivot treated as zero.
template <Scalar T>
int rank(const Dense<T>& a);

/// Float only: counts singular values above `abs_tol`.
int rank_abs(const Dense<double>& a, double abs_tol);

/// Largest and second-largest singular values (floats) for rank-1 tests.
std::array<double, 2> top_singular_values(const Mat4<double>& m);

template <Scalar T>
std::vector<std::vector<T>> nullspace(const Dense<T>& a);

template <Scalar T>
std::optional<std::vector<T>> solve(const Dense<T>& a, std::span<const T> b);

template <Scalar T>
T determinant(const Dense<T>& a);

template <Scalar T>
T determinant(const Mat4<T>& m) {
  return determinant(Dense<T>::from(m));
}

template <Scalar T>
int rank(const Mat4<T>& m) {
  return rank(Dense<T>::from(m));
}

template <Scalar T>
int rank_of_points(std::span<const Vec4<T>> vs) {
  return rank(Dense<T>::from_rows(vs));
}

template <Scalar T>
std::optional<Mat4<T>> inverse(const Mat4<T>& m);

}  // namespace stereo
