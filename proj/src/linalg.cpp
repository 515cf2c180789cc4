#include "stereohomology/linalg.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <utility>

namespace stereo {

namespace {

Eigen::MatrixXd to_eigen(const Dense<double>& a) {
  Eigen::MatrixXd m(a.rows, a.cols);
  for (std::size_t r = 0; r < a.rows; ++r)
    for (std::size_t c = 0; c < a.cols; ++c) m(r, c) = a(r, c);
  return m;
}

// Scale each row by the lcm of its denominators so Bareiss can run over Z.
std::vector<std::vector<Integer>> integer_rows(const Dense<Rational>& a) {
  std::vector<std::vector<Integer>> out(a.rows, std::vector<Integer>(a.cols));
  for (std::size_t r = 0; r < a.rows; ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < a.cols; ++c)
      l = boost::multiprecision::lcm(l, Integer(denominator(a(r, c))));
    for (std::size_t c = 0; c < a.cols; ++c) {
      const Rational scaled = a(r, c) * Rational(l);
      out[r][c] = numerator(scaled);
    }
  }
  return out;
}

// Gauss-Jordan over Q. Returns the reduced matrix and pivot columns.
std::pair<Dense<Rational>, std::vector<std::size_t>> rref(Dense<Rational> a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols && row < a.rows; ++col) {
    std::size_t p = row;
    while (p < a.rows && a(p, col) == 0) ++p;
    if (p == a.rows) continue;
    if (p != row)
      for (std::size_t c = 0; c < a.cols; ++c) std::swap(a(p, c), a(row, c));
    const Rational inv = Rational(1) / a(row, col);
    for (std::size_t c = 0; c < a.cols; ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows; ++r) {
      if (r == row || a(r, col) == 0) continue;
      const Rational f = a(r, col);
      for (std::size_t c = 0; c < a.cols; ++c) a(r, c) -= f * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

}  // namespace

template <>
int rank<Rational>(const Dense<Rational>& a) {
  auto m = integer_rows(a);
  Integer prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols && row < a.rows; ++col) {
    std::size_t p = row;
    while (p < a.rows && m[p][col] == 0) ++p;
    if (p == a.rows) continue;
    std::swap(m[p], m[row]);
    for (std::size_t r = row + 1; r < a.rows; ++r) {
      for (std::size_t c = col + 1; c < a.cols; ++c)
        m[r][c] = (m[r][c] * m[row][col] - m[r][col] * m[row][c]) / prev;
      m[r][col] = 0;
    }
    prev = m[row][col];
    ++row;
  }
  return static_cast<int>(row);
}

template <>
int rank<double>(const Dense<double>& a) {
  if (a.rows == 0 || a.cols == 0) return 0;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(to_eigen(a));
  qr.setThreshold(kEpsRank);
  return static_cast<int>(qr.rank());
}

int rank_abs(const Dense<double>& a, double abs_tol) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(a));
  const auto& sv = svd.singularValues();
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > abs_tol) ++r;
  return r;
}

std::array<double, 2> top_singular_values(const Mat4<double>& m) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(Dense<double>::from(m)));
  const auto& sv = svd.singularValues();
  return {sv(0), sv(1)};
}

template <>
std::vector<std::vector<Rational>> nullspace<Rational>(const Dense<Rational>& a) {
  auto [red, pivots] = rref(a);
  std::vector<bool> is_pivot(a.cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < a.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(a.cols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <>
std::vector<std::vector<double>> nullspace<double>(const Dense<double>& a) {
  const Eigen::MatrixXd m = to_eigen(a);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  std::vector<std::vector<double>> basis;
  for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(a.cols); ++i) {
    const bool null = i >= sv.size() || sv(i) <= kEpsRank * smax;
    if (!null) continue;
    std::vector<double> v(a.cols);
    for (std::size_t k = 0; k < a.cols; ++k) v[k] = svd.matrixV()(static_cast<Eigen::Index>(k), i);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <>
std::optional<std::vector<Rational>> solve<Rational>(const Dense<Rational>& a,
                                                     std::span<const Rational> b) {
  Dense<Rational> aug(a.rows, a.cols + 1);
  for (std::size_t r = 0; r < a.rows; ++r) {
    for (std::size_t c = 0; c < a.cols; ++c) aug(r, c) = a(r, c);
    aug(r, a.cols) = b[r];
  }
  auto [red, pivots] = rref(std::move(aug));
  if (pivots.size() != a.cols) return std::nullopt;
  std::vector<Rational> x(a.cols);
  for (std::size_t i = 0; i < a.cols; ++i) x[i] = red(i, a.cols);
  return x;
}

template <>
std::optional<std::vector<double>> solve<double>(const Dense<double>& a,
                                                 std::span<const double> b) {
  const Eigen::MatrixXd m = to_eigen(a);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  lu.setThreshold(kEpsRank);
  if (!lu.isInvertible()) return std::nullopt;
  Eigen::VectorXd rhs(static_cast<Eigen::Index>(b.size()));
  for (std::size_t i = 0; i < b.size(); ++i) rhs(static_cast<Eigen::Index>(i)) = b[i];
  const Eigen::VectorXd x = lu.solve(rhs);
  return std::vector<double>(x.data(), x.data() + x.size());
}

template <>
Rational determinant<Rational>(const Dense<Rational>& a) {
  Dense<Rational> m = a;
  Rational det = 1;
  for (std::size_t col = 0; col < m.cols; ++col) {
    std::size_t p = col;
    while (p < m.rows && m(p, col) == 0) ++p;
    if (p == m.rows) return 0;
    if (p != col) {
      for (std::size_t c = 0; c < m.cols; ++c) std::swap(m(p, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < m.rows; ++r) {
      if (m(r, col) == 0) continue;
      const Rational f = m(r, col) / m(col, col);
      for (std::size_t c = col; c < m.cols; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

template <>
double determinant<double>(const Dense<double>& a) {
  return to_eigen(a).partialPivLu().determinant();
}

template <>
std::optional<Mat4<Rational>> inverse<Rational>(const Mat4<Rational>& m) {
  Dense<Rational> aug(4, 8);
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) aug(r, c) = m(r, c);
    aug(r, 4 + r) = 1;
  }
  auto [red, pivots] = rref(std::move(aug));
  if (pivots.size() < 4 || pivots[3] != 3) return std::nullopt;
  Mat4<Rational> inv;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) inv(r, c) = red(r, 4 + c);
  return inv;
}

template <>
std::optional<Mat4<double>> inverse<double>(const Mat4<double>& m) {
  Eigen::FullPivLU<Eigen::MatrixXd> lu(to_eigen(Dense<double>::from(m)));
  lu.setThreshold(kEpsRank);
  if (!lu.isInvertible()) return std::nullopt;
  const Eigen::MatrixXd inv = lu.inverse();
  Mat4<double> out;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      out(r, c) = inv(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  return out;
}

}  // namespace stereo
