#pragma once

#include "stereohomology/classify.hpp"
#include "stereohomology/construct.hpp"
#include "stereohomology/desargues.hpp"
#include "stereohomology/projective.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace stereo::testing {

inline constexpr std::uint64_t kSeed = 0x5eed5eedULL;

class Rng {
 public:
  explicit Rng(std::uint64_t seed = kSeed) : gen_(seed) {}

  int integer(int lo = -9, int hi = 9) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  int nonzero(int lo = -9, int hi = 9) {
    int v = 0;
    while (v == 0) v = integer(lo, hi);
    return v;
  }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }

  // p/q with p in [-9, 9] \ {0}, q in [1, 5], avoiding 0, 1 and -1.
  template <Scalar T>
  T ratio() {
    for (;;) {
      const int p = nonzero();
      const int q = integer(1, 5);
      if (p == q || p == -q) continue;
      return T(p) / T(q);
    }
  }

  template <Scalar T>
  Vec4<T> vec(int w) {
    for (;;) {
      Vec4<T> v{T(integer()), T(integer()), T(integer()), T(w)};
      if (!all_zero<T>(v) && !(v[0] == 0 && v[1] == 0 && v[2] == 0)) return v;
    }
  }

  template <Scalar T>
  HomPoint<T> ordinary_point() { return HomPoint<T>(vec<T>(nonzero())); }
  template <Scalar T>
  HomPoint<T> infinite_point() { return HomPoint<T>(vec<T>(0)); }
  template <Scalar T>
  HomHyperplane<T> ordinary_hyperplane() { return HomHyperplane<T>(vec<T>(integer())); }

  template <Scalar T>
  HomHyperplane<T> plane_off(const HomPoint<T>& s) {
    for (;;) {
      const auto h = ordinary_hyperplane<T>();
      if (dot(s.coords(), h.coeffs()) != 0) return h;
    }
  }

  template <Scalar T>
  HomPoint<T> point_off(const HomHyperplane<T>& h) {
    for (;;) {
      const auto s = ordinary_point<T>();
      if (dot(s.coords(), h.coeffs()) != 0) return s;
    }
  }

  // An ordinary hyperplane through s: the null vector of [s; u; v] for random u, v.
  template <Scalar T>
  HomHyperplane<T> plane_through(const HomPoint<T>& s) {
    for (;;) {
      const Vec4<T> u = vec<T>(integer());
      const Vec4<T> v = vec<T>(integer());
      const std::array<Vec4<T>, 3> rows{s.coords(), u, v};
      Vec4<T> h;
      for (int k = 0; k < 4; ++k) {
        // Signed 3x3 minor with column k removed.
        std::array<int, 3> c{};
        for (int i = 0, n = 0; i < 4; ++i)
          if (i != k) c[n++] = i;
        auto e = [&](int r, int col) { return rows[r][c[col]]; };
        const T m = e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
                    e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
        h[k] = (k % 2 == 0) ? m : T(-m);
      }
      if (h[0] == 0 && h[1] == 0 && h[2] == 0) continue;
      return HomHyperplane<T>(h);
    }
  }

  template <Scalar T>
  Mat4<T> nonsingular_matrix() {
    for (;;) {
      Mat4<T> m;
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m(r, c) = T(integer());
      if (leibniz_det(m) != 0) return m;
    }
  }

  template <Scalar T>
  static T leibniz_det(const Mat4<T>& m);

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

/// Determinant by full permutation expansion; independent of the library's
/// elimination code.
template <Scalar T>
T Rng::leibniz_det(const Mat4<T>& m) {
  std::array<int, 4> p{0, 1, 2, 3};
  T total = T(0);
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (p[i] > p[j]) ++inversions;
    T term = T(1);
    for (int i = 0; i < 4; ++i) term *= m(i, p[i]);
    total += (inversions % 2 == 0) ? term : T(-term);
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

template <Scalar T>
T leibniz_det(const Mat4<T>& m) {
  return Rng::leibniz_det(m);
}

using Q = Rational;

template <Scalar T>
Mat4<T> mat(std::initializer_list<std::initializer_list<int>> rows, int denom = 1) {
  Mat4<T> m;
  std::size_t r = 0;
  for (const auto& row : rows) {
    std::size_t c = 0;
    for (int v : row) m(r, c++) = T(v) / T(denom);
    ++r;
  }
  return m;
}

template <Scalar T>
HomPoint<T> pt(int a, int b, int c, int d) {
  return HomPoint<T>(T(a), T(b), T(c), T(d));
}

template <Scalar T>
HomHyperplane<T> hp(int a, int b, int c, int d) {
  return HomHyperplane<T>(T(a), T(b), T(c), T(d));
}

/// Orthographic reflection in 2x - y + 2z - 2 = 0, written out by hand.
template <Scalar T>
Mat4<T> reflection_fixture() {
  return mat<T>({{1, 4, -8, 8}, {4, 7, 4, -4}, {-8, 4, 1, 8}, {0, 0, 0, 9}}, 9);
}

/// Quarter turn about the z axis, embedded in 4x4.
template <Scalar T>
Mat4<T> givens_z() {
  return mat<T>({{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
}

template <Scalar T>
Mat4<T> translation_matrix(int dx, int dy, int dz) {
  return mat<T>({{1, 0, 0, dx}, {0, 1, 0, dy}, {0, 0, 1, dz}, {0, 0, 0, 1}});
}

/// k x k determinant by permutation expansion.
template <Scalar T>
T leibniz(const std::vector<std::vector<T>>& a) {
  const std::size_t k = a.size();
  std::vector<std::size_t> p(k);
  std::iota(p.begin(), p.end(), 0);
  T total = T(0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (p[i] > p[j]) ++inversions;
    T term = T(1);
    for (std::size_t i = 0; i < k; ++i) term *= a[i][p[i]];
    total += (inversions % 2 == 0) ? term : T(-term);
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

/// Rank as the size of the largest nonzero minor, by exhaustive search over
/// row and column subsets. Exact scalars only.
template <Scalar T>
int minor_rank(const std::vector<Vec4<T>>& rows) {
  const int m = static_cast<int>(rows.size());
  for (int k = std::min(m, 4); k > 0; --k) {
    std::vector<bool> rsel(m, false), csel(4, false);
    std::fill(rsel.begin(), rsel.begin() + k, true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + k, true);
      do {
        std::vector<std::vector<T>> sub;
        for (int r = 0; r < m; ++r) {
          if (!rsel[r]) continue;
          std::vector<T> row;
          for (int c = 0; c < 4; ++c)
            if (csel[c]) row.push_back(rows[r][c]);
          sub.push_back(row);
        }
        if (leibniz(sub) != 0) return k;
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
  }
  return 0;
}

/// Expected center and hyperplane of a spec, read off its defining data.
template <Scalar T>
struct Expected {
  Vec4<T> center;
  Vec4<T> hyperplane;
  Kind kind;
};

/// Random valid spec for row 1..12. Perspective rows use the raw mu
/// convention on rationals, the normalized one on floats.
template <Scalar T>
ElementarySpec<T> random_spec(Rng& rng, int row, Expected<T>* expected = nullptr) {
  const Vec4<T> ideal{T(0), T(0), T(0), T(1)};
  const MuConvention conv = is_exact_v<T> ? MuConvention::Raw : MuConvention::Normalized;
  auto record = [&](const Vec4<T>& s, const Vec4<T>& h) {
    if (expected) *expected = Expected<T>{s, h, static_cast<Kind>(row - 1)};
  };
  switch (row) {
    case 1: {
      const auto s = rng.ordinary_point<T>();
      const auto h = rng.plane_off(s);
      record(s.coords(), h.coeffs());
      return spec::CentralProjection<T>{s, h};
    }
    case 2: {
      const auto s = rng.infinite_point<T>();
      const auto h = rng.plane_off(s);
      record(s.coords(), h.coeffs());
      return spec::ParallelProjection<T>{s, h};
    }
    case 3: {
      const auto s = rng.ordinary_point<T>();
      record(s.coords(), ideal);
      return spec::Direction<T>{s};
    }
    case 4: {
      const auto s = rng.ordinary_point<T>();
      const auto h = rng.plane_off(s);
      record(s.coords(), h.coeffs());
      return spec::SpaceHomology<T>{s, h, rng.ratio<T>()};
    }
    case 5: {
      const auto s = rng.infinite_point<T>();
      const auto h = rng.plane_off(s);
      record(s.coords(), h.coeffs());
      return spec::ElementaryScaling<T>{s, h, rng.ratio<T>()};
    }
    case 6: {
      const auto s = rng.ordinary_point<T>();
      record(s.coords(), ideal);
      return spec::CentralDilation<T>{s, rng.ratio<T>()};
    }
    case 7: {
      const auto s = rng.ordinary_point<T>();
      const auto h = rng.plane_off(s);
      record(s.coords(), h.coeffs());
      return spec::InvolutorySpaceHomology<T>{s, h};
    }
    case 8: {
      const auto h = rng.ordinary_hyperplane<T>();
      if (rng.integer(0, 1) == 0) {
        record(normal_direction_of(h).coords(), h.coeffs());
        return spec::Reflection<T>{h, std::nullopt};
      }
      for (;;) {
        const auto d = rng.infinite_point<T>();
        if (dot(d.coords(), h.coeffs()) == 0) continue;
        record(d.coords(), h.coeffs());
        return spec::Reflection<T>{h, d};
      }
    }
    case 9: {
      const auto s = rng.ordinary_point<T>();
      record(s.coords(), ideal);
      return spec::CentralSymmetry<T>{s};
    }
    case 10: {
      const auto s = rng.ordinary_point<T>();
      const auto h = rng.plane_through(s);
      record(s.coords(), h.coeffs());
      return spec::SpaceElation<T>{s, h, rng.ratio<T>(), conv};
    }
    case 11: {
      const auto s = rng.infinite_point<T>();
      const auto h = rng.plane_through(s);
      record(s.coords(), h.coeffs());
      return spec::Shearing<T>{s, h, rng.ratio<T>(), conv};
    }
    default: {
      const Vec4<T> d = rng.vec<T>(0);
      record(d, ideal);
      return spec::Translation<T>{{d[0], d[1], d[2]}};
    }
  }
}

/// Random four points in general position with S off every face plane of the
/// X tetrahedron, so both solvers are defined.
template <Scalar T>
std::array<HomPoint<T>, 4> random_frame(Rng& rng) {
  for (;;) {
    std::array<Vec4<T>, 4> v{rng.vec<T>(rng.nonzero()), rng.vec<T>(rng.nonzero()), rng.vec<T>(rng.nonzero()),
                             rng.vec<T>(rng.nonzero())};
    Mat4<T> m;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) m(r, c) = v[c][r];
    if (leibniz_det(m) == 0) continue;
    return {HomPoint<T>(v[0]), HomPoint<T>(v[1]), HomPoint<T>(v[2]), HomPoint<T>(v[3])};
  }
}

/// A synthesized configuration for a random nonsingular elementary transform,
/// or nullopt when the sample was degenerate.
template <Scalar T>
std::optional<DesarguesConfig<T>> random_configuration(Rng& rng, HomMatrix<T>* transform = nullptr) {
  const int row = rng.integer(4, 12);
  const HomMatrix<T> t = construct(random_spec<T>(rng, row));
  try {
    auto cfg = synthesize_configuration(t, random_frame<T>(rng));
    if (transform) *transform = t;
    return cfg;
  } catch (const GeometryError&) {
    return std::nullopt;
  }
}

}  // namespace stereo::testing
