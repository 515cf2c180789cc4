#include "stereohomology/desargues.hpp"

#include "stereohomology/classify.hpp"

#include <string>

namespace stereo {

namespace {

template <Scalar T>
std::vector<std::string> config_violations(const DesarguesConfig<T>& cfg) {
  std::vector<std::string> out;
  const std::array<Vec4<T>, 4> xs{cfg.x[0].coords(), cfg.x[1].coords(), cfg.x[2].coords(), cfg.x[3].coords()};
  if (rank_of_points<T>(xs) != 4) out.emplace_back("x_stack_rank");

  static constexpr int triples[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  for (const auto& tr : triples) {
    const std::array<Vec4<T>, 3> ys{cfg.y[tr[0]].coords(), cfg.y[tr[1]].coords(), cfg.y[tr[2]].coords()};
    if (rank_of_points<T>(ys) != 3)
      out.push_back("y_triple_dependent:" + std::to_string(tr[0] + 1) + "," + std::to_string(tr[1] + 1) + "," +
                    std::to_string(tr[2] + 1));
  }
  for (std::size_t i = 0; i < 4; ++i) {
    const std::array<Vec4<T>, 3> line{cfg.s.coords(), cfg.x[i].coords(), cfg.y[i].coords()};
    if (rank_of_points<T>(line) > 2) out.push_back("not_collinear:" + std::to_string(i + 1));
  }
  return out;
}

template <Scalar T>
void require_valid(const DesarguesConfig<T>& cfg) {
  const auto v = config_violations(cfg);
  if (!v.empty()) {
    std::string msg = "configuration violates";
    for (const auto& s : v) msg += " " + s;
    throw GeometryError(ErrorCode::InvalidConfiguration, msg);
  }
}

template <Scalar T>
Mat4<T> columns(const std::array<HomPoint<T>, 4>& pts) {
  Mat4<T> m;
  for (std::size_t c = 0; c < 4; ++c)
    for (std::size_t r = 0; r < 4; ++r) m(r, c) = pts[c][r];
  return m;
}

template <Scalar T>
double column_scale(const Mat4<T>& m) {
  double s = 1;
  for (std::size_t c = 0; c < 4; ++c) s *= norm(m.col(c));
  return s;
}

// Columns of m scaled by det(m with column j replaced by s).
template <Scalar T>
std::pair<Mat4<T>, bool> cramer_scaled(const Mat4<T>& m, const HomPoint<T>& s) {
  Mat4<T> out = m;
  bool any_zero = false;
  for (std::size_t j = 0; j < 4; ++j) {
    Mat4<T> replaced = m;
    for (std::size_t r = 0; r < 4; ++r) replaced(r, j) = s[r];
    const T delta = determinant(replaced);
    if (near_zero(delta, column_scale(replaced))) any_zero = true;
    for (std::size_t r = 0; r < 4; ++r) out(r, j) = m(r, j) * delta;
  }
  return {out, any_zero};
}

template <Scalar T>
Mat4<T> frame_map(const std::array<HomPoint<T>, 4>& pts, const HomPoint<T>& s) {
  const auto [a, b] = frame_system(pts, s);
  const auto sol = solve(a, std::span<const T>(b));
  if (!sol) throw GeometryError(ErrorCode::SingularSystem, "frame system is singular (S coplanar with three points)");
  Mat4<T> t;
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t i = 0; i < 4; ++i) t(i, j) = (*sol)[j * 4 + i];
  return t;
}

}  // namespace

template <Scalar T>
DesarguesReport<T> verify_configuration(const DesarguesConfig<T>& cfg) {
  DesarguesReport<T> rep;
  rep.violated = config_violations(cfg);
  rep.valid = rep.violated.empty();

  std::vector<Vec4<T>> defined;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      EdgeIntersection<T> e{i + 1, j + 1, std::nullopt, "ok"};
      try {
        e.point = line_line_intersection(cfg.x[i], cfg.x[j], cfg.y[i], cfg.y[j]);
        defined.push_back(e.point->coords());
      } catch (const GeometryError& err) {
        e.status = std::string(err.name());
        rep.degenerate = true;
      }
      rep.intersections.push_back(std::move(e));
    }
  rep.intersection_rank = defined.empty() ? 0 : rank_of_points<T>(defined);
  return rep;
}

template <Scalar T>
HomMatrix<T> construct_cramer(const DesarguesConfig<T>& cfg) {
  require_valid(cfg);
  const auto [px, zero_x] = cramer_scaled(columns(cfg.x), cfg.s);
  if (zero_x) throw GeometryError(ErrorCode::SingularDelta, "S is coplanar with three of the X points");
  const auto [py, zero_y] = cramer_scaled(columns(cfg.y), cfg.s);
  (void)zero_y;
  const auto px_inv = inverse(px);
  if (!px_inv) throw GeometryError(ErrorCode::SingularDelta, "scaled X frame is singular");
  return HomMatrix<T>(py * *px_inv);
}

template <Scalar T>
std::pair<Dense<T>, std::vector<T>> frame_system(const std::array<HomPoint<T>, 4>& pts, const HomPoint<T>& s) {
  Dense<T> a(20, 20);
  std::vector<T> b(20, T(0));
  for (std::size_t i = 0; i < 4; ++i) {
    a(i, i) = 1;
    b[i] = pts[0][i];
    for (std::size_t k = 1; k < 4; ++k) {
      const std::size_t row = 4 * k + i;
      a(row, 4 * k + i) = 1;
      a(row, 15 + k) = -pts[k][i];
    }
    for (std::size_t j = 0; j < 4; ++j) a(16 + i, 4 * j + i) = 1;
    a(16 + i, 19) = -s[i];
  }
  return {std::move(a), std::move(b)};
}

template <Scalar T>
HomMatrix<T> construct_linear_system(const DesarguesConfig<T>& cfg) {
  require_valid(cfg);
  const Mat4<T> tx = frame_map(cfg.x, cfg.s);
  const Mat4<T> ty = frame_map(cfg.y, cfg.s);
  const auto tx_inv = inverse(tx);
  if (!tx_inv) throw GeometryError(ErrorCode::SingularSystem, "X frame map is singular");
  return HomMatrix<T>(ty * *tx_inv);
}

template <Scalar T>
DesarguesConfig<T> synthesize_configuration(const HomMatrix<T>& t, const std::array<HomPoint<T>, 4>& x) {
  const Classification<T> c = classify(t);
  if (c.kind.tag == Kind::NotElementary)
    throw GeometryError(ErrorCode::NotElementary, "matrix is not an elementary transformation (" + c.detail + ")");
  const std::array<Vec4<T>, 4> xs{x[0].coords(), x[1].coords(), x[2].coords(), x[3].coords()};
  if (rank_of_points<T>(xs) != 4) throw GeometryError(ErrorCode::DegenerateSample, "X points are not independent");

  std::array<Vec4<T>, 4> ys;
  for (std::size_t i = 0; i < 4; ++i) {
    ys[i] = t.matrix() * x[i].coords();
    if (all_zero<T>(ys[i]) || proportional(ys[i], x[i].coords()))
      throw GeometryError(ErrorCode::DegenerateSample,
                          "X" + std::to_string(i + 1) + " is fixed or annihilated by the transformation");
  }
  DesarguesConfig<T> cfg{x, *c.center,
                         {HomPoint<T>(ys[0]), HomPoint<T>(ys[1]), HomPoint<T>(ys[2]), HomPoint<T>(ys[3])}};
  if (!config_violations(cfg).empty())
    throw GeometryError(ErrorCode::DegenerateSample, "sampled images violate the configuration invariants");
  return cfg;
}

#define STEREO_INSTANTIATE(T)                                                                       \
  template DesarguesReport<T> verify_configuration<T>(const DesarguesConfig<T>&);                   \
  template HomMatrix<T> construct_cramer<T>(const DesarguesConfig<T>&);                             \
  template HomMatrix<T> construct_linear_system<T>(const DesarguesConfig<T>&);                      \
  template std::pair<Dense<T>, std::vector<T>> frame_system<T>(const std::array<HomPoint<T>, 4>&,  \
                                                              const HomPoint<T>&);                  \
  template DesarguesConfig<T> synthesize_configuration<T>(const HomMatrix<T>&,                      \
                                                          const std::array<HomPoint<T>, 4>&);

STEREO_INSTANTIATE(Rational)
STEREO_INSTANTIATE(double)

#undef STEREO_INSTANTIATE

}  // namespace stereo
