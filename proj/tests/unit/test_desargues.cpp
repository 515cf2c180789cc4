#include <doctest.h>

#include "testing.hpp"

#include "stereohomology/classify.hpp"
#include "stereohomology/construct.hpp"
#include "stereohomology/desargues.hpp"

#include <algorithm>

using namespace stereo;
using namespace stereo::testing;

namespace {

template <Scalar T>
std::array<HomPoint<T>, 4> unit_frame() {
  return {pt<T>(1, 0, 0, 1), pt<T>(0, 1, 0, 1), pt<T>(0, 0, 1, 1), pt<T>(1, 1, 1, 1)};
}

template <Scalar T>
DesarguesConfig<T> image_config(const Mat4<T>& t, const HomPoint<T>& s, const std::array<HomPoint<T>, 4>& x) {
  return {x, s,
          {HomPoint<T>(t * x[0].coords()), HomPoint<T>(t * x[1].coords()), HomPoint<T>(t * x[2].coords()),
           HomPoint<T>(t * x[3].coords())}};
}

template <Scalar T>
DesarguesConfig<T> dilation_config() {
  return image_config<T>(Mat4<T>::diagonal({T(1), T(1), T(1), T(2)}), pt<T>(0, 0, 0, 1), unit_frame<T>());
}

}  // namespace

TEST_CASE_TEMPLATE("central-dilation configuration", T, Q, double) {
  const auto cfg = dilation_config<T>();
  const auto r = verify_configuration(cfg);
  CHECK(r.valid);
  CHECK_FALSE(r.degenerate);
  CHECK(r.intersection_rank == 3);
  REQUIRE(r.intersections.size() == 6);
  for (const auto& e : r.intersections) CHECK(e.status == "ok");

  const Mat4<T> want = Mat4<T>::diagonal({T(1), T(1), T(1), T(2)});
  CHECK(proportional(construct_cramer(cfg).matrix(), want));
  CHECK(proportional(construct_linear_system(cfg).matrix(), want));
}

TEST_CASE("intersection rank matches a brute-force minor search") {
  const auto r = verify_configuration(dilation_config<Q>());
  std::vector<Vec4<Q>> pts;
  for (const auto& e : r.intersections) pts.push_back(e.point->coords());
  CHECK(minor_rank(pts) == 3);
  // Each meet lies on both edge lines: it is in the span of Xi, Xj.
  const auto cfg = dilation_config<Q>();
  for (const auto& e : r.intersections) {
    const std::vector<Vec4<Q>> span{cfg.x[e.i - 1].coords(), cfg.x[e.j - 1].coords(), e.point->coords()};
    CHECK(minor_rank(span) == 2);
  }
}

TEST_CASE("collinearity violation is reported") {
  auto cfg = dilation_config<Q>();
  cfg.y[3] = pt<Q>(1, 2, 1, 1);
  const auto r = verify_configuration(cfg);
  CHECK_FALSE(r.valid);
  CHECK(std::find(r.violated.begin(), r.violated.end(), "not_collinear:4") != r.violated.end());
  try {
    (void)construct_cramer(cfg);
    FAIL("expected InvalidConfiguration");
  } catch (const GeometryError& e) {
    CHECK(e.code() == ErrorCode::InvalidConfiguration);
  }
  CHECK_THROWS_AS(construct_linear_system(cfg), GeometryError);
}

TEST_CASE("dependent X points are reported") {
  auto cfg = dilation_config<Q>();
  cfg.x[3] = pt<Q>(1, 1, 0, 2);
  cfg.y[3] = pt<Q>(1, 1, 0, 4);
  const auto r = verify_configuration(cfg);
  CHECK_FALSE(r.valid);
  CHECK(std::find(r.violated.begin(), r.violated.end(), "x_stack_rank") != r.violated.end());
}

TEST_CASE_TEMPLATE("identity configuration", T, Q, double) {
  const auto x = unit_frame<T>();
  const DesarguesConfig<T> cfg{x, pt<T>(0, 0, 0, 1), x};
  const auto r = verify_configuration(cfg);
  CHECK(r.valid);
  CHECK(r.degenerate);
  for (const auto& e : r.intersections) {
    CHECK_FALSE(e.point.has_value());
    CHECK(e.status == "CoincidentLines");
  }
  CHECK(proportional(construct_cramer(cfg).matrix(), Mat4<T>::identity()));
  CHECK(proportional(construct_linear_system(cfg).matrix(), Mat4<T>::identity()));
}

TEST_CASE_TEMPLATE("central-projection configuration", T, Q, double) {
  const auto proj = singular(pt<T>(0, 0, 0, 1), hp<T>(0, 0, 1, -5));
  const std::array<HomPoint<T>, 4> x{pt<T>(1, 0, 1, 1), pt<T>(0, 2, 1, 1), pt<T>(-1, -1, 2, 1), pt<T>(1, 1, 3, 1)};
  const auto cfg = image_config(proj.matrix(), pt<T>(0, 0, 0, 1), x);
  CHECK(verify_configuration(cfg).valid);
  CHECK(proportional(construct_cramer(cfg).matrix(), proj.matrix()));
}

TEST_CASE("S coplanar with three X points") {
  // S = (1, 1, 0, 1) lies on z = 0 together with X1, X2 and X4.
  const std::array<HomPoint<Q>, 4> x{pt<Q>(1, 0, 0, 1), pt<Q>(0, 1, 0, 1), pt<Q>(0, 0, 1, 1), pt<Q>(0, 0, 0, 1)};
  const auto s = pt<Q>(1, 1, 0, 1);
  const auto t = homology<Q>({s, hp<Q>(0, 0, 1, -5), Q(1), Q(3)});
  const auto cfg = image_config(t.matrix(), s, x);
  REQUIRE(verify_configuration(cfg).valid);
  try {
    (void)construct_cramer(cfg);
    FAIL("expected SingularDelta");
  } catch (const GeometryError& e) {
    CHECK(e.code() == ErrorCode::SingularDelta);
  }
  try {
    (void)construct_linear_system(cfg);
    FAIL("expected SingularSystem");
  } catch (const GeometryError& e) {
    CHECK(e.code() == ErrorCode::SingularSystem);
  }
}

TEST_CASE("frame system layout") {
  const auto [a, b] = frame_system(unit_frame<Q>(), pt<Q>(0, 0, 0, 1));
  CHECK(a.rows == 20);
  CHECK(a.cols == 20);
  REQUIRE(b.size() == 20);
  // rho_1 = 1 pins the first column of T to X1.
  CHECK(b[0] == 1);
  CHECK(b[3] == 1);
  for (int i = 4; i < 20; ++i) CHECK(b[i] == 0);
  CHECK(rank(a) == 20);
}

TEST_CASE("dual solvers agree on random configurations") {
  Rng rng(51);
  int cases = 0;
  while (cases < 40) {
    HomMatrix<Q> t(Mat4<Q>::identity());
    const auto cfg = random_configuration<Q>(rng, &t);
    if (!cfg) continue;
    ++cases;
    CHECK(verify_configuration(*cfg).valid);
    const auto a = construct_cramer(*cfg);
    CHECK(canonical(a.matrix()) == canonical(construct_linear_system(*cfg).matrix()));
    CHECK(canonical(a.matrix()) == canonical(t.matrix()));
  }
}

TEST_CASE("dual solvers agree on floats") {
  Rng rng(52);
  int cases = 0;
  while (cases < 40) {
    HomMatrix<double> t(Mat4<double>::identity());
    const auto cfg = random_configuration<double>(rng, &t);
    if (!cfg) continue;
    ++cases;
    CHECK(proportional(construct_cramer(*cfg), t));
    CHECK(proportional(construct_linear_system(*cfg), t));
  }
}

TEST_CASE("synthesis") {
  const auto tr = HomMatrix<Q>(translation_matrix<Q>(3, 0, 0));
  const std::array<HomPoint<Q>, 4> affine{pt<Q>(0, 0, 0, 1), pt<Q>(1, 0, 0, 1), pt<Q>(0, 1, 0, 1), pt<Q>(0, 0, 1, 1)};
  const auto cfg = synthesize_configuration(tr, affine);
  CHECK(proportional(cfg.s, pt<Q>(1, 0, 0, 0)));
  for (int i = 0; i < 4; ++i) {
    Vec4<Q> d;
    for (int k = 0; k < 4; ++k) d[k] = cfg.y[i][k] / cfg.y[i][3] - cfg.x[i][k] / cfg.x[i][3];
    CHECK(proportional(d, Vec4<Q>{Q(1), Q(0), Q(0), Q(0)}));
  }

  Rng rng(53);
  const auto refl = HomMatrix<Q>(reflection_fixture<Q>());
  const auto rc = synthesize_configuration(refl, random_frame<Q>(rng));
  CHECK(verify_configuration(rc).valid);

  try {
    (void)synthesize_configuration(HomMatrix<Q>(givens_z<Q>()), affine);
    FAIL("expected NotElementary");
  } catch (const GeometryError& e) {
    CHECK(e.code() == ErrorCode::NotElementary);
  }
  // X on the mirror is fixed.
  const std::array<HomPoint<Q>, 4> on_mirror{pt<Q>(1, 0, 0, 1), pt<Q>(1, 0, 0, 0), pt<Q>(0, 1, 0, 1),
                                             pt<Q>(0, 0, 1, 1)};
  try {
    (void)synthesize_configuration(refl, on_mirror);
    FAIL("expected DegenerateSample");
  } catch (const GeometryError& e) {
    CHECK(e.code() == ErrorCode::DegenerateSample);
  }
}
