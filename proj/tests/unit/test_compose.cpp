#include <doctest.h>

#include "testing.hpp"

#include "stereohomology/classify.hpp"
#include "stereohomology/compose.hpp"
#include "stereohomology/construct.hpp"

using namespace stereo;
using namespace stereo::testing;

TEST_CASE("two central symmetries compose to a translation") {
  const auto t1 = construct<Q>(spec::CentralSymmetry<Q>{pt<Q>(0, 0, 0, 1)});
  const auto t2 = construct<Q>(spec::CentralSymmetry<Q>{pt<Q>(1, 0, 0, 1)});
  const auto c = compose(t1, t2);
  CHECK(c.note.relation == CompositionRelation::InvolutorySharedHyperplane);
  CHECK(c.note.predicted_perspective);
  REQUIRE(c.note.predicted_center.has_value());
  CHECK(proportional(*c.note.predicted_center, pt<Q>(1, 0, 0, 0)));
  const auto k = classify(c.product);
  CHECK(k.kind.tag == Kind::Translation);
  // T1 * T2 applies the symmetry about (1,0,0) first: x -> 2 - x -> x - 2.
  CHECK(proportional(c.product.matrix(), translation_matrix<Q>(-2, 0, 0)));
  CHECK(proportional(compose(t2, t1).product.matrix(), translation_matrix<Q>(2, 0, 0)));
}

TEST_CASE("a reflection composed with itself is the identity") {
  const auto r = construct<Q>(spec::Reflection<Q>{hp<Q>(1, 0, 0, 0), std::nullopt});
  const auto c = compose(r, r);
  CHECK(c.product.matrix() == Mat4<Q>::identity());
  CHECK(c.note.relation == CompositionRelation::SharedCenterAndHyperplane);
  CHECK(c.note.predicted_identity);
}

TEST_CASE("orthographic and oblique reflections in one plane make a shear") {
  const auto pi = hp<Q>(1, 0, 0, 0);
  const auto r1 = involutory(pt<Q>(1, 0, 0, 0), pi);
  const auto r2 = involutory(pt<Q>(1, 1, 0, 0), pi);
  const auto c = compose(r1, r2);
  const auto k = classify(c.product);
  CHECK(k.kind.tag == Kind::Shearing);
  CHECK(proportional(*k.center, pt<Q>(0, 1, 0, 0)));
  CHECK(proportional(*k.hyperplane, pi));
  CHECK(proportional(*c.note.predicted_center, pt<Q>(0, 1, 0, 0)));
}

TEST_CASE("shared-hyperplane involutory pairs") {
  Rng rng(61);
  for (int i = 0; i < 30; ++i) {
    const auto pi = rng.ordinary_hyperplane<Q>();
    const auto s1 = rng.point_off(pi);
    const auto s2 = rng.point_off(pi);
    if (proportional(s1, s2)) continue;
    const auto t1 = involutory(s1, pi);
    const auto t2 = involutory(s2, pi);
    const auto c = compose(t1, t2);
    const auto k = classify(c.product);
    REQUIRE(k.kind.tag != Kind::NotElementary);
    CHECK(k.perspective_family);
    CHECK(proportional(*k.hyperplane, pi));
    CHECK(proportional(*k.center, *c.note.predicted_center));
    // The two orders are inverse to each other.
    CHECK(proportional(c.product * compose(t2, t1).product, HomMatrix<Q>(Mat4<Q>::identity())));
  }
}

TEST_CASE("shared-center involutory pairs") {
  Rng rng(62);
  for (int i = 0; i < 30; ++i) {
    const auto s = rng.ordinary_point<Q>();
    const auto p1 = rng.plane_off(s);
    const auto p2 = rng.plane_off(s);
    if (proportional(p1, p2)) continue;
    const auto c = compose(involutory(s, p1), involutory(s, p2));
    const auto k = classify(c.product);
    CHECK(c.note.relation == CompositionRelation::InvolutorySharedCenter);
    REQUIRE(k.kind.tag != Kind::NotElementary);
    CHECK(k.perspective_family);
    CHECK(proportional(*k.center, s));
    CHECK(proportional(*k.hyperplane, *c.note.predicted_hyperplane));
  }
}

TEST_CASE("shared element keeps the product elementary") {
  Rng rng(63);
  for (int i = 0; i < 30; ++i) {
    const auto pi = rng.ordinary_hyperplane<Q>();
    const auto s1 = rng.point_off(pi);
    const auto s2 = rng.point_off(pi);
    if (proportional(s1, s2)) continue;
    const auto a = homology<Q>({s1, pi, Q(1), rng.ratio<Q>()});
    const auto b = homology<Q>({s2, pi, Q(1), rng.ratio<Q>()});
    const auto c = compose(a, b);
    CHECK(c.note.relation == CompositionRelation::SharedHyperplane);
    const auto k = classify(c.product);
    if (k.kind.tag == Kind::NotElementary) {
      CHECK(k.detail == "Identity");
      continue;
    }
    CHECK(proportional(*k.hyperplane, pi));
    // The three centers are collinear.
    CHECK(minor_rank<Q>({s1.coords(), s2.coords(), k.center->coords()}) == 2);
  }
}

TEST_CASE("translation and central dilation share the ideal plane") {
  const auto a = construct<Q>(spec::Translation<Q>{{Q(1), Q(0), Q(0)}});
  const auto b = construct<Q>(spec::CentralDilation<Q>{pt<Q>(1, 2, 3, 1), Q(2)});
  const auto c = compose(a, b);
  CHECK(c.note.relation == CompositionRelation::SharedHyperplane);
  CHECK(classify(c.product).kind.tag == Kind::CentralDilation);
}

TEST_CASE("unrelated transforms carry no prediction") {
  const auto a = construct<Q>(spec::Translation<Q>{{Q(1), Q(0), Q(0)}});
  const auto b = construct<Q>(spec::SpaceHomology<Q>{pt<Q>(1, 2, 3, 1), hp<Q>(0, 0, 1, -5), Q(2)});
  const auto c = compose(a, b);
  CHECK(c.note.relation == CompositionRelation::None);
  CHECK(c.product.matrix() == a.matrix() * b.matrix());
  const auto d = compose(HomMatrix<Q>(givens_z<Q>()), a);
  CHECK(d.note.relation == CompositionRelation::None);
}
