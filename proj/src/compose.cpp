#include "stereohomology/compose.hpp"

namespace stereo {

std::string_view relation_name(CompositionRelation r) {
  switch (r) {
    case CompositionRelation::None: return "None";
    case CompositionRelation::SharedCenter: return "SharedCenter";
    case CompositionRelation::SharedHyperplane: return "SharedHyperplane";
    case CompositionRelation::SharedCenterAndHyperplane: return "SharedCenterAndHyperplane";
    case CompositionRelation::InvolutorySharedHyperplane: return "InvolutorySharedHyperplane";
    case CompositionRelation::InvolutorySharedCenter: return "InvolutorySharedCenter";
  }
  return "None";
}

template <Scalar T>
Composition<T> compose(const HomMatrix<T>& first, const HomMatrix<T>& second) {
  first.require_transformation();
  second.require_transformation();
  Composition<T> out{first * second, {}};

  const Classification<T> c1 = classify(first);
  const Classification<T> c2 = classify(second);
  if (c1.kind.tag == Kind::NotElementary || c2.kind.tag == Kind::NotElementary) return out;

  const HomPoint<T>& s1 = *c1.center;
  const HomPoint<T>& s2 = *c2.center;
  const HomHyperplane<T>& pi1 = *c1.hyperplane;
  const HomHyperplane<T>& pi2 = *c2.hyperplane;
  const bool same_center = proportional(s1, s2);
  const bool same_plane = proportional(pi1, pi2);
  const bool both_involutory = c1.involutory && c2.involutory;
  auto& note = out.note;

  if (same_center && same_plane) {
    note.relation = CompositionRelation::SharedCenterAndHyperplane;
    note.predicted_center = s1;
    note.predicted_hyperplane = pi1;
    note.predicted_identity = both_involutory;
  } else if (same_plane) {
    note.predicted_hyperplane = pi1;
    if (both_involutory) {
      // Meet of line S1S2 with pi.
      note.relation = CompositionRelation::InvolutorySharedHyperplane;
      note.predicted_perspective = true;
      const T a = dot(pi1.coeffs(), s2.coords());
      const T b = dot(pi1.coeffs(), s1.coords());
      Vec4<T> c;
      for (std::size_t i = 0; i < 4; ++i) c[i] = a * s1[i] - b * s2[i];
      note.predicted_center = HomPoint<T>(canonical(c));
    } else {
      note.relation = CompositionRelation::SharedHyperplane;
    }
  } else if (same_center) {
    note.predicted_center = s1;
    if (both_involutory) {
      // Join of the axis pi1 ^ pi2 with S.
      note.relation = CompositionRelation::InvolutorySharedCenter;
      note.predicted_perspective = true;
      const T a = dot(pi2.coeffs(), s1.coords());
      const T b = dot(pi1.coeffs(), s1.coords());
      Vec4<T> h;
      for (std::size_t i = 0; i < 4; ++i) h[i] = a * pi1[i] - b * pi2[i];
      note.predicted_hyperplane = HomHyperplane<T>(canonical(h));
    } else {
      note.relation = CompositionRelation::SharedCenter;
    }
  }
  return out;
}

template Composition<Rational> compose<Rational>(const HomMatrix<Rational>&, const HomMatrix<Rational>&);
template Composition<double> compose<double>(const HomMatrix<double>&, const HomMatrix<double>&);

double scaled_max_deviation(const Mat4<double>& a, const Mat4<double>& b) {
  double ab = 0, bb = 0, amax = 0;
  for (std::size_t i = 0; i < 16; ++i) {
    ab += a.flat()[i] * b.flat()[i];
    bb += b.flat()[i] * b.flat()[i];
    amax = std::max(amax, std::fabs(a.flat()[i]));
  }
  const double k = bb > 0 ? ab / bb : 0.0;
  double dev = 0;
  for (std::size_t i = 0; i < 16; ++i) dev = std::max(dev, std::fabs(a.flat()[i] - k * b.flat()[i]));
  return amax > 0 ? dev / amax : dev;
}

}  // namespace stereo
