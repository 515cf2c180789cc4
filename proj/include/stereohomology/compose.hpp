#pragma once

#include "stereohomology/classify.hpp"
#include "stereohomology/projective.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace stereo {

enum class CompositionRelation {
  None,                      // no shared element, or an input is not elementary
  SharedCenter,              // product is a stereohomology, hyperplane in the pencil of pi1, pi2
  SharedHyperplane,          // product is a stereohomology, center on line S1S2
  SharedCenterAndHyperplane, // product keeps both S and pi (or is the identity)
  InvolutorySharedHyperplane,// product is an elementary perspective, center S1S2 meet pi
  InvolutorySharedCenter,    // product is an elementary perspective, hyperplane through pi1^pi2 and S
};

std::string_view relation_name(CompositionRelation r);

template <Scalar T>
struct CompositionNote {
  CompositionRelation relation = CompositionRelation::None;
  std::optional<HomPoint<T>> predicted_center;
  std::optional<HomHyperplane<T>> predicted_hyperplane;
  bool predicted_perspective = false;
  bool predicted_identity = false;
};

template <Scalar T>
struct Composition {
  HomMatrix<T> product;  // first * second: `second` acts first
  CompositionNote<T> note;
};

template <Scalar T>
Composition<T> compose(const HomMatrix<T>& first, const HomMatrix<T>& second);

/// Axis through `anchor` along `direction`, right-handed angle `theta`.
struct RotationSpec {
  std::array<double, 3> anchor{0, 0, 0};
  std::array<double, 3> direction{0, 0, 1};
  double theta = 0;
};

/// Reflect in pi1, then in pi2. The result rotates about pi1 ^ pi2 by twice the
/// dihedral angle, right-handed about n1 x n2. Equal planes give the identity.
HomMatrix<double> rotation_from_reflections(const HomHyperplane<double>& pi1, const HomHyperplane<double>& pi2);

/// The axis and angle realised by rotation_from_reflections(pi1, pi2).
RotationSpec reflection_pair_axis(const HomHyperplane<double>& pi1, const HomHyperplane<double>& pi2);

/// Homogeneous Rodrigues form: C1 + (sin(theta) A2 - (1 - cos(theta)) O3) T4,
/// with C1 = diag(1,1,1,2-cos(theta)), A2 the cross-product matrix of the unit
/// direction, O3 = I - n n^T for n = (a,b,c,0) and T4 the translation by -anchor.
HomMatrix<double> rotation_rodrigues(const RotationSpec& spec);

/// Eigenvalues {e^{i theta}, e^{-i theta}, 1, 1} after scaling the axis
/// eigenvalue to 1, with the anchor and the axis direction fixed.
bool check_rotation_eigenstructure(const HomMatrix<double>& r, const RotationSpec& spec);

/// max |a - k b| / max |a| with k the least-squares scale of b onto a.
double scaled_max_deviation(const Mat4<double>& a, const Mat4<double>& b);

}  // namespace stereo
