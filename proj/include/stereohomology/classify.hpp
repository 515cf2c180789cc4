#pragma once

#include "stereohomology/construct.hpp"
#include "stereohomology/projective.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace stereo {

enum class Kind {
  CentralProjection,
  ParallelProjection,
  Direction,
  SpaceHomology,
  ElementaryScaling,
  CentralDilation,
  InvolutorySpaceHomology,
  Reflection,
  CentralSymmetry,
  SpaceElation,
  Shearing,
  Translation,
  NotElementary,
};

/// Only ParallelProjection, ElementaryScaling and Reflection carry a sub-tag.
enum class SubKind { None, Orthographic, Oblique };

struct ElementaryKind {
  Kind tag = Kind::NotElementary;
  SubKind sub = SubKind::None;

  bool operator==(const ElementaryKind&) const = default;
};

std::string_view kind_name(Kind k);
std::string_view sub_kind_name(SubKind s);
std::optional<Kind> parse_kind(std::string_view name);
/// Kind::CentralProjection is row 1 ... Kind::Translation is row 12.
inline int kind_row(Kind k) { return static_cast<int>(k) + 1; }

template <Scalar T>
struct AxialEigen {
  T lambda;
  Mat4<T> rank1_part;  // T - lambda*I
};

/// The eigenvalue whose eigenspace is a hyperplane, i.e. rank(T - lambda*I) <= 1.
/// Candidates are the roots of the second and third derivatives of the
/// characteristic polynomial (a root of multiplicity >= 3 is a root of both),
/// confirmed by the rank test. NotStereohomology when none passes.
template <Scalar T>
AxialEigen<T> axial_eigenvalue(const HomMatrix<T>& t);

template <Scalar T>
struct CenterAxis {
  HomPoint<T> s;
  HomHyperplane<T> pi;
  T lambda;
  T second;  // rho when s is off pi, mu otherwise
  bool perspective = false;
  MuConvention convention = MuConvention::Normalized;
};

/// Center and hyperplane from the rank-one part, both canonical.
/// IdentityAmbiguous for matrices proportional to the identity.
template <Scalar T>
CenterAxis<T> extract_center_axis(const HomMatrix<T>& t);

template <Scalar T>
struct Classification {
  ElementaryKind kind;
  std::optional<HomPoint<T>> center;
  std::optional<HomHyperplane<T>> hyperplane;
  std::optional<T> lambda;
  std::optional<T> rho_or_mu;
  bool perspective_family = false;
  MuConvention mu_convention = MuConvention::Normalized;
  bool involutory = false;
  bool singular = false;
  // For NotElementary: "Identity" or "NotStereohomology".
  std::string detail;
};

/// Total over valid matrices (rank >= 3); throws InvalidTransform otherwise.
template <Scalar T>
Classification<T> classify(const HomMatrix<T>& t);

/// T*T proportional to the identity.
template <Scalar T>
bool is_involutory(const HomMatrix<T>& t);

/// Rebuilds the matrix from a classification (homology or perspective form).
template <Scalar T>
HomMatrix<T> reconstruct(const Classification<T>& c);

}  // namespace stereo
