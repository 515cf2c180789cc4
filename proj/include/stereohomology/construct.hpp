#pragma once

#include "stereohomology/projective.hpp"

#include <array>
#include <optional>
#include <string_view>
#include <variant>

namespace stereo {

/// How the shear magnitude of an elementary perspective is scaled.
/// Normalized: T = lambda*I + mu * s pi^T / sqrt(s.s * pi.pi), independent of
/// the representatives chosen for s and pi. Raw: T = lambda*I + mu * s pi^T.
/// On the rational backend Normalized needs s.s * pi.pi to be a perfect square.
enum class MuConvention { Normalized, Raw };

std::string_view mu_convention_name(MuConvention c);

template <Scalar T>
struct HomologyParams {
  HomPoint<T> s;
  HomHyperplane<T> pi;
  T lambda;
  T rho;
};

template <Scalar T>
struct PerspectiveParams {
  HomPoint<T> s;
  HomHyperplane<T> pi;
  T lambda;
  T mu;
  MuConvention convention = MuConvention::Normalized;
};

/// lambda*I + (rho - lambda) * s pi^T / (s.pi). Fixes pi pointwise with
/// eigenvalue lambda and scales s by rho.
template <Scalar T>
HomMatrix<T> homology(const HomologyParams<T>& p);

/// lambda*I + mu * s pi^T / normalizer, for s on pi. Always nonsingular.
template <Scalar T>
HomMatrix<T> perspective(const PerspectiveParams<T>& p);

/// I - s pi^T / (s.pi): rank 3, annihilates s.
template <Scalar T>
HomMatrix<T> singular(const HomPoint<T>& s, const HomHyperplane<T>& pi);

/// I - 2 s pi^T / (s.pi): squares to the identity.
template <Scalar T>
HomMatrix<T> involutory(const HomPoint<T>& s, const HomHyperplane<T>& pi);

// The twelve elementary kinds. Each carries only the data its row permits;
// `ratio` is rho/lambda with lambda fixed at 1.
namespace spec {

template <Scalar T> struct CentralProjection { HomPoint<T> center; HomHyperplane<T> hyperplane; };
template <Scalar T> struct ParallelProjection { HomPoint<T> center; HomHyperplane<T> hyperplane; };
template <Scalar T> struct Direction { HomPoint<T> center; };
template <Scalar T> struct SpaceHomology { HomPoint<T> center; HomHyperplane<T> hyperplane; T ratio; };
template <Scalar T> struct ElementaryScaling { HomPoint<T> center; HomHyperplane<T> hyperplane; T ratio; };
template <Scalar T> struct CentralDilation { HomPoint<T> center; T ratio; };
template <Scalar T> struct InvolutorySpaceHomology { HomPoint<T> center; HomHyperplane<T> hyperplane; };
template <Scalar T> struct Reflection { HomHyperplane<T> hyperplane; std::optional<HomPoint<T>> center; };
template <Scalar T> struct CentralSymmetry { HomPoint<T> center; };
template <Scalar T> struct SpaceElation {
  HomPoint<T> center;
  HomHyperplane<T> hyperplane;
  T mu;
  MuConvention convention = MuConvention::Normalized;
};
template <Scalar T> struct Shearing {
  HomPoint<T> center;
  HomHyperplane<T> hyperplane;
  T mu;
  MuConvention convention = MuConvention::Normalized;
};
template <Scalar T> struct Translation { std::array<T, 3> displacement; };

}  // namespace spec

template <Scalar T>
using ElementarySpec =
    std::variant<spec::CentralProjection<T>, spec::ParallelProjection<T>, spec::Direction<T>,
                 spec::SpaceHomology<T>, spec::ElementaryScaling<T>, spec::CentralDilation<T>,
                 spec::InvolutorySpaceHomology<T>, spec::Reflection<T>, spec::CentralSymmetry<T>,
                 spec::SpaceElation<T>, spec::Shearing<T>, spec::Translation<T>>;

/// Row number 1..12 of the variant held by `s`.
template <Scalar T>
int spec_row(const ElementarySpec<T>& s) {
  return static_cast<int>(s.index()) + 1;
}

std::string_view spec_kind_name(int row);

/// Validates the row's conditions (SpecViolation with the row number on
/// failure) and dispatches: rows 1-3 singular, 4-6 homology, 7-9 involutory,
/// 10-12 perspective.
template <Scalar T>
HomMatrix<T> construct(const ElementarySpec<T>& s);

}  // namespace stereo
