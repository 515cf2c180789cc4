#include "stereohomology/construct.hpp"

#include <string>

namespace stereo {

std::string_view mu_convention_name(MuConvention c) {
  return c == MuConvention::Normalized ? "normalized" : "raw";
}

std::string_view spec_kind_name(int row) {
  static constexpr std::string_view names[] = {
      "CentralProjection", "ParallelProjection", "Direction",       "SpaceHomology",
      "ElementaryScaling", "CentralDilation",    "InvolutorySpaceHomology", "Reflection",
      "CentralSymmetry",   "SpaceElation",       "Shearing",        "Translation"};
  if (row < 1 || row > 12) return "Unknown";
  return names[row - 1];
}

namespace {

template <Scalar T>
Mat4<T> rank_one(const Vec4<T>& s, const Vec4<T>& pi, const T& coeff) {
  return Mat4<T>::outer(s, pi) * coeff;
}

template <Scalar T>
T center_dot(const HomPoint<T>& s, const HomHyperplane<T>& pi) {
  return dot(s.coords(), pi.coeffs());
}

}  // namespace

template <Scalar T>
HomMatrix<T> homology(const HomologyParams<T>& p) {
  if (incidence(p.s, p.pi))
    throw GeometryError(ErrorCode::CenterOnHyperplane, "homology center lies on its hyperplane");
  if (p.lambda == 0 || near_zero(p.lambda, magnitude(p.rho)))
    throw GeometryError(ErrorCode::ZeroLambda, "axial eigenvalue lambda must be nonzero");
  const T sp = center_dot(p.s, p.pi);
  const T coeff = (p.rho - p.lambda) / sp;
  return HomMatrix<T>(Mat4<T>::identity() * p.lambda + rank_one(p.s.coords(), p.pi.coeffs(), coeff));
}

template <Scalar T>
HomMatrix<T> perspective(const PerspectiveParams<T>& p) {
  if (!incidence(p.s, p.pi))
    throw GeometryError(ErrorCode::CenterOffHyperplane, "perspective center must lie on its hyperplane");
  if (p.mu == 0 || near_zero(p.mu, magnitude(p.lambda)))
    throw GeometryError(ErrorCode::ZeroMu, "shear magnitude mu must be nonzero");
  if (p.lambda == 0) throw GeometryError(ErrorCode::ZeroLambda, "axial eigenvalue lambda must be nonzero");
  T coeff = p.mu;
  if (p.convention == MuConvention::Normalized) {
    const T radicand = dot(p.s.coords(), p.s.coords()) * dot(p.pi.coeffs(), p.pi.coeffs());
    const auto root = exact_sqrt(radicand);
    if (!root)
      throw GeometryError(ErrorCode::IrrationalNormalizer,
                          "sqrt(s.s * pi.pi) is irrational; use the raw mu convention or the float backend");
    coeff = p.mu / *root;
  }
  return HomMatrix<T>(Mat4<T>::identity() * p.lambda + rank_one(p.s.coords(), p.pi.coeffs(), coeff));
}

template <Scalar T>
HomMatrix<T> singular(const HomPoint<T>& s, const HomHyperplane<T>& pi) {
  return homology(HomologyParams<T>{s, pi, T(1), T(0)});
}

template <Scalar T>
HomMatrix<T> involutory(const HomPoint<T>& s, const HomHyperplane<T>& pi) {
  return homology(HomologyParams<T>{s, pi, T(1), T(-1)});
}

namespace {

template <Scalar T>
class RowCheck {
 public:
  explicit RowCheck(int row) : row_(row) {}

  void require(bool ok, const std::string& condition) const {
    if (!ok)
      throw GeometryError(ErrorCode::SpecViolation,
                          std::string(spec_kind_name(row_)) + " (row " + std::to_string(row_) +
                              "): " + condition,
                          row_);
  }
  void ordinary_center(const HomPoint<T>& s) const { require(!is_infinite_point(s), "center must be ordinary"); }
  void infinite_center(const HomPoint<T>& s) const { require(is_infinite_point(s), "center must be infinite"); }
  void ordinary_hyperplane(const HomHyperplane<T>& h) const {
    require(!is_ideal_hyperplane(h), "hyperplane must be ordinary");
  }
  void off(const HomPoint<T>& s, const HomHyperplane<T>& h) const {
    require(!incidence(s, h), "center must not lie on the hyperplane");
  }
  void on(const HomPoint<T>& s, const HomHyperplane<T>& h) const {
    require(incidence(s, h), "center must lie on the hyperplane");
  }
  // Ratios 0, 1, -1 belong to the singular row, the identity and the
  // involutory row respectively.
  void proper_ratio(const T& r) const {
    require(r != 0 && !near_zero(r, 1.0), "ratio must be nonzero (ratio 0 is a singular row)");
    require(!near_zero(T(r - T(1)), 1.0), "ratio 1 is the identity");
    require(!near_zero(T(r + T(1)), 1.0), "ratio -1 is an involutory row");
  }
  void nonzero_mu(const T& mu) const { require(mu != 0 && !near_zero(mu, 1.0), "mu must be nonzero"); }

 private:
  int row_;
};

template <Scalar T>
HomHyperplane<T> ideal_hyperplane() {
  return HomHyperplane<T>(T(0), T(0), T(0), T(1));
}

}  // namespace

template <Scalar T>
HomMatrix<T> construct(const ElementarySpec<T>& es) {
  const RowCheck<T> check(spec_row(es));
  return std::visit(
      [&](const auto& v) -> HomMatrix<T> {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, spec::CentralProjection<T>>) {
          check.ordinary_center(v.center);
          check.ordinary_hyperplane(v.hyperplane);
          check.off(v.center, v.hyperplane);
          return singular(v.center, v.hyperplane);
        } else if constexpr (std::is_same_v<V, spec::ParallelProjection<T>>) {
          check.infinite_center(v.center);
          check.ordinary_hyperplane(v.hyperplane);
          check.off(v.center, v.hyperplane);
          return singular(v.center, v.hyperplane);
        } else if constexpr (std::is_same_v<V, spec::Direction<T>>) {
          check.ordinary_center(v.center);
          return singular(v.center, ideal_hyperplane<T>());
        } else if constexpr (std::is_same_v<V, spec::SpaceHomology<T>>) {
          check.ordinary_center(v.center);
          check.ordinary_hyperplane(v.hyperplane);
          check.off(v.center, v.hyperplane);
          check.proper_ratio(v.ratio);
          return homology(HomologyParams<T>{v.center, v.hyperplane, T(1), v.ratio});
        } else if constexpr (std::is_same_v<V, spec::ElementaryScaling<T>>) {
          check.infinite_center(v.center);
          check.ordinary_hyperplane(v.hyperplane);
          check.off(v.center, v.hyperplane);
          check.proper_ratio(v.ratio);
          return homology(HomologyParams<T>{v.center, v.hyperplane, T(1), v.ratio});
        } else if constexpr (std::is_same_v<V, spec::CentralDilation<T>>) {
          check.ordinary_center(v.center);
          check.proper_ratio(v.ratio);
          return homology(HomologyParams<T>{v.center, ideal_hyperplane<T>(), T(1), v.ratio});
        } else if constexpr (std::is_same_v<V, spec::InvolutorySpaceHomology<T>>) {
          check.ordinary_center(v.center);
          check.ordinary_hyperplane(v.hyperplane);
          check.off(v.center, v.hyperplane);
          return involutory(v.center, v.hyperplane);
        } else if constexpr (std::is_same_v<V, spec::Reflection<T>>) {
          check.ordinary_hyperplane(v.hyperplane);
          const HomPoint<T> s = v.center ? *v.center : normal_direction_of(v.hyperplane);
          check.infinite_center(s);
          check.off(s, v.hyperplane);
          return involutory(s, v.hyperplane);
        } else if constexpr (std::is_same_v<V, spec::CentralSymmetry<T>>) {
          check.ordinary_center(v.center);
          return involutory(v.center, ideal_hyperplane<T>());
        } else if constexpr (std::is_same_v<V, spec::SpaceElation<T>>) {
          check.ordinary_center(v.center);
          check.ordinary_hyperplane(v.hyperplane);
          check.on(v.center, v.hyperplane);
          check.nonzero_mu(v.mu);
          return perspective(PerspectiveParams<T>{v.center, v.hyperplane, T(1), v.mu, v.convention});
        } else if constexpr (std::is_same_v<V, spec::Shearing<T>>) {
          check.infinite_center(v.center);
          check.ordinary_hyperplane(v.hyperplane);
          check.on(v.center, v.hyperplane);
          check.nonzero_mu(v.mu);
          return perspective(PerspectiveParams<T>{v.center, v.hyperplane, T(1), v.mu, v.convention});
        } else {
          static_assert(std::is_same_v<V, spec::Translation<T>>);
          const auto& d = v.displacement;
          check.require(!(d[0] == 0 && d[1] == 0 && d[2] == 0), "displacement must be nonzero");
          // s = (d, 0) carries the length, so the raw coefficient is 1.
          return perspective(PerspectiveParams<T>{HomPoint<T>(d[0], d[1], d[2], T(0)), ideal_hyperplane<T>(),
                                                  T(1), T(1), MuConvention::Raw});
        }
      },
      es);
}

#define STEREO_INSTANTIATE(T)                                                       \
  template HomMatrix<T> homology<T>(const HomologyParams<T>&);                      \
  template HomMatrix<T> perspective<T>(const PerspectiveParams<T>&);                \
  template HomMatrix<T> singular<T>(const HomPoint<T>&, const HomHyperplane<T>&);   \
  template HomMatrix<T> involutory<T>(const HomPoint<T>&, const HomHyperplane<T>&); \
  template HomMatrix<T> construct<T>(const ElementarySpec<T>&);

STEREO_INSTANTIATE(Rational)
STEREO_INSTANTIATE(double)

#undef STEREO_INSTANTIATE

}  // namespace stereo
