#pragma once

#include "stereohomology/projective.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace stereo {

/// Points X1..X4, center S and images Y1..Y4, with S on every line XiYi.
template <Scalar T>
struct DesarguesConfig {
  std::array<HomPoint<T>, 4> x;
  HomPoint<T> s;
  std::array<HomPoint<T>, 4> y;
};

template <Scalar T>
struct EdgeIntersection {
  int i = 0;  // 1-based indices of the edge pair XiXj / YiYj
  int j = 0;
  std::optional<HomPoint<T>> point;
  std::string status;  // "ok", "CoincidentLines", "SkewLines", "InvalidElement"
};

template <Scalar T>
struct DesarguesReport {
  bool valid = false;
  std::vector<std::string> violated;
  std::vector<EdgeIntersection<T>> intersections;  // the six pairs, (1,2) .. (3,4)
  int intersection_rank = 0;                       // rank of the defined points
  bool degenerate = false;                         // some intersection undefined
};

/// Checks the configuration invariants and meets corresponding edges. Never
/// throws for well-formed points; every failure is listed in the report.
template <Scalar T>
DesarguesReport<T> verify_configuration(const DesarguesConfig<T>& cfg);

/// k * [Y_j * D'_j] * [X_j * D_j]^-1 with k = 1, where D_j (D'_j) is det of
/// the X (Y) stack with column j replaced by S.
template <Scalar T>
HomMatrix<T> construct_cramer(const DesarguesConfig<T>& cfg);

/// Solves the 20-unknown system that maps the reference frame
/// e1..e4, (1,1,1,1) to X1..X4, S (and likewise to Y1..Y4, S), then
/// composes the two frame maps.
template <Scalar T>
HomMatrix<T> construct_linear_system(const DesarguesConfig<T>& cfg);

/// The 20x20 coefficient matrix and right-hand side for points a, b, c, d, s
/// with rho_1 fixed at 1. Unknowns: t11, t21, t31, t41, t12, ..., t44,
/// rho_2, rho_3, rho_4, rho_5.
template <Scalar T>
std::pair<Dense<T>, std::vector<T>> frame_system(const std::array<HomPoint<T>, 4>& pts, const HomPoint<T>& s);

/// Builds Yi = T * Xi with S the center of T.
template <Scalar T>
DesarguesConfig<T> synthesize_configuration(const HomMatrix<T>& t, const std::array<HomPoint<T>, 4>& x);

}  // namespace stereo
