#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <optional>
#include <string>
#include <string_view>

namespace stereo {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

enum class Backend { Rational, Float };

std::string_view backend_name(Backend b);
std::optional<Backend> parse_backend(std::string_view name);

// Predicate tolerance (relative, scaled by operand magnitude) and numerical
// rank threshold (relative to the largest singular value / pivot).
inline constexpr double kEpsRel = 1e-9;
inline constexpr double kEpsRank = 1e-8;

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr Backend backend = Backend::Rational;
  static double to_double(const Rational& v) { return v.convert_to<double>(); }
  static Rational abs(const Rational& v) { return v < 0 ? Rational(-v) : v; }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr Backend backend = Backend::Float;
  static double to_double(double v) { return v; }
  static double abs(double v) { return std::fabs(v); }
};

template <class T>
concept Scalar = requires { ScalarTraits<T>::exact; };

template <Scalar T>
inline constexpr bool is_exact_v = ScalarTraits<T>::exact;

template <Scalar T>
double magnitude(const T& v) {
  return std::fabs(ScalarTraits<T>::to_double(v));
}

/// Zero test: exact on rationals, `|v| <= kEpsRel * scale` on floats.
template <Scalar T>
bool near_zero(const T& v, double scale) {
  if constexpr (is_exact_v<T>) {
    return v == 0;
  } else {
    return std::fabs(v) <= kEpsRel * scale;
  }
}

/// Square root when it stays in the backend: always for floats, only for
/// perfect squares on rationals.
template <Scalar T>
std::optional<T> exact_sqrt(const T& v);

template <>
std::optional<Rational> exact_sqrt<Rational>(const Rational& v);

template <>
inline std::optional<double> exact_sqrt<double>(const double& v) {
  if (v < 0) return std::nullopt;
  return std::sqrt(v);
}

/// Rational literal: "p", "-p/q". Throws std::invalid_argument on junk.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& v);

}  // namespace stereo
