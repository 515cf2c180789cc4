#include "stereohomology/errors.hpp"
#include "stereohomology/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace stereo {

std::string_view backend_name(Backend b) {
  return b == Backend::Rational ? "rational" : "float";
}

std::optional<Backend> parse_backend(std::string_view name) {
  if (name == "rational") return Backend::Rational;
  if (name == "float") return Backend::Float;
  return std::nullopt;
}

template <>
std::optional<Rational> exact_sqrt<Rational>(const Rational& v) {
  if (v < 0) return std::nullopt;
  const Integer num = numerator(v);
  const Integer den = denominator(v);
  const Integer rn = boost::multiprecision::sqrt(num);
  const Integer rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) return std::nullopt;
  return Rational(rn, rd);
}

Rational parse_rational(std::string_view text) {
  // Accept [-+]digits[/digits]; boost would also take hex and whitespace.
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  const std::size_t num_start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_start) throw std::invalid_argument("bad rational literal: " + std::string(text));
  if (i < text.size()) {
    if (text[i] != '/') throw std::invalid_argument("bad rational literal: " + std::string(text));
    ++i;
    const std::size_t den_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_start || i != text.size())
      throw std::invalid_argument("bad rational literal: " + std::string(text));
  }
  std::string s(text);
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    const Integer den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    return Rational(Integer(s.substr(0, slash)), den);
  }
  return Rational(Integer(s));
}

std::string format_rational(const Rational& v) {
  return v.str();
}

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidElement: return "InvalidElement";
    case ErrorCode::DegenerateNormal: return "DegenerateNormal";
    case ErrorCode::SkewLines: return "SkewLines";
    case ErrorCode::CoincidentLines: return "CoincidentLines";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::InvalidTransform: return "InvalidTransform";
    case ErrorCode::CenterOnHyperplane: return "CenterOnHyperplane";
    case ErrorCode::CenterOffHyperplane: return "CenterOffHyperplane";
    case ErrorCode::ZeroLambda: return "ZeroLambda";
    case ErrorCode::ZeroMu: return "ZeroMu";
    case ErrorCode::IrrationalNormalizer: return "IrrationalNormalizer";
    case ErrorCode::SpecViolation: return "SpecViolation";
    case ErrorCode::NotStereohomology: return "NotStereohomology";
    case ErrorCode::IdentityAmbiguous: return "IdentityAmbiguous";
    case ErrorCode::InvalidConfiguration: return "InvalidConfiguration";
    case ErrorCode::SingularDelta: return "SingularDelta";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::NotElementary: return "NotElementary";
    case ErrorCode::DegenerateSample: return "DegenerateSample";
    case ErrorCode::ParallelPlanes: return "ParallelPlanes";
    case ErrorCode::IdealPlane: return "IdealPlane";
    case ErrorCode::ZeroDirection: return "ZeroDirection";
  }
  return "Unknown";
}

}  // namespace stereo
