#ifndef CORANK2_SCALAR_TRAITS_HPP
#define CORANK2_SCALAR_TRAITS_HPP

#include <cmath>
#include <complex>
#include <optional>
#include <sstream>
#include <string>

#include "corank2/quad_scalar.hpp"

namespace corank2 {

// Per-scalar hooks used by the jet templates. Exact scalars decide zero
// exactly; floating scalars use an absolute tolerance supplied by the caller.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<QuadScalar> {
  static constexpr bool exact = true;
  static QuadScalar from_rational(const Rational& q) { return QuadScalar(q); }
  static QuadScalar from_int(long v) { return QuadScalar(v); }
  static bool is_zero(const QuadScalar& x) { return x.is_zero(); }
  static bool near_zero(const QuadScalar& x, double /*tolerance*/) { return x.is_zero(); }
  static double magnitude(const QuadScalar& x) { return std::abs(x.to_complex()); }
  static std::complex<double> to_complex(const QuadScalar& x) { return x.to_complex(); }
  /// Square root of a rational value, possibly in Q(sqrt core); nullopt for irrational input.
  static std::optional<QuadScalar> sqrt(const QuadScalar& x) {
    if (!x.is_rational()) return std::nullopt;
    return exact_sqrt(x.rational_part());
  }
  static std::string to_string(const QuadScalar& x) { return x.to_string(); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static double from_rational(const Rational& q) { return q.get_d(); }
  static double from_int(long v) { return static_cast<double>(v); }
  static bool is_zero(double x) { return x == 0.0; }
  static bool near_zero(double x, double tolerance) { return std::abs(x) <= tolerance; }
  static double magnitude(double x) { return std::abs(x); }
  static std::complex<double> to_complex(double x) { return {x, 0.0}; }
  static std::optional<double> sqrt(double x) {
    if (x < 0.0) return std::nullopt;
    return std::sqrt(x);
  }
  static std::string to_string(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
  }
};

template <>
struct ScalarTraits<std::complex<double>> {
  using C = std::complex<double>;
  static constexpr bool exact = false;
  static C from_rational(const Rational& q) { return {q.get_d(), 0.0}; }
  static C from_int(long v) { return {static_cast<double>(v), 0.0}; }
  static bool is_zero(const C& x) { return x == C(0.0, 0.0); }
  static bool near_zero(const C& x, double tolerance) { return std::abs(x) <= tolerance; }
  static double magnitude(const C& x) { return std::abs(x); }
  static C to_complex(const C& x) { return x; }
  static std::optional<C> sqrt(const C& x) { return std::sqrt(x); }
  static std::string to_string(const C& x) {
    std::ostringstream os;
    os.precision(17);
    os << x.real();
    if (x.imag() != 0.0) os << (x.imag() < 0 ? " - " : " + ") << std::abs(x.imag()) << "i";
    return os.str();
  }
};

}  // namespace corank2

#endif  // CORANK2_SCALAR_TRAITS_HPP
