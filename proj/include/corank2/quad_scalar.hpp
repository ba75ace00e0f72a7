#ifndef CORANK2_QUAD_SCALAR_HPP
#define CORANK2_QUAD_SCALAR_HPP

#include <complex>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace corank2 {

using Rational = mpq_class;

/// Raised when two values from different quadratic extensions meet.
class FieldMismatch : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/**
 * Exact element a + b*sqrt(d) of Q(sqrt d).
 *
 * d is an integer that is not a rational square (d < 0 encodes the complex
 * case, sqrt(d) = i*sqrt(|d|)). A value with b == 0 is rational and carries
 * no extension; it combines freely with values of any extension. Two values
 * with b != 0 and different d cannot be combined.
 */
class QuadScalar {
 public:
  QuadScalar() = default;
  QuadScalar(long value) : rational_(value) {}  // NOLINT: implicit by design of a numeric type
  QuadScalar(const Rational& value) : rational_(value) {}  // NOLINT
  /// rational + radical * sqrt(d). d must not be a rational square unless radical == 0.
  QuadScalar(const Rational& rational, const Rational& radical, const mpz_class& d);

  const Rational& rational_part() const { return rational_; }
  const Rational& radical_part() const { return radical_; }
  /// 0 for rational values.
  const mpz_class& discriminant() const { return d_; }

  bool is_zero() const { return sgn(rational_) == 0 && sgn(radical_) == 0; }
  bool is_rational() const { return sgn(radical_) == 0; }
  bool is_real() const { return is_rational() || sgn(d_) > 0; }

  QuadScalar conjugate() const;
  /// a^2 - d b^2, the norm down to Q.
  Rational norm() const;
  QuadScalar inverse() const;

  /// Sign of a real value; throws for non-real values.
  int sign() const;
  double to_double() const;
  std::complex<double> to_complex() const;
  Rational as_rational() const;

  QuadScalar& operator+=(const QuadScalar& rhs);
  QuadScalar& operator-=(const QuadScalar& rhs);
  QuadScalar& operator*=(const QuadScalar& rhs);
  QuadScalar& operator/=(const QuadScalar& rhs) { return *this *= rhs.inverse(); }

  friend QuadScalar operator+(QuadScalar a, const QuadScalar& b) { return a += b; }
  friend QuadScalar operator-(QuadScalar a, const QuadScalar& b) { return a -= b; }
  friend QuadScalar operator*(QuadScalar a, const QuadScalar& b) { return a *= b; }
  friend QuadScalar operator/(QuadScalar a, const QuadScalar& b) { return a /= b; }
  friend QuadScalar operator-(const QuadScalar& a);
  friend bool operator==(const QuadScalar& a, const QuadScalar& b);

  /// "p/q", or "a + b*sqrt(d)" when irrational.
  std::string to_string() const;

 private:
  void adopt_extension(const QuadScalar& other);
  void normalize();

  Rational rational_{0};
  Rational radical_{0};
  mpz_class d_{0};
};

std::ostream& operator<<(std::ostream& os, const QuadScalar& x);

/// q = scale^2 * core with core an integer that is not a perfect square
/// (core == 1 when q is a rational square, core == 0 when q == 0).
struct SquareSplit {
  Rational scale;
  mpz_class core;
};
SquareSplit split_square(const Rational& q);

/// sqrt(q) as an element of Q(sqrt core).
QuadScalar exact_sqrt(const Rational& q);

/// Parses "p", "p/q" or "-p/q" exactly; throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);
/// Parses a decimal literal ("1.25", "-3e-2") into the exact rational it denotes.
Rational parse_decimal(std::string_view text);
std::string rational_to_string(const Rational& q);

}  // namespace corank2

#endif  // CORANK2_QUAD_SCALAR_HPP
