#include "corank2/quad_scalar.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <sstream>

namespace corank2 {

QuadScalar::QuadScalar(const Rational& rational, const Rational& radical, const mpz_class& d)
    : rational_(rational), radical_(radical), d_(d) {
  if (sgn(radical_) != 0) {
    if (sgn(d_) == 0) {
      throw std::invalid_argument("QuadScalar: radical part with d = 0");
    }
    if (sgn(d_) > 0 && mpz_perfect_square_p(d_.get_mpz_t()) != 0) {
      // sqrt(d) is an integer; fold it into the rational part.
      mpz_class root;
      mpz_sqrt(root.get_mpz_t(), d_.get_mpz_t());
      rational_ += radical_ * Rational(root);
      radical_ = 0;
    }
  }
  normalize();
}

void QuadScalar::normalize() {
  rational_.canonicalize();
  radical_.canonicalize();
  if (sgn(radical_) == 0) {
    d_ = 0;
  }
}

void QuadScalar::adopt_extension(const QuadScalar& other) {
  if (other.is_rational()) {
    return;
  }
  if (is_rational()) {
    d_ = other.d_;
    return;
  }
  if (d_ != other.d_) {
    throw FieldMismatch("QuadScalar: operands live in different quadratic extensions (d=" +
                        d_.get_str() + " vs d=" + other.d_.get_str() + ")");
  }
}

QuadScalar QuadScalar::conjugate() const {
  QuadScalar out = *this;
  out.radical_ = -out.radical_;
  return out;
}

Rational QuadScalar::norm() const {
  return rational_ * rational_ - Rational(d_) * radical_ * radical_;
}

QuadScalar QuadScalar::inverse() const {
  if (is_zero()) {
    throw std::domain_error("QuadScalar: division by zero");
  }
  const Rational n = norm();
  QuadScalar out;
  out.rational_ = rational_ / n;
  out.radical_ = -radical_ / n;
  out.d_ = d_;
  out.normalize();
  return out;
}

int QuadScalar::sign() const {
  if (!is_real()) {
    throw std::domain_error("QuadScalar: sign of a non-real value");
  }
  const int sa = sgn(rational_);
  const int sb = sgn(radical_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // a and b*sqrt(d) have opposite signs: the larger magnitude wins.
  const int cmp_sq = cmp(rational_ * rational_, Rational(d_) * radical_ * radical_);
  return cmp_sq > 0 ? sa : sb;
}

double QuadScalar::to_double() const {
  if (!is_real()) {
    throw std::domain_error("QuadScalar: to_double of a non-real value");
  }
  if (is_rational()) return rational_.get_d();
  return rational_.get_d() + radical_.get_d() * std::sqrt(d_.get_d());
}

std::complex<double> QuadScalar::to_complex() const {
  if (is_real()) return {to_double(), 0.0};
  return {rational_.get_d(), radical_.get_d() * std::sqrt(-d_.get_d())};
}

Rational QuadScalar::as_rational() const {
  if (!is_rational()) {
    throw std::domain_error("QuadScalar: value " + to_string() + " is not rational");
  }
  return rational_;
}

QuadScalar& QuadScalar::operator+=(const QuadScalar& rhs) {
  adopt_extension(rhs);
  rational_ += rhs.rational_;
  radical_ += rhs.radical_;
  normalize();
  return *this;
}

QuadScalar& QuadScalar::operator-=(const QuadScalar& rhs) {
  adopt_extension(rhs);
  rational_ -= rhs.rational_;
  radical_ -= rhs.radical_;
  normalize();
  return *this;
}

QuadScalar& QuadScalar::operator*=(const QuadScalar& rhs) {
  if (rhs.is_rational()) {
    rational_ *= rhs.rational_;
    radical_ *= rhs.rational_;
    normalize();
    return *this;
  }
  adopt_extension(rhs);
  const Rational a = rational_ * rhs.rational_ + Rational(d_) * radical_ * rhs.radical_;
  const Rational b = rational_ * rhs.radical_ + radical_ * rhs.rational_;
  rational_ = a;
  radical_ = b;
  normalize();
  return *this;
}

QuadScalar operator-(const QuadScalar& a) {
  QuadScalar out = a;
  out.rational_ = -out.rational_;
  out.radical_ = -out.radical_;
  return out;
}

bool operator==(const QuadScalar& a, const QuadScalar& b) {
  return a.rational_ == b.rational_ && a.radical_ == b.radical_ &&
         (sgn(a.radical_) == 0 || a.d_ == b.d_);
}

std::string QuadScalar::to_string() const {
  if (is_rational()) return rational_to_string(rational_);
  std::ostringstream os;
  if (sgn(rational_) != 0) {
    os << rational_to_string(rational_) << (sgn(radical_) > 0 ? " + " : " - ");
    os << rational_to_string(abs(radical_));
  } else {
    os << rational_to_string(radical_);
  }
  os << "*sqrt(" << d_.get_str() << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QuadScalar& x) { return os << x.to_string(); }

namespace {

// Primes below this bound are divided out when splitting off square factors.
constexpr unsigned long kTrialDivisionBound = 2000;

}  // namespace

SquareSplit split_square(const Rational& q) {
  if (sgn(q) == 0) return {Rational(0), mpz_class(0)};
  // q = n/m = (n*m) / m^2
  mpz_class k = q.get_num() * q.get_den();
  Rational scale(1, q.get_den());
  scale.canonicalize();
  const int sign = sgn(k);
  k = abs(k);

  mpz_class square_part = 1;
  for (unsigned long p = 2; p < kTrialDivisionBound && k > 1; ++p) {
    const mpz_class pp = static_cast<unsigned long>(p * p);
    if (pp > k) break;
    while (mpz_divisible_p(k.get_mpz_t(), pp.get_mpz_t()) != 0) {
      k /= pp;
      square_part *= p;
    }
  }
  if (mpz_perfect_square_p(k.get_mpz_t()) != 0) {
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), k.get_mpz_t());
    square_part *= root;
    k = 1;
  }
  scale *= Rational(square_part);
  return {scale, sign * k};
}

QuadScalar exact_sqrt(const Rational& q) {
  const SquareSplit s = split_square(q);
  if (sgn(s.core) == 0) return QuadScalar(0);
  if (s.core == 1) return QuadScalar(s.scale);
  return QuadScalar(Rational(0), s.scale, s.core);
}

Rational parse_rational(std::string_view text) {
  std::string t(text);
  if (t.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = t.find('/');
  auto valid_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  auto strip_plus = [](std::string s) { return (!s.empty() && s[0] == '+') ? s.substr(1) : s; };
  if (slash == std::string::npos) {
    if (!valid_int(t)) throw std::invalid_argument("invalid rational literal '" + t + "'");
    return Rational(mpz_class(strip_plus(t), 10));
  }
  const std::string num = t.substr(0, slash);
  const std::string den = t.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("invalid rational literal '" + t + "'");
  }
  mpz_class d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + t + "'");
  Rational out(mpz_class(strip_plus(num), 10), d);
  out.canonicalize();
  return out;
}

Rational parse_decimal(std::string_view text) {
  std::string t(text);
  std::size_t pos = 0;
  int sign = 1;
  if (pos < t.size() && (t[pos] == '-' || t[pos] == '+')) {
    if (t[pos] == '-') sign = -1;
    ++pos;
  }
  std::string digits;
  long exponent = 0;
  bool seen_digit = false;
  bool seen_point = false;
  for (; pos < t.size(); ++pos) {
    const char c = t[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_point) --exponent;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw std::invalid_argument("invalid decimal literal '" + t + "'");
  if (pos < t.size()) {
    if (t[pos] != 'e' && t[pos] != 'E') {
      throw std::invalid_argument("invalid decimal literal '" + t + "'");
    }
    const std::string exp_text = t.substr(pos + 1);
    std::size_t used = 0;
    long e = 0;
    try {
      e = std::stol(exp_text, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid decimal exponent in '" + t + "'");
    }
    if (used != exp_text.size()) throw std::invalid_argument("invalid decimal literal '" + t + "'");
    exponent += e;
  }
  if (exponent > 4000 || exponent < -4000) {
    throw std::invalid_argument("decimal exponent out of range in '" + t + "'");
  }
  mpz_class mantissa(digits, 10);
  mpz_class ten_power;
  mpz_ui_pow_ui(ten_power.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Rational out = exponent < 0 ? Rational(mantissa, ten_power) : Rational(mantissa * ten_power);
  out.canonicalize();
  return sign < 0 ? Rational(-out) : out;
}

std::string rational_to_string(const Rational& value) {
  Rational q(value);
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace corank2
