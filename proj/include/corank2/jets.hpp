#ifndef CORANK2_JETS_HPP
#define CORANK2_JETS_HPP

// Truncated power series in one and two variables.
//
// Every jet carries its truncation order N and stores all coefficients of
// total degree <= N densely (at most 28 entries at N = 6). Arithmetic
// re-truncates at N; operands must share the same order.

#include <algorithm>
#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "corank2/scalar_traits.hpp"

namespace corank2 {

class JetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void require_same_order(int a, int b, const char* where) {
  if (a != b) {
    throw JetError(std::string(where) + ": truncation orders differ (" + std::to_string(a) +
                   " vs " + std::to_string(b) + ")");
  }
}

inline Rational factorial(int n) {
  mpz_class f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return Rational(f);
}

inline Rational binomial(int n, int k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(b);
}

}  // namespace detail

template <class S>
using Vec2 = std::array<S, 2>;

// ---------------------------------------------------------------------------
// Univariate series c_0 + c_1 t + ... + c_N t^N.

template <class S>
class Series1 {
 public:
  explicit Series1(int order) : order_(order), c_(static_cast<std::size_t>(order + 1)) {
    if (order < 0) throw JetError("Series1: negative order");
  }
  Series1(int order, std::vector<S> coefficients) : Series1(order) {
    if (static_cast<int>(coefficients.size()) > order + 1) {
      throw JetError("Series1: more coefficients than the truncation order allows");
    }
    for (std::size_t k = 0; k < coefficients.size(); ++k) c_[k] = std::move(coefficients[k]);
  }

  int order() const { return order_; }
  const S& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
  S& operator[](int k) { return c_.at(static_cast<std::size_t>(k)); }
  const std::vector<S>& coefficients() const { return c_; }

  Series1 derivative() const {
    Series1 out(order_ > 0 ? order_ - 1 : 0);
    for (int k = 1; k <= order_; ++k) {
      out[k - 1] = c_[static_cast<std::size_t>(k)] * ScalarTraits<S>::from_int(k);
    }
    return out;
  }

  Series1 truncated(int n) const {
    if (n > order_) throw JetError("Series1::truncated: cannot raise the order");
    Series1 out(n);
    for (int k = 0; k <= n; ++k) out[k] = c_[static_cast<std::size_t>(k)];
    return out;
  }

  /// t -> -t.
  Series1 reversed() const {
    Series1 out = *this;
    for (int k = 1; k <= order_; k += 2) out[k] = -out[k];
    return out;
  }

  friend Series1 operator+(Series1 a, const Series1& b) {
    detail::require_same_order(a.order_, b.order_, "Series1 +");
    for (int k = 0; k <= a.order_; ++k) a[k] += b[k];
    return a;
  }
  friend Series1 operator-(Series1 a, const Series1& b) {
    detail::require_same_order(a.order_, b.order_, "Series1 -");
    for (int k = 0; k <= a.order_; ++k) a[k] -= b[k];
    return a;
  }
  friend Series1 operator-(Series1 a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Series1 operator*(const S& s, Series1 a) {
    for (auto& x : a.c_) x *= s;
    return a;
  }
  friend Series1 operator*(const Series1& a, const Series1& b) {
    detail::require_same_order(a.order_, b.order_, "Series1 *");
    Series1 out(a.order_);
    for (int i = 0; i <= a.order_; ++i) {
      if (ScalarTraits<S>::is_zero(a[i])) continue;
      for (int j = 0; i + j <= a.order_; ++j) {
        if (ScalarTraits<S>::is_zero(b[j])) continue;
        out[i + j] += a[i] * b[j];
      }
    }
    return out;
  }
  friend bool operator==(const Series1& a, const Series1& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
  }

 private:
  int order_;
  std::vector<S> c_;
};

// ---------------------------------------------------------------------------
// Bivariate jet: sum of c_ij u^i v^j over i + j <= N.

template <class S>
class Jet2 {
 public:
  explicit Jet2(int order) : order_(order), c_(size_for(order)) {
    if (order < 0) throw JetError("Jet2: negative order");
  }

  static Jet2 constant(int order, const S& value) {
    Jet2 out(order);
    out.coeff(0, 0) = value;
    return out;
  }
  static Jet2 monomial(int order, int i, int j, const S& value) {
    Jet2 out(order);
    if (i + j <= order) out.coeff(i, j) = value;
    return out;
  }
  static Jet2 u(int order) { return monomial(order, 1, 0, ScalarTraits<S>::from_int(1)); }
  static Jet2 v(int order) { return monomial(order, 0, 1, ScalarTraits<S>::from_int(1)); }

  int order() const { return order_; }

  const S& coeff(int i, int j) const { return c_.at(index(i, j)); }
  S& coeff(int i, int j) { return c_.at(index(i, j)); }
  /// Coefficient, or zero when i + j exceeds the order.
  S coeff_or_zero(int i, int j) const {
    if (i < 0 || j < 0 || i + j > order_) return S{};
    return c_[index(i, j)];
  }

  Jet2 truncated(int n) const {
    if (n > order_) throw JetError("Jet2::truncated: cannot raise the order");
    Jet2 out(n);
    for (int d = 0; d <= n; ++d)
      for (int j = 0; j <= d; ++j) out.coeff(d - j, j) = coeff(d - j, j);
    return out;
  }

  /// Same coefficients at a higher order, padded with zeros. Only meaningful
  /// when the caller knows the omitted terms are irrelevant.
  Jet2 padded(int n) const {
    if (n < order_) throw JetError("Jet2::padded: cannot lower the order");
    Jet2 out(n);
    for (int d = 0; d <= order_; ++d)
      for (int j = 0; j <= d; ++j) out.coeff(d - j, j) = coeff(d - j, j);
    return out;
  }

  Jet2 homogeneous_part(int degree) const {
    Jet2 out(order_);
    if (degree < 0 || degree > order_) return out;
    for (int j = 0; j <= degree; ++j) out.coeff(degree - j, j) = coeff(degree - j, j);
    return out;
  }

  /// Terms of degree >= degree.
  Jet2 tail_from(int degree) const {
    Jet2 out = *this;
    for (int d = 0; d < degree && d <= order_; ++d)
      for (int j = 0; j <= d; ++j) out.coeff(d - j, j) = S{};
    return out;
  }

  /// Lowest degree carrying a nonzero coefficient, or order + 1 for the zero jet.
  int valuation() const {
    for (int d = 0; d <= order_; ++d)
      for (int j = 0; j <= d; ++j)
        if (!ScalarTraits<S>::is_zero(coeff(d - j, j))) return d;
    return order_ + 1;
  }
  bool is_zero() const { return valuation() > order_; }

  /// Formal partial derivative; the result has order N - 1.
  Jet2 partial_u() const {
    Jet2 out(order_ > 0 ? order_ - 1 : 0);
    for (int d = 1; d <= order_; ++d)
      for (int j = 0; j < d; ++j) {
        const int i = d - j;
        out.coeff(i - 1, j) = coeff(i, j) * ScalarTraits<S>::from_int(i);
      }
    return out;
  }
  Jet2 partial_v() const {
    Jet2 out(order_ > 0 ? order_ - 1 : 0);
    for (int d = 1; d <= order_; ++d)
      for (int j = 1; j <= d; ++j) {
        const int i = d - j;
        out.coeff(i, j - 1) = coeff(i, j) * ScalarTraits<S>::from_int(j);
      }
    return out;
  }

  template <class F>
  auto map(F&& fn) const -> Jet2<decltype(fn(std::declval<const S&>()))> {
    Jet2<decltype(fn(std::declval<const S&>()))> out(order_);
    for (int d = 0; d <= order_; ++d)
      for (int j = 0; j <= d; ++j) out.coeff(d - j, j) = fn(coeff(d - j, j));
    return out;
  }

  const std::vector<S>& raw() const { return c_; }

  Jet2& operator+=(const Jet2& b) {
    detail::require_same_order(order_, b.order_, "Jet2 +");
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += b.c_[k];
    return *this;
  }
  Jet2& operator-=(const Jet2& b) {
    detail::require_same_order(order_, b.order_, "Jet2 -");
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= b.c_[k];
    return *this;
  }
  Jet2& operator*=(const S& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }

  friend Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
  friend Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
  friend Jet2 operator-(Jet2 a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Jet2 operator*(const S& s, Jet2 a) { return a *= s; }
  friend Jet2 operator*(const Jet2& a, const Jet2& b) {
    detail::require_same_order(a.order_, b.order_, "Jet2 *");
    const int n = a.order_;
    Jet2 out(n);
    for (int d1 = a.valuation(); d1 <= n; ++d1) {
      for (int j1 = 0; j1 <= d1; ++j1) {
        const S& x = a.coeff(d1 - j1, j1);
        if (ScalarTraits<S>::is_zero(x)) continue;
        for (int d2 = 0; d1 + d2 <= n; ++d2) {
          for (int j2 = 0; j2 <= d2; ++j2) {
            const S& y = b.coeff(d2 - j2, j2);
            if (ScalarTraits<S>::is_zero(y)) continue;
            out.coeff(d1 - j1 + d2 - j2, j1 + j2) += x * y;
          }
        }
      }
    }
    return out;
  }
  friend bool operator==(const Jet2& a, const Jet2& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
  }

 private:
  static std::size_t size_for(int order) {
    return order < 0 ? 0 : static_cast<std::size_t>((order + 1) * (order + 2) / 2);
  }
  std::size_t index(int i, int j) const {
    if (i < 0 || j < 0 || i + j > order_) {
      throw JetError("Jet2: monomial u^" + std::to_string(i) + " v^" + std::to_string(j) +
                     " exceeds order " + std::to_string(order_));
    }
    const int d = i + j;
    return static_cast<std::size_t>(d * (d + 1) / 2 + j);
  }

  int order_;
  std::vector<S> c_;
};

// ---------------------------------------------------------------------------
// Map and curve jets. Both vanish at the origin.

template <class S>
struct MapJet2 {
  Jet2<S> first;
  Jet2<S> second;

  MapJet2(Jet2<S> f1, Jet2<S> f2) : first(std::move(f1)), second(std::move(f2)) {
    detail::require_same_order(first.order(), second.order(), "MapJet2");
    if (!ScalarTraits<S>::is_zero(first.coeff(0, 0)) ||
        !ScalarTraits<S>::is_zero(second.coeff(0, 0))) {
      throw JetError("MapJet2: components must vanish at the origin");
    }
  }
  static MapJet2 identity(int order) { return {Jet2<S>::u(order), Jet2<S>::v(order)}; }

  int order() const { return first.order(); }
  const Jet2<S>& operator[](int k) const { return k == 0 ? first : second; }

  MapJet2 truncated(int n) const { return {first.truncated(n), second.truncated(n)}; }
  template <class F>
  auto map(F&& fn) const {
    using T = decltype(fn(std::declval<const S&>()));
    return MapJet2<T>(first.map(fn), second.map(fn));
  }
  friend bool operator==(const MapJet2& a, const MapJet2& b) {
    return a.first == b.first && a.second == b.second;
  }
};

template <class S>
struct CurveJet {
  Series1<S> x;
  Series1<S> y;

  CurveJet(Series1<S> cx, Series1<S> cy) : x(std::move(cx)), y(std::move(cy)) {
    detail::require_same_order(x.order(), y.order(), "CurveJet");
    if (!ScalarTraits<S>::is_zero(x[0]) || !ScalarTraits<S>::is_zero(y[0])) {
      throw JetError("CurveJet: components must vanish at t = 0");
    }
  }
  int order() const { return x.order(); }
  /// k-th derivative at 0.
  Vec2<S> derivative_at_zero(int k) const {
    const S scale = ScalarTraits<S>::from_rational(detail::factorial(k));
    return {x[k] * scale, y[k] * scale};
  }
  CurveJet reversed() const { return {x.reversed(), y.reversed()}; }
};

// ---------------------------------------------------------------------------
// Composition.

/// outer(inner(u, v)) truncated at N. inner must vanish at the origin.
template <class S>
Jet2<S> compose(const Jet2<S>& outer, const MapJet2<S>& inner) {
  detail::require_same_order(outer.order(), inner.order(), "compose");
  const int n = outer.order();
  std::vector<Jet2<S>> pow_v;
  pow_v.reserve(static_cast<std::size_t>(n + 1));
  pow_v.push_back(Jet2<S>::constant(n, ScalarTraits<S>::from_int(1)));
  for (int k = 1; k <= n; ++k) pow_v.push_back(pow_v.back() * inner.second);

  // Horner in the first variable: sum_i g1^i * (sum_j c_ij g2^j).
  Jet2<S> result(n);
  for (int i = n; i >= 0; --i) {
    Jet2<S> row(n);
    for (int j = 0; i + j <= n; ++j) {
      const S& c = outer.coeff(i, j);
      if (ScalarTraits<S>::is_zero(c)) continue;
      row += c * pow_v[static_cast<std::size_t>(j)];
    }
    result = (i == n) ? row : result * inner.first + row;
  }
  return result;
}

template <class S>
MapJet2<S> compose(const MapJet2<S>& outer, const MapJet2<S>& inner) {
  return {compose(outer.first, inner), compose(outer.second, inner)};
}

/// outer(c(t)) for a curve jet c vanishing at 0.
template <class S>
Series1<S> compose(const Jet2<S>& outer, const CurveJet<S>& c) {
  detail::require_same_order(outer.order(), c.order(), "compose(curve)");
  const int n = outer.order();
  std::vector<Series1<S>> pow_y;
  pow_y.push_back(Series1<S>(n, {ScalarTraits<S>::from_int(1)}));
  for (int k = 1; k <= n; ++k) pow_y.push_back(pow_y.back() * c.y);
  Series1<S> result(n);
  for (int i = n; i >= 0; --i) {
    Series1<S> row(n);
    for (int j = 0; i + j <= n; ++j) {
      const S& coeff = outer.coeff(i, j);
      if (ScalarTraits<S>::is_zero(coeff)) continue;
      row = row + coeff * pow_y[static_cast<std::size_t>(j)];
    }
    result = (i == n) ? row : result * c.x + row;
  }
  return result;
}

template <class S>
CurveJet<S> compose(const MapJet2<S>& f, const CurveJet<S>& c) {
  return {compose(f.first, c), compose(f.second, c)};
}

/// Linear change of variables (u, v) -> (m00 u + m01 v, m10 u + m11 v) as a map jet.
template <class S>
MapJet2<S> linear_map(int order, const S& m00, const S& m01, const S& m10, const S& m11) {
  Jet2<S> a(order), b(order);
  if (order >= 1) {
    a.coeff(1, 0) = m00;
    a.coeff(0, 1) = m01;
    b.coeff(1, 0) = m10;
    b.coeff(0, 1) = m11;
  }
  return {std::move(a), std::move(b)};
}

// ---------------------------------------------------------------------------
// Elementary functions.

enum class ElementaryKind { Sin, Cos, Sqrt, Inverse };

/// sum_k coeffs[k] * x^k truncated at x's order; x must vanish at the origin.
template <class S>
Jet2<S> apply_series(const std::vector<S>& coeffs, const Jet2<S>& x) {
  if (!ScalarTraits<S>::is_zero(x.coeff(0, 0))) {
    throw JetError("apply_series: argument must vanish at the origin");
  }
  const int n = x.order();
  Jet2<S> result(n);
  const int top = std::min<int>(n, static_cast<int>(coeffs.size()) - 1);
  for (int k = top; k >= 0; --k) {
    result = result * x + Jet2<S>::constant(n, coeffs[static_cast<std::size_t>(k)]);
  }
  return result;
}

template <class S>
Jet2<S> elementary(ElementaryKind kind, const Jet2<S>& arg) {
  using T = ScalarTraits<S>;
  const int n = arg.order();
  std::vector<S> coeffs(static_cast<std::size_t>(n + 1));
  switch (kind) {
    case ElementaryKind::Sin:
    case ElementaryKind::Cos: {
      if (!T::is_zero(arg.coeff(0, 0))) {
        throw JetError("elementary: sin/cos need an argument vanishing at the origin");
      }
      const int parity = kind == ElementaryKind::Sin ? 1 : 0;
      for (int k = parity; k <= n; k += 2) {
        const int sign = ((k - parity) / 2) % 2 == 0 ? 1 : -1;
        coeffs[static_cast<std::size_t>(k)] =
            T::from_rational(Rational(sign) / detail::factorial(k));
      }
      return apply_series(coeffs, arg);
    }
    case ElementaryKind::Inverse:
    case ElementaryKind::Sqrt: {
      const S a0 = arg.coeff(0, 0);
      if (T::is_zero(a0)) throw JetError("elementary: sqrt/inverse need a unit constant term");
      S lead;
      if (kind == ElementaryKind::Sqrt) {
        const auto root = T::sqrt(a0);
        if (!root) {
          throw JetError("elementary: constant term " + T::to_string(a0) +
                         " has no square root in the active field");
        }
        lead = *root;
        // sqrt(1 + x) = sum binom(1/2, k) x^k
        Rational b(1);
        for (int k = 0; k <= n; ++k) {
          coeffs[static_cast<std::size_t>(k)] = T::from_rational(b);
          b *= (Rational(1, 2) - Rational(k)) / Rational(k + 1);
        }
      } else {
        lead = T::from_int(1) / a0;
        for (int k = 0; k <= n; ++k) coeffs[static_cast<std::size_t>(k)] = T::from_int(k % 2 == 0 ? 1 : -1);
      }
      Jet2<S> x = (T::from_int(1) / a0) * arg;
      x.coeff(0, 0) = S{};
      return lead * apply_series(coeffs, x);
    }
  }
  throw JetError("elementary: unknown kind");
}

// ---------------------------------------------------------------------------
// Directional derivatives at the origin.

/// Value at 0 of eta^k f for the constant vector field eta:
/// sum_m binom(k,m) eta1^m eta2^(k-m) d^k f / du^m dv^(k-m) (0).
template <class S>
Vec2<S> directional_iterate(const MapJet2<S>& f, const Vec2<S>& eta, int k) {
  using T = ScalarTraits<S>;
  if (k > f.order()) {
    throw JetError("directional_iterate: k = " + std::to_string(k) + " exceeds order " +
                   std::to_string(f.order()));
  }
  if (k < 0) throw JetError("directional_iterate: negative k");
  // d^k f/du^m dv^(k-m)(0) = m! (k-m)! c_{m,k-m}, and binom(k,m) m! (k-m)! = k!.
  Vec2<S> out{S{}, S{}};
  std::vector<S> pow1(static_cast<std::size_t>(k + 1)), pow2(static_cast<std::size_t>(k + 1));
  pow1[0] = pow2[0] = T::from_int(1);
  for (int m = 1; m <= k; ++m) {
    pow1[static_cast<std::size_t>(m)] = pow1[static_cast<std::size_t>(m - 1)] * eta[0];
    pow2[static_cast<std::size_t>(m)] = pow2[static_cast<std::size_t>(m - 1)] * eta[1];
  }
  for (int m = 0; m <= k; ++m) {
    const S w = pow1[static_cast<std::size_t>(m)] * pow2[static_cast<std::size_t>(k - m)];
    if (T::is_zero(w)) continue;
    out[0] += w * f.first.coeff(m, k - m);
    out[1] += w * f.second.coeff(m, k - m);
  }
  const S scale = T::from_rational(detail::factorial(k));
  out[0] *= scale;
  out[1] *= scale;
  return out;
}

/// A vector field xi = a d/du + b d/dv given by jets; not required to vanish at 0.
template <class S>
struct VectorFieldJet {
  Jet2<S> a;
  Jet2<S> b;
  static VectorFieldJet constant(int order, const Vec2<S>& eta) {
    return {Jet2<S>::constant(order, eta[0]), Jet2<S>::constant(order, eta[1])};
  }
};

/// xi g = a g_u + b g_v; the result has order N - 1.
template <class S>
Jet2<S> apply_vector_field(const VectorFieldJet<S>& xi, const Jet2<S>& g) {
  const int n = g.order() - 1;
  if (n < 0) throw JetError("apply_vector_field: order-0 jet");
  return xi.a.truncated(n) * g.partial_u() + xi.b.truncated(n) * g.partial_v();
}

/// Value at 0 of xi^k f for a (possibly non-constant) vector field.
template <class S>
Vec2<S> vector_field_iterate(const MapJet2<S>& f, const VectorFieldJet<S>& xi, int k) {
  if (k > f.order()) throw JetError("vector_field_iterate: k exceeds the truncation order");
  Jet2<S> g1 = f.first, g2 = f.second;
  for (int step = 0; step < k; ++step) {
    g1 = apply_vector_field(xi, g1);
    g2 = apply_vector_field(xi, g2);
  }
  return {g1.coeff(0, 0), g2.coeff(0, 0)};
}

template <class S>
S det2(const Vec2<S>& a, const Vec2<S>& b) {
  return a[0] * b[1] - a[1] * b[0];
}

// ---------------------------------------------------------------------------
// Numeric helpers.

inline double evaluate(const Jet2<double>& g, double u, double v) {
  // Horner over total degree: sum_d sum_j c u^(d-j) v^j.
  const int n = g.order();
  double result = 0.0;
  for (int d = n; d >= 0; --d) {
    double homogeneous = 0.0;
    double vp = 1.0;
    for (int j = 0; j <= d; ++j) {
      double up = 1.0;
      for (int i = 0; i < d - j; ++i) up *= u;
      homogeneous += g.coeff(d - j, j) * up * vp;
      vp *= v;
    }
    result += homogeneous;
  }
  return result;
}

inline Vec2<double> evaluate(const MapJet2<double>& f, double u, double v) {
  return {evaluate(f.first, u, v), evaluate(f.second, u, v)};
}

inline Jet2<double> to_double(const Jet2<QuadScalar>& g) {
  return g.map([](const QuadScalar& x) { return x.to_double(); });
}
inline MapJet2<double> to_double(const MapJet2<QuadScalar>& f) {
  return f.map([](const QuadScalar& x) { return x.to_double(); });
}
inline MapJet2<std::complex<double>> to_complex(const MapJet2<QuadScalar>& f) {
  return f.map([](const QuadScalar& x) { return x.to_complex(); });
}
inline MapJet2<std::complex<double>> to_complex(const MapJet2<double>& f) {
  return f.map([](const double& x) { return std::complex<double>(x, 0.0); });
}

}  // namespace corank2

#endif  // CORANK2_JETS_HPP
