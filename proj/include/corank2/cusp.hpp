#ifndef CORANK2_CUSP_HPP
#define CORANK2_CUSP_HPP

// 3/2-cusps of plane curves and the images of the singular branches.

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "corank2/classify.hpp"
#include "corank2/jets.hpp"

namespace corank2 {

enum class CuspStatus {
  Cusp,
  RegularPoint,               // c'(0) != 0
  VanishingSecondDerivative,  // c''(0) == 0
  VanishingDeterminant,       // det(c''(0), c'''(0)) == 0
};

std::string to_string(CuspStatus s);

namespace detail {
inline double as_double(const QuadScalar& x) { return x.to_double(); }
inline double as_double(double x) { return x; }

template <class S>
int sign_of(const S& x) {
  if constexpr (ScalarTraits<S>::exact) {
    return x.sign();
  } else {
    return (x > 0) - (x < 0);
  }
}
}  // namespace detail

template <class S>
struct CuspData {
  CuspStatus status = CuspStatus::VanishingDeterminant;
  bool is_cusp = false;
  Vec2<S> first, second, third;  // c'(0), c''(0), c'''(0)
  /// det(c''(0), c'''(0)) and |c''(0)|^2: the exact data behind kappa.
  S det;
  S second_norm_sq;
  /// det / |c''|^(5/2); set only for cusps.
  std::optional<double> kappa;
  /// Unit vector along c''(0) (the cuspidal direction); zero when c''(0) = 0.
  Vec2<double> direction{0.0, 0.0};
};

template <class S>
CuspData<S> curve_cusp_test(const CurveJet<S>& c, double tolerance = 1e-12) {
  using T = ScalarTraits<S>;
  if (c.order() < 3) throw JetError("curve_cusp_test: curve order below 3");
  CuspData<S> out;
  out.first = c.derivative_at_zero(1);
  out.second = c.derivative_at_zero(2);
  out.third = c.derivative_at_zero(3);
  out.det = det2(out.second, out.third);
  out.second_norm_sq = out.second[0] * out.second[0] + out.second[1] * out.second[1];

  const double n2 = detail::as_double(out.second_norm_sq);
  if (n2 > 0.0) {
    const double n = std::sqrt(n2);
    out.direction = {detail::as_double(out.second[0]) / n, detail::as_double(out.second[1]) / n};
  }
  if (!T::near_zero(out.first[0], tolerance) || !T::near_zero(out.first[1], tolerance)) {
    out.status = CuspStatus::RegularPoint;
  } else if (T::near_zero(out.second[0], tolerance) && T::near_zero(out.second[1], tolerance)) {
    out.status = CuspStatus::VanishingSecondDerivative;
  } else if (T::near_zero(out.det, tolerance)) {
    out.status = CuspStatus::VanishingDeterminant;
  } else {
    out.status = CuspStatus::Cusp;
    out.is_cusp = true;
    out.kappa = detail::as_double(out.det) / std::pow(n2, 1.25);
  }
  return out;
}

template <class S>
struct BranchPair {
  CurveJet<S> first;
  CurveJet<S> second;
};

namespace detail {

// Solves lam(s, g(s)) = 0 for g = O(s^2), where lam = c*s*t + O(3).
template <class S>
Series1<S> solve_graph(const Jet2<S>& lam, bool along_first) {
  const int m = lam.order();
  const S c = lam.coeff(1, 1);
  Series1<S> g(m);
  Series1<S> s(m);
  if (m >= 1) s[1] = ScalarTraits<S>::from_int(1);
  for (int k = 3; k <= m; ++k) {
    const CurveJet<S> curve = along_first ? CurveJet<S>(s, g) : CurveJet<S>(g, s);
    const Series1<S> r = compose(lam, curve);
    g[k - 1] -= r[k] / c;
  }
  return g;
}

}  // namespace detail

/**
 * The two branches of lambda^{-1}(0) through an index-1 critical point.
 *
 * After the linear change (s, t) -> s*eta1 + t*eta2 the identifier reads
 * c*s*t + O(3); each branch is solved as a graph over its own axis, degree by
 * degree, and mapped back, so gamma_i'(0) = eta_i. Coefficients are determined
 * through degree order(lambda) - 1; higher ones are zero.
 */
template <class S>
BranchPair<S> branch_curves(const Identifier<S>& id, const QuadricRoots<S>& roots) {
  if (roots.complex_pair) {
    throw DegenerateHessianError("branch_curves: definite Hessian has no real branches");
  }
  const Jet2<S>& lam = id.lambda;
  const int m = lam.order();
  if (m < 2) throw JetError("branch_curves: identifier order below 2");
  const Vec2<S>& e1 = roots.eta1;
  const Vec2<S>& e2 = roots.eta2;
  const Jet2<S> adapted = compose(lam, linear_map(m, e1[0], e2[0], e1[1], e2[1]));
  if (ScalarTraits<S>::is_zero(adapted.coeff(1, 1))) {
    throw DegenerateHessianError("branch_curves: degenerate Hessian");
  }
  const int n = m + 1;
  auto lift = [&](const Series1<S>& along, const Series1<S>& across, const Vec2<S>& ea,
                  const Vec2<S>& eb) {
    Series1<S> x(n), y(n);
    for (int k = 1; k <= m; ++k) {
      x[k] = along[k] * ea[0] + across[k] * eb[0];
      y[k] = along[k] * ea[1] + across[k] * eb[1];
    }
    return CurveJet<S>(x, y);
  };
  Series1<S> param(m);
  if (m >= 1) param[1] = ScalarTraits<S>::from_int(1);
  const Series1<S> g = detail::solve_graph(adapted, true);
  const Series1<S> h = detail::solve_graph(adapted, false);
  return {lift(param, g, e1, e2), lift(param, h, e2, e1)};
}

template <class S>
std::pair<CuspData<S>, CuspData<S>> branch_image_cusps(const MapJet2<S>& f, const BranchPair<S>& b,
                                                      double tolerance = 1e-12) {
  return {curve_cusp_test(compose(f, b.first), tolerance), curve_cusp_test(compose(f, b.second), tolerance)};
}

/// Cuspidal curvatures of the two branch images and the angle between their cuspidal directions.
struct CuspInvariants {
  double kappa_plus = 0.0;
  double kappa_minus = 0.0;
  double theta_gamma = 0.0;

  /// The pair (kappa+, kappa-) is defined up to a joint sign (source map
  /// (u,v) -> (-u,-v)); fix it so that kappa+ + kappa- >= 0.
  CuspInvariants canonical() const {
    CuspInvariants out = *this;
    const double s = kappa_plus + kappa_minus;
    if (s < 0.0 || (s == 0.0 && kappa_plus < 0.0)) {
      out.kappa_plus = -kappa_plus;
      out.kappa_minus = -kappa_minus;
    }
    return out;
  }
};

/**
 * Cusp invariants of a germ with index-1 identifier, computed from its own
 * branches. Labels and orientations follow one convention:
 *  - branches oriented so det(gamma+'(0), gamma-'(0)) < 0,
 *  - "+" is the branch with det(c+''(0), c-''(0)) > 0.
 * This leaves only the joint sign of (kappa+, kappa-) free.
 */
template <class S>
CuspInvariants direct_cusp_invariants(const MapJet2<S>& f, const ClassifyOptions& opts = {}) {
  const Identifier<S> id = jacobian_identifier(f);
  const HessianData<S> h = hessian_at_origin(id, opts);
  if (h.index != HessianIndex::IndexOne) {
    throw DegenerateHessianError("direct_cusp_invariants: identifier is not of index 1");
  }
  const QuadricRoots<S> roots = hesse_quadric_roots(h, opts);
  BranchPair<S> b = branch_curves(id, roots);
  if (detail::sign_of(det2(roots.eta1, roots.eta2)) > 0) b.second = b.second.reversed();
  auto [c1, c2] = branch_image_cusps(f, b);
  if (!c1.is_cusp || !c2.is_cusp) {
    throw std::domain_error("direct_cusp_invariants: a branch image is not a 3/2-cusp");
  }
  double k1 = *c1.kappa, k2 = *c2.kappa;
  const int label = detail::sign_of(det2(c1.second, c2.second));
  if (label < 0) {
    // swap labels, then reverse the new minus branch to restore the orientation rule
    std::swap(k1, k2);
    k2 = -k2;
  }
  const double dot = c1.direction[0] * c2.direction[0] + c1.direction[1] * c2.direction[1];
  return {k1, k2, std::acos(std::min(1.0, std::abs(dot)))};
}

}  // namespace corank2

#endif  // CORANK2_CUSP_HPP
