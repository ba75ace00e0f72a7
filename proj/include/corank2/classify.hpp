#ifndef CORANK2_CLASSIFY_HPP
#define CORANK2_CLASSIFY_HPP

// Recognition of sharksfin and deltoid germs.
//
// Pipeline: Jacobian identifier lambda -> Hessian of lambda at 0 -> the two
// Hesse-quadric directions eta_1, eta_2 -> D_i = det(eta_i^2 f, eta_i^3 f)(0).
// The verdict is read off the sign of det Hess and the product D_1 D_2, which
// is invariant under swapping/conjugating the roots and therefore rational
// in exact mode.
//
// Instantiated for QuadScalar (exact) and std::complex<double> (floating).

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

#include "corank2/jets.hpp"

namespace corank2 {

enum class Verdict { Sharksfin, Deltoid, DegenerateHessian, NotRecognized, NotRankZero };
enum class HessianIndex { IndexOne, Definite, Degenerate };
enum class RootNormalization { LeadingUU, LeadingVV, Axes };

std::string to_string(Verdict v);
std::string to_string(HessianIndex h);
std::string to_string(RootNormalization r);

class NotRankZeroError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};
class DegenerateHessianError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct ClassifyOptions {
  /// Zero threshold for the floating path; the exact path ignores it.
  double tolerance = 1e-9;
};

template <class S>
struct Identifier {
  Jet2<S> lambda;
};

template <class S>
struct HessianData {
  S huu, huv, hvv;
  S det;  // huu * hvv - huv^2
  HessianIndex index = HessianIndex::Degenerate;
};

template <class S>
struct QuadricRoots {
  Vec2<S> eta1, eta2;
  /// huv^2 - huu*hvv; the roots live in Q(sqrt(discriminant)).
  S discriminant;
  RootNormalization normalization = RootNormalization::LeadingUU;
  bool complex_pair = false;
};

template <class S>
struct CriterionValues {
  S d1, d2, product;
};

template <class S>
struct Classification {
  Verdict verdict = Verdict::NotRecognized;
  int rank = 0;
  std::optional<HessianData<S>> hessian;
  std::optional<QuadricRoots<S>> roots;
  std::optional<CriterionValues<S>> criterion;
};

namespace detail {

template <class S>
int real_sign(const S& x, double tolerance) {
  if constexpr (ScalarTraits<S>::exact) {
    return x.sign();
  } else {
    const double r = std::real(x);
    if (std::abs(r) <= tolerance) return 0;
    return r > 0 ? 1 : -1;
  }
}

inline QuadScalar hesse_radical(const QuadScalar& disc) { return exact_sqrt(disc.as_rational()); }
inline std::complex<double> hesse_radical(const std::complex<double>& disc) {
  return std::sqrt(std::complex<double>(disc.real(), 0.0));
}
// Real-only path (index-1 Hessians).
inline double hesse_radical(double disc) {
  if (disc < 0.0) throw DegenerateHessianError("hesse_radical: complex roots on the real-only path");
  return std::sqrt(disc);
}

}  // namespace detail

/// lambda = (f1)_u (f2)_v - (f1)_v (f2)_u, of order N - 1.
template <class S>
Identifier<S> jacobian_identifier(const MapJet2<S>& f) {
  return {f.first.partial_u() * f.second.partial_v() - f.first.partial_v() * f.second.partial_u()};
}

/// rho * Jacobian for a unit multiplier rho (rho(0) != 0).
template <class S>
Identifier<S> scaled_identifier(const MapJet2<S>& f, const Jet2<S>& multiplier) {
  Identifier<S> base = jacobian_identifier(f);
  if (ScalarTraits<S>::is_zero(multiplier.coeff(0, 0))) {
    throw std::invalid_argument("scaled_identifier: multiplier must be a unit (nonzero at 0)");
  }
  const int n = base.lambda.order();
  if (multiplier.order() < n) throw JetError("scaled_identifier: multiplier order too low");
  return {multiplier.truncated(n) * base.lambda};
}

template <class S>
int rank_at_origin(const MapJet2<S>& f, const ClassifyOptions& opts = {}) {
  using T = ScalarTraits<S>;
  if (f.order() < 1) return 0;
  const S a = f.first.coeff(1, 0), b = f.first.coeff(0, 1);
  const S c = f.second.coeff(1, 0), d = f.second.coeff(0, 1);
  const double tol = opts.tolerance;
  if (T::near_zero(a, tol) && T::near_zero(b, tol) && T::near_zero(c, tol) && T::near_zero(d, tol)) {
    return 0;
  }
  return T::near_zero(a * d - b * c, tol) ? 1 : 2;
}

template <class S>
HessianData<S> hessian_at_origin(const Identifier<S>& id, const ClassifyOptions& opts = {}) {
  using T = ScalarTraits<S>;
  const Jet2<S>& lam = id.lambda;
  if (lam.order() < 2) throw JetError("hessian_at_origin: identifier order below 2");
  const double tol = opts.tolerance;
  if (!T::near_zero(lam.coeff(0, 0), tol) || !T::near_zero(lam.coeff(1, 0), tol) ||
      !T::near_zero(lam.coeff(0, 1), tol)) {
    throw NotRankZeroError("hessian_at_origin: identifier has nonvanishing constant or linear terms");
  }
  HessianData<S> h;
  h.huu = T::from_int(2) * lam.coeff(2, 0);
  h.huv = lam.coeff(1, 1);
  h.hvv = T::from_int(2) * lam.coeff(0, 2);
  h.det = h.huu * h.hvv - h.huv * h.huv;
  const int s = detail::real_sign(h.det, tol);
  h.index = s < 0 ? HessianIndex::IndexOne : (s > 0 ? HessianIndex::Definite : HessianIndex::Degenerate);
  return h;
}

/// Two independent solutions of huu x^2 + 2 huv x y + hvv y^2 = 0.
template <class S>
QuadricRoots<S> hesse_quadric_roots(const HessianData<S>& h, const ClassifyOptions& opts = {}) {
  using T = ScalarTraits<S>;
  if (h.index == HessianIndex::Degenerate) {
    throw DegenerateHessianError("hesse_quadric_roots: degenerate Hessian");
  }
  const double tol = opts.tolerance;
  QuadricRoots<S> r;
  r.discriminant = h.huv * h.huv - h.huu * h.hvv;
  r.complex_pair = h.index == HessianIndex::Definite;
  const S root = detail::hesse_radical(r.discriminant);
  bool use_uu = !T::near_zero(h.huu, tol);
  bool use_vv = !T::near_zero(h.hvv, tol);
  if constexpr (!T::exact) {
    // Prefer the better-conditioned pivot.
    if (use_uu && use_vv) use_uu = std::abs(h.huu) >= std::abs(h.hvv);
  }
  if (use_uu) {
    r.eta1 = {-h.huv + root, h.huu};
    r.eta2 = {-h.huv - root, h.huu};
    r.normalization = RootNormalization::LeadingUU;
  } else if (use_vv) {
    r.eta1 = {h.hvv, -h.huv + root};
    r.eta2 = {h.hvv, -h.huv - root};
    r.normalization = RootNormalization::LeadingVV;
  } else {
    r.eta1 = {T::from_int(1), T::from_int(0)};
    r.eta2 = {T::from_int(0), T::from_int(1)};
    r.normalization = RootNormalization::Axes;
  }
  if constexpr (!T::exact) {
    for (Vec2<S>* eta : {&r.eta1, &r.eta2}) {
      const double n = std::sqrt(std::norm((*eta)[0]) + std::norm((*eta)[1]));
      (*eta)[0] /= n;
      (*eta)[1] /= n;
    }
  }
  return r;
}

/// D_i = det(eta_i^2 f, eta_i^3 f)(0) with constant extensions of the roots.
template <class S>
CriterionValues<S> criterion_determinants(const MapJet2<S>& f, const QuadricRoots<S>& roots) {
  if (f.order() < 3) throw JetError("criterion_determinants: truncation order below 3");
  auto value = [&f](const Vec2<S>& eta) {
    return det2(directional_iterate(f, eta, 2), directional_iterate(f, eta, 3));
  };
  CriterionValues<S> out{value(roots.eta1), value(roots.eta2), S{}};
  out.product = out.d1 * out.d2;
  if constexpr (ScalarTraits<S>::exact) {
    if (!out.product.is_rational()) {
      throw std::logic_error("criterion_determinants: D1*D2 is not rational: " + out.product.to_string());
    }
  }
  return out;
}

template <class S>
Classification<S> classify_with_identifier(const MapJet2<S>& f, const Identifier<S>& id,
                                           const ClassifyOptions& opts = {}) {
  Classification<S> out;
  out.rank = rank_at_origin(f, opts);
  if (out.rank > 0) {
    out.verdict = Verdict::NotRankZero;
    return out;
  }
  out.hessian = hessian_at_origin(id, opts);
  if (out.hessian->index == HessianIndex::Degenerate) {
    out.verdict = Verdict::DegenerateHessian;
    return out;
  }
  out.roots = hesse_quadric_roots(*out.hessian, opts);
  out.criterion = criterion_determinants(f, *out.roots);
  const bool nonzero = !ScalarTraits<S>::near_zero(out.criterion->product, opts.tolerance);
  if (!nonzero) {
    out.verdict = Verdict::NotRecognized;
  } else {
    out.verdict = out.hessian->index == HessianIndex::IndexOne ? Verdict::Sharksfin : Verdict::Deltoid;
  }
  return out;
}

/// Largest magnitude among the degree-2 coefficients of f; 0 when the 2-jet vanishes.
template <class S>
double two_jet_scale(const MapJet2<S>& f) {
  double m = 0.0;
  if (f.order() < 2) return m;
  for (const Jet2<S>* g : {&f.first, &f.second})
    for (int j = 0; j <= 2; ++j) m = std::max(m, ScalarTraits<S>::magnitude(g->coeff(2 - j, j)));
  return m;
}

template <class S>
Classification<S> classify_germ(const MapJet2<S>& f, const ClassifyOptions& opts = {}) {
  if constexpr (ScalarTraits<S>::exact) {
    return classify_with_identifier(f, jacobian_identifier(f), opts);
  } else {
    // Floating path: rescale the target so the largest 2-jet coefficient is 1,
    // which makes the absolute tolerance meaningful. The verdict is invariant
    // under target scaling.
    if (rank_at_origin(f, opts) > 0) {
      Classification<S> out;
      out.rank = rank_at_origin(f, opts);
      out.verdict = Verdict::NotRankZero;
      return out;
    }
    const double scale = two_jet_scale(f);
    if (scale == 0.0) {
      Classification<S> out;
      out.verdict = Verdict::DegenerateHessian;
      out.hessian = HessianData<S>{};
      return out;
    }
    const S inv = S(1.0 / scale);
    const MapJet2<S> g(inv * f.first, inv * f.second);
    return classify_with_identifier(g, jacobian_identifier(g), opts);
  }
}

using ExactClassification = Classification<QuadScalar>;
using FloatClassification = Classification<std::complex<double>>;

extern template Classification<QuadScalar> classify_germ(const MapJet2<QuadScalar>&, const ClassifyOptions&);
extern template Classification<std::complex<double>> classify_germ(const MapJet2<std::complex<double>>&,
                                                                   const ClassifyOptions&);

}  // namespace corank2

#endif  // CORANK2_CLASSIFY_HPP
