#include "corank2/normalform.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "corank2/classify.hpp"

namespace corank2 {

namespace {

using Map = MapJet2<double>;

// Quadratic part p u^2 + 2q uv + r v^2 of a scalar jet.
struct Quadratic {
  double p, q, r;
  double det() const { return p * r - q * q; }
};

Quadratic quadratic_of(const Jet2<double>& g) { return {g.coeff(2, 0), 0.5 * g.coeff(1, 1), g.coeff(0, 2)}; }

double max_quadratic(const Map& f) { return two_jet_scale(f); }

// Two independent isotropic vectors of an indefinite quadratic form.
std::pair<Vec2<double>, Vec2<double>> isotropic_pair(const Quadratic& Q) {
  const double root = std::sqrt(Q.q * Q.q - Q.p * Q.r);
  const double big = std::max(std::abs(Q.p), std::abs(Q.r));
  if (big <= 1e-14 * std::abs(Q.q)) return {{1.0, 0.0}, {0.0, 1.0}};
  // Stable roots of the ratio equation; the pivot is the larger diagonal entry.
  const double k = -Q.q - std::copysign(root, Q.q);
  if (std::abs(Q.p) >= std::abs(Q.r)) {
    // p x^2 + 2q x + r = 0 for x = u/v
    return {{k / Q.p, 1.0}, {Q.r / k, 1.0}};
  }
  // r y^2 + 2q y + p = 0 for y = v/u
  return {{1.0, k / Q.r}, {1.0, Q.p / k}};
}

double polar(const Quadratic& Q, const Vec2<double>& a, const Vec2<double>& b) {
  return Q.p * a[0] * b[0] + Q.q * (a[0] * b[1] + a[1] * b[0]) + Q.r * a[1] * b[1];
}

void require_uv_first(const Map& g, double tol) {
  const Jet2<double>& g1 = g.first;
  for (int d = 2; d <= std::min(3, g1.order()); ++d)
    for (int j = 0; j <= d; ++j) {
      const double want = (d == 2 && j == 1) ? 1.0 : 0.0;
      if (std::abs(g1.coeff(d - j, j) - want) > tol) {
        throw std::invalid_argument("normal form: first component is not uv");
      }
    }
}

}  // namespace

NormalFormStage::NormalFormStage(const MapJet2<double>& f)
    : jet(f), source(MapJet2<double>::identity(f.order())) {}

void NormalFormStage::apply_source(const std::string& name, const MapJet2<double>& phi) {
  jet = compose(jet, phi);
  source = compose(source, phi);
  log.push_back({name, phi, 0.0});
}

void NormalFormStage::apply_rotation(const std::string& name, double angle) {
  jet = rotate_target(jet, angle);
  rotation += angle;
  log.push_back({name, MapJet2<double>::identity(jet.order()), angle});
}

MapJet2<double> So2NormalForm::model(int order) const {
  Jet2<double> f1(order), f2(order);
  if (order >= 2) {
    f1.coeff(1, 1) = 1.0;
    f2.coeff(2, 0) = eps1 * a20 / 2.0;
    f2.coeff(0, 2) = eps2 * a20 / 2.0;
  }
  if (order >= 3) {
    f2.coeff(3, 0) = a30 / 6.0;
    f2.coeff(0, 3) = a03 / 6.0;
  }
  return {f1, f2};
}

MapJet2<double> rotate_target(const MapJet2<double>& f, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c * f.first - s * f.second, s * f.first + c * f.second};
}

MapJet2<double> invert_source(const MapJet2<double>& phi) {
  const int n = phi.order();
  const double a = phi.first.coeff(1, 0), b = phi.first.coeff(0, 1);
  const double c = phi.second.coeff(1, 0), d = phi.second.coeff(0, 1);
  const double det = a * d - b * c;
  if (det == 0.0) throw std::invalid_argument("invert_source: singular linear part");
  // psi = L^{-1} (id - H o psi), H = phi - L; each pass fixes one more degree.
  const Map id = Map::identity(n);
  const Map lin = linear_map(n, a, b, c, d);
  const Map nonlin(phi.first - lin.first, phi.second - lin.second);
  auto apply_inverse_linear = [&](const Jet2<double>& x, const Jet2<double>& y) {
    return Map((d / det) * x - (b / det) * y, (a / det) * y - (c / det) * x);
  };
  Map psi = apply_inverse_linear(id.first, id.second);
  for (int pass = 0; pass < n; ++pass) {
    const Map h = compose(nonlin, psi);
    psi = apply_inverse_linear(id.first - h.first, id.second - h.second);
  }
  return psi;
}

void normalize_first_component(NormalFormStage& stage, int from_degree, const NormalFormOptions& opts) {
  const int n = stage.jet.order();
  if (from_degree <= 2) {
    const Quadratic Q = quadratic_of(stage.jet.first);
    const double scale = std::max({std::abs(Q.p), std::abs(Q.q), std::abs(Q.r)});
    if (!(Q.det() < -opts.tolerance * scale * scale)) {
      throw DegenerateHessianError("normal form: first component is not Morse of index 1");
    }
    auto [e1, e2] = isotropic_pair(Q);
    const double w = 1.0 / (2.0 * polar(Q, e1, e2));
    e1 = {e1[0] * w, e1[1] * w};
    if (det2(e1, e2) < 0.0) std::swap(e1, e2);
    stage.apply_source("morse-linear", linear_map(n, e1[0], e2[0], e1[1], e2[1]));
  }
  for (int k = std::max(3, from_degree); k <= n; ++k) {
    Jet2<double> a(n), b(n);
    bool any = false;
    for (int j = 0; j <= k; ++j) {
      const int i = k - j;
      const double c = stage.jet.first.coeff(i, j);
      if (c == 0.0) continue;
      any = true;
      // u^i v^j = u * (u^(i-1) v^j) is absorbed by v, pure v^k by u.
      if (i >= 1) {
        b.coeff(i - 1, j) -= c;
      } else {
        a.coeff(0, k - 1) -= c;
      }
    }
    if (!any) continue;
    stage.apply_source("morse-degree-" + std::to_string(k),
                       Map(Jet2<double>::u(n) + a, Jet2<double>::v(n) + b));
  }
}

NormalFormStage reduce_to_uv_form(const MapJet2<double>& f, const NormalFormOptions& opts) {
  if (f.order() < 2) throw JetError("reduce_to_uv_form: order below 2");
  NormalFormStage stage(f);
  const double scale = max_quadratic(f);
  const double tol2 = opts.tolerance * scale * scale;
  const Quadratic A = quadratic_of(f.first), B = quadratic_of(f.second);
  if (!(A.det() < -tol2)) {
    // det(cos A - sin B) = [c s] [[det A, -m/2], [-m/2, det B]] [c s]^T
    const double m = A.p * B.r + A.r * B.p - 2.0 * A.q * B.q;
    const double a = A.det(), b = B.det(), o = -0.5 * m;
    const double lowest = 0.5 * (a + b) - std::hypot(0.5 * (a - b), o);
    if (!(lowest < -tol2)) {
      throw DegenerateHessianError("reduce_to_uv_form: no target rotation makes a component index-1");
    }
    const double theta = 0.5 * std::atan2(2.0 * o, a - b) + std::numbers::pi / 2.0;
    stage.apply_rotation("index-one-rotation", theta);
  }
  normalize_first_component(stage, 2, opts);
  return stage;
}

void balance_quadratic(NormalFormStage& stage, const NormalFormOptions& opts) {
  const Jet2<double>& g2 = stage.jet.second;
  const double A = 2.0 * g2.coeff(2, 0), B = g2.coeff(1, 1), C = 2.0 * g2.coeff(0, 2);
  const double big = std::max({std::abs(A), std::abs(B), std::abs(C)});
  if (std::min(std::abs(A), std::abs(C)) <= opts.tolerance * big) {
    throw DegenerateHessianError("balance_quadratic: vanishing pure quadratic coefficient");
  }
  const double su = std::pow(std::abs(C / A), 0.25), sv = std::pow(std::abs(A / C), 0.25);
  if (std::abs(su - 1.0) <= 1e-15) return;
  const int n = stage.jet.order();
  stage.apply_source("balance-scaling", linear_map(n, su, 0.0, 0.0, sv));
}

MixedQuadraticRoots mixed_quadratic_cot(double A, double B, double C) {
  MixedQuadraticRoots r;
  if (B == 0.0) throw std::invalid_argument("mixed_quadratic_cot: B must be nonzero");
  const double k = 1.0 - B * B + A * C;
  const double s = std::sqrt(k * k + 4.0 * B * B);
  // (-k + s) / 2B without cancellation
  r.plus = k > 0.0 ? 2.0 * B / (k + s) : (s - k) / (2.0 * B);
  r.minus = -1.0 / r.plus;
  r.plus_valid = (r.plus - B) * (r.plus - B) - A * C > 0.0;
  r.minus_valid = (r.minus - B) * (r.minus - B) - A * C > 0.0;
  return r;
}

bool eliminate_mixed_quadratic(NormalFormStage& stage, const NormalFormOptions& opts) {
  require_uv_first(stage.jet, 1e-8);
  const Jet2<double>& g2 = stage.jet.second;
  const double A = 2.0 * g2.coeff(2, 0), B = g2.coeff(1, 1), C = 2.0 * g2.coeff(0, 2);
  const double big = std::max({std::abs(A), std::abs(C), 1.0});
  if (std::abs(B) <= opts.tolerance * big) return false;
  const MixedQuadraticRoots roots = mixed_quadratic_cot(A, B, C);
  if (!roots.plus_valid && !roots.minus_valid) {
    throw DegenerateHessianError("eliminate_mixed_quadratic: no admissible rotation");
  }
  const bool alternate = !roots.plus_valid;
  const double t = alternate ? roots.minus : roots.plus;
  stage.apply_rotation(alternate ? "mixed-quadratic-rotation(alternate root)" : "mixed-quadratic-rotation",
                       std::atan2(1.0, t));
  normalize_first_component(stage, 2, opts);
  balance_quadratic(stage, opts);
  return alternate;
}

So2NormalForm kill_mixed_cubics(NormalFormStage stage, const NormalFormOptions& opts) {
  const int n = stage.jet.order();
  if (n < 3) throw JetError("kill_mixed_cubics: order below 3");
  require_uv_first(stage.jet, 1e-8);
  {
    const Jet2<double>& g2 = stage.jet.second;
    const double a20 = 2.0 * g2.coeff(2, 0), a02 = 2.0 * g2.coeff(0, 2);
    const double big = std::max({std::abs(a20), std::abs(a02), std::abs(g2.coeff(1, 1))});
    if (std::min(std::abs(a20), std::abs(a02)) <= opts.tolerance * big) {
      throw DegenerateHessianError("kill_mixed_cubics: zero quadratic coefficient");
    }
    const double a21 = 2.0 * g2.coeff(2, 1), a12 = 2.0 * g2.coeff(1, 2);
    const double al = a12 / (2.0 * a02), be = a21 / (2.0 * a20);
    Jet2<double> u = Jet2<double>::u(n), v = Jet2<double>::v(n);
    u.coeff(2, 0) += al;
    u.coeff(1, 1) -= be;
    v.coeff(1, 1) -= al;
    v.coeff(0, 2) += be;
    if (al != 0.0 || be != 0.0) stage.apply_source("kill-mixed-cubics", Map(u, v));
  }
  normalize_first_component(stage, 4, opts);
  balance_quadratic(stage, opts);

  const Jet2<double>& g2 = stage.jet.second;
  if (g2.coeff(2, 0) < 0.0 && g2.coeff(0, 2) < 0.0) {
    // (u, v) -> (v, -u) with a half-turn of the target: (-,-) -> (+,+)
    stage.apply_source("quarter-turn", linear_map(n, 0.0, 1.0, -1.0, 0.0));
    stage.apply_rotation("half-turn", std::numbers::pi);
  }

  So2NormalForm nf{};
  const Jet2<double>& h2 = stage.jet.second;
  nf.eps1 = h2.coeff(2, 0) > 0 ? 1 : -1;
  nf.eps2 = h2.coeff(0, 2) > 0 ? 1 : -1;
  nf.a20 = std::sqrt(std::abs(4.0 * h2.coeff(2, 0) * h2.coeff(0, 2)));
  nf.a30 = 6.0 * h2.coeff(3, 0);
  nf.a03 = 6.0 * h2.coeff(0, 3);
  nf.jet = stage.jet;
  nf.residual = Map(stage.jet.first.tail_from(4), stage.jet.second.tail_from(4));
  nf.source = stage.source;
  nf.rotation = stage.rotation;
  nf.log = std::move(stage.log);
  return nf;
}

So2NormalForm so2_normal_form(const MapJet2<double>& f, const NormalFormOptions& opts) {
  if (f.order() < 3) throw JetError("so2_normal_form: order below 3");
  ClassifyOptions copts;
  copts.tolerance = opts.tolerance;
  const double scale = two_jet_scale(f);
  if (scale == 0.0) throw DegenerateHessianError("so2_normal_form: vanishing 2-jet");
  const Map g((1.0 / scale) * f.first, (1.0 / scale) * f.second);
  if (rank_at_origin(g, copts) > 0) throw NotRankZeroError("so2_normal_form: rank df(0) > 0");
  if (hessian_at_origin(jacobian_identifier(g), copts).index == HessianIndex::Degenerate) {
    throw DegenerateHessianError("so2_normal_form: degenerate identifier Hessian");
  }
  NormalFormStage stage = reduce_to_uv_form(f, opts);
  balance_quadratic(stage, opts);
  const bool alternate = eliminate_mixed_quadratic(stage, opts);
  So2NormalForm nf = kill_mixed_cubics(std::move(stage), opts);
  nf.alternate_root = alternate;
  return nf;
}

CuspInvariants so2_invariants(const So2NormalForm& nf) {
  if (!nf.sharksfin()) {
    throw std::domain_error("so2_invariants: deltoid forms have no branch invariants");
  }
  const double a2 = nf.a20 * nf.a20;
  const double denom = std::pow(4.0 + 4.0 * a2, 1.25);
  CuspInvariants inv;
  inv.kappa_plus = 2.0 * (nf.a30 + nf.a03) / denom;
  inv.kappa_minus = 2.0 * (-nf.a30 + nf.a03) / denom;
  inv.theta_gamma = std::acos(std::abs(a2 - 1.0) / (a2 + 1.0));
  return inv;
}

}  // namespace corank2
