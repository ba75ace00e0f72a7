#include "corank2/applications.hpp"

#include <cmath>
#include <limits>

#include "corank2/normalform.hpp"

namespace corank2 {

std::string to_string(UmbrellaType t) {
  switch (t) {
    case UmbrellaType::Elliptic: return "elliptic";
    case UmbrellaType::Hyperbolic: return "hyperbolic";
    case UmbrellaType::Parabolic: return "parabolic";
  }
  return "?";
}

UmbrellaType UmbrellaForm::type() const {
  const int s = sgn(d20);
  return s > 0 ? UmbrellaType::Elliptic : (s < 0 ? UmbrellaType::Hyperbolic : UmbrellaType::Parabolic);
}

void UmbrellaForm::validate() const {
  if (sgn(c3) <= 0) throw std::invalid_argument("umbrella: c3 must be positive");
  if (sgn(d02) <= 0) throw std::invalid_argument("umbrella: d02 must be positive");
}

UmbrellaVerdict whitney_project_classify(const UmbrellaForm& w) {
  w.validate();
  UmbrellaVerdict out;
  out.type = w.type();
  if (out.type == UmbrellaType::Parabolic) {
    throw ParabolicUmbrellaError("whitney_project_classify: parabolic umbrella (d20 = 0) is not covered");
  }
  const Rational& c3 = w.c3;
  if (out.type == UmbrellaType::Elliptic) {
    // E_delta = sqrt(d02) x + delta sqrt(d20) y, both expressions of the criterion at once.
    const Rational x = w.d30 * w.d02 + 3 * w.d12 * w.d20 - c3 * w.d20 * w.d20;
    const Rational y = 3 * w.d21 * w.d02 + (w.d03 - w.d11 * c3) * w.d20;
    out.product = w.d02 * x * x - w.d20 * y * y;
    const double s02 = std::sqrt(w.d02.get_d()), s20 = std::sqrt(w.d20.get_d());
    out.first.approx = s02 * x.get_d() + s20 * y.get_d();
    out.second.approx = s02 * x.get_d() - s20 * y.get_d();
    try {
      const QuadScalar r02 = exact_sqrt(w.d02), r20 = exact_sqrt(w.d20);
      out.first.exact = r02 * QuadScalar(x) + r20 * QuadScalar(y);
      out.second.exact = r02 * QuadScalar(x) - r20 * QuadScalar(y);
    } catch (const FieldMismatch&) {
      // sqrt(d02) and sqrt(d20) live in different fields; the product stays exact
    }
    out.verdict = sgn(*out.product) != 0 ? Verdict::Sharksfin : Verdict::NotRecognized;
  } else {
    const Rational ad20 = -w.d20;
    const Rational e1 = w.d30 * w.d02 - 3 * w.d12 * ad20 - c3 * ad20 * ad20;
    const Rational e2 = (w.d03 - w.d11 * c3) * ad20 - 3 * w.d21 * w.d02;
    out.first = {e1.get_d(), QuadScalar(e1)};
    out.second = {e2.get_d(), QuadScalar(e2)};
    out.verdict = (sgn(e1) != 0 || sgn(e2) != 0) ? Verdict::Deltoid : Verdict::NotRecognized;
  }
  return out;
}

MapJet2<QuadScalar> whitney_direct_jet(const UmbrellaForm& w, int order) {
  using J = Jet2<QuadScalar>;
  J f1(order), f2(order);
  auto put = [order](J& g, int i, int j, const Rational& value) {
    if (i + j <= order) g.coeff(i, j) = QuadScalar(value);
  };
  put(f1, 1, 1, Rational(1));
  put(f1, 0, 3, w.c3 / 6);
  put(f2, 2, 0, w.d20 / 2);
  put(f2, 1, 1, w.d11);
  put(f2, 0, 2, w.d02 / 2);
  put(f2, 3, 0, w.d30 / 6);
  put(f2, 2, 1, w.d21 / 2);
  put(f2, 1, 2, w.d12 / 2);
  put(f2, 0, 3, w.d03 / 6);
  return {f1, f2};
}

UmbrellaWCoefficients umbrella_projection_w_coeffs(const UmbrellaForm& w) {
  w.validate();
  if (w.type() == UmbrellaType::Parabolic) {
    throw ParabolicUmbrellaError("umbrella_projection_w_coeffs: parabolic umbrella");
  }
  const double d20 = w.d20.get_d(), d11 = w.d11.get_d(), d02 = w.d02.get_d();
  UmbrellaWCoefficients out;
  if (sgn(w.d11) == 0 && d20 > 0.0) {
    // The cot(theta) = 0 limit would make the first component definite; the
    // quadratic part is already diagonal, so no rotation is needed.
    out.cot_theta = std::numeric_limits<double>::infinity();
    out.alternate_root = true;
    out.w1 = 1.0;
    out.w2 = d02;
    out.w3 = d20;
    return out;
  }
  double t = 0.0;
  if (sgn(w.d11) != 0) {
    const MixedQuadraticRoots roots = mixed_quadratic_cot(d20, d11, d02);
    out.alternate_root = !roots.plus_valid;
    t = out.alternate_root ? roots.minus : roots.plus;
  }
  const double theta = std::atan2(1.0, t);
  const double c = std::cos(theta), s = std::sin(theta);
  const double x1 = std::sqrt((t - d11) * (t - d11) - d20 * d02);
  out.cot_theta = t;
  out.w1 = -2.0 * ((d11 - t) * c + (-d11 * d11 + d02 * d20 + d11 * t) * s) / d02;
  out.w2 = 2.0 * (-d11 + t - x1) / (s * d02);
  out.w3 = 2.0 * (-d11 + t + x1) / (s * d02);
  return out;
}

namespace {

using QJ = Jet2<QuadScalar>;

QJ polynomial(const std::vector<Rational>& coeffs, const QJ& var) {
  const int n = var.order();
  QJ out(n), power = QJ::constant(n, QuadScalar(1));
  for (std::size_t k = 0; k < coeffs.size() && static_cast<int>(k) <= n; ++k) {
    out += QuadScalar(coeffs[k]) * power;
    power = power * var;
  }
  return out;
}

Rational at(const std::vector<Rational>& c, std::size_t k) { return k < c.size() ? c[k] : Rational(0); }

Rational det3(const Rational m[3][3]) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

MapJet2<QuadScalar> motion_trajectory_jet(const MotionSpec& m, int order) {
  const QJ u = QJ::u(order), v = QJ::v(order);
  const QJ u2 = u * u, v2 = v * v;
  const QJ x_a = u2 * polynomial(m.a1, u), y_a = u2 * polynomial(m.a2, u);
  const QJ x_b = v2 * polynomial(m.b1, v), y_b = v2 * polynomial(m.b2, v);
  const QJ angle_v = v2 * polynomial(m.q, v);
  const QJ angle = u2 * polynomial(m.p, u) + angle_v;
  const QJ c = elementary(ElementaryKind::Cos, angle), s = elementary(ElementaryKind::Sin, angle);
  const QJ cv = elementary(ElementaryKind::Cos, angle_v), sv = elementary(ElementaryKind::Sin, angle_v);
  const QuadScalar w1(m.w1), w2(m.w2);
  // beta(v) alpha(u) . omega = R(angle) omega + R(angle_v) a(u) + b(v)
  QJ f1 = w1 * c - w2 * s + cv * x_a - sv * y_a + x_b;
  QJ f2 = w1 * s + w2 * c + sv * x_a + cv * y_a + y_b;
  f1.coeff(0, 0) -= w1;
  f2.coeff(0, 0) -= w2;
  return {f1, f2};
}

MotionVerdict motion_classify(const MotionSpec& m) {
  const Rational top[3] = {Rational(1), m.w2, -m.w1};
  const Rational row_p[3] = {at(m.p, 0), at(m.a1, 0), at(m.a2, 0)};
  const Rational row_dp[3] = {at(m.p, 1), at(m.a1, 1), at(m.a2, 1)};
  const Rational row_q[3] = {at(m.q, 0), at(m.b1, 0), at(m.b2, 0)};
  const Rational row_dq[3] = {at(m.q, 1), at(m.b1, 1), at(m.b2, 1)};
  auto det_of = [&](const Rational* r1, const Rational* r2) {
    const Rational mat[3][3] = {{top[0], top[1], top[2]}, {r1[0], r1[1], r1[2]}, {r2[0], r2[1], r2[2]}};
    return det3(mat);
  };
  MotionVerdict out;
  out.det_pq = det_of(row_p, row_q);
  out.det_p = det_of(row_p, row_dp);
  out.det_q = det_of(row_q, row_dq);
  // The identifier Hessian is [[0, h], [h, 0]] with h proportional to det_pq.
  if (sgn(out.det_pq) == 0) {
    out.verdict = Verdict::DegenerateHessian;
  } else if (sgn(out.det_p) != 0 && sgn(out.det_q) != 0) {
    out.verdict = Verdict::Sharksfin;
  } else {
    out.verdict = Verdict::NotRecognized;
  }
  return out;
}

Rational motion_translation_cusp_determinant(const MotionSpec& m) {
  return at(m.a1, 0) * at(m.a2, 1) - at(m.a2, 0) * at(m.a1, 1);
}

}  // namespace corank2
