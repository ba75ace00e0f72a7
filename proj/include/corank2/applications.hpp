#ifndef CORANK2_APPLICATIONS_HPP
#define CORANK2_APPLICATIONS_HPP

// Two applied families:
//  - orthogonal projections (X1,X2,X3) -> (X2,X3) of a Whitney umbrella in
//    the adapted form (u, uv + c3 v^3/6, sum d_ij u^i v^j/(i! j!)),
//  - trajectories f = ev_w o nu of composite planar motions
//    nu(u, v) = beta(v) alpha(u) in SE(2).

#include <optional>
#include <stdexcept>
#include <vector>

#include "corank2/classify.hpp"
#include "corank2/jets.hpp"

namespace corank2 {

class ParabolicUmbrellaError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class UmbrellaType { Elliptic, Hyperbolic, Parabolic };
std::string to_string(UmbrellaType t);

struct UmbrellaForm {
  Rational c3{1};
  Rational d20, d11, d02{1};
  Rational d30, d21, d12, d03;

  UmbrellaType type() const;
  /// Throws std::invalid_argument unless c3 > 0 and d02 > 0.
  void validate() const;
};

/// A criterion expression that is exact when it lies in a single quadratic
/// field, otherwise known only in floating point.
struct MixedValue {
  double approx = 0.0;
  std::optional<QuadScalar> exact;
};

struct UmbrellaVerdict {
  UmbrellaType type = UmbrellaType::Elliptic;
  Verdict verdict = Verdict::NotRecognized;
  /// Elliptic: the two delta = +1, -1 expressions. Hyperbolic: the two deltoid expressions.
  MixedValue first, second;
  /// Elliptic: product of the delta expressions (always rational). Hyperbolic: unset.
  std::optional<Rational> product;
};

/// Closed-form criterion for the projection. Throws ParabolicUmbrellaError when d20 = 0.
UmbrellaVerdict whitney_project_classify(const UmbrellaForm& w);

/// (uv + c3 v^3/6, sum d_ij u^i v^j/(i! j!)) at the given order.
MapJet2<QuadScalar> whitney_direct_jet(const UmbrellaForm& w, int order = 4);

/// Quadratic-part coefficients (w1, w2, w3) of the SO(2)-normal form of the
/// projection, and the rotation cot(theta) producing them.
struct UmbrellaWCoefficients {
  double w1 = 0.0, w2 = 0.0, w3 = 0.0;
  double cot_theta = 0.0;
  bool alternate_root = false;
};
UmbrellaWCoefficients umbrella_projection_w_coeffs(const UmbrellaForm& w);

/// alpha(u) = ((u^2 a1(u), u^2 a2(u)), u^2 p(u)), beta(v) = ((v^2 b1(v), v^2 b2(v)), v^2 q(v)),
/// tracked point omega = (w1, w2). Coefficient lists are in ascending powers.
struct MotionSpec {
  std::vector<Rational> a1, a2, p;
  std::vector<Rational> b1, b2, q;
  Rational w1, w2;
};

/// Jet at 0 of ev_omega o nu minus its value at 0.
MapJet2<QuadScalar> motion_trajectory_jet(const MotionSpec& m, int order = 4);

struct MotionVerdict {
  Verdict verdict = Verdict::NotRecognized;
  /// Rows (1, w2, -w1) against (p, a1, a2)(0), (q, b1, b2)(0) and derivatives.
  Rational det_pq, det_p, det_q;
};

/// Never Deltoid: the identifier Hessian of a motion trajectory is never definite.
MotionVerdict motion_classify(const MotionSpec& m);

/// det[[a1(0), a2(0)], [a1'(0), a2'(0)]]: nonzero iff (u^2 a1, u^2 a2) is a 3/2-cusp.
Rational motion_translation_cusp_determinant(const MotionSpec& m);

}  // namespace corank2

#endif  // CORANK2_APPLICATIONS_HPP
