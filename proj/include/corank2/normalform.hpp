#ifndef CORANK2_NORMALFORM_HPP
#define CORANK2_NORMALFORM_HPP

// SO(2)-normal form of corank-2 germs with nondegenerate identifier:
//
//   (uv, a20 (e1 u^2 + e2 v^2)/2 + a30 u^3/6 + a03 v^3/6) + O(4),
//   a20 > 0, (e1, e2) in {(1,1), (1,-1), (-1,1)},
//
// reached by orientation-preserving source changes and target rotations only.
// Runs in double precision; every step is logged so the total change can be
// replayed.

#include <string>
#include <vector>

#include "corank2/cusp.hpp"
#include "corank2/jets.hpp"

namespace corank2 {

struct NormalFormOptions {
  /// Relative zero threshold (coefficients are compared against the 2-jet scale).
  double tolerance = 1e-9;
};

struct TransformStep {
  std::string name;
  MapJet2<double> source;  // identity when the step is a pure rotation
  double rotation = 0.0;   // target rotation angle added by the step
};

/// Running state: jet == R(rotation) o input o source.
struct NormalFormStage {
  MapJet2<double> jet;
  MapJet2<double> source;
  double rotation = 0.0;
  std::vector<TransformStep> log;

  explicit NormalFormStage(const MapJet2<double>& f);
  void apply_source(const std::string& name, const MapJet2<double>& phi);
  void apply_rotation(const std::string& name, double angle);
};

struct So2NormalForm {
  double a20 = 0.0;
  int eps1 = 1;
  int eps2 = 1;
  double a30 = 0.0;
  double a03 = 0.0;
  /// Whether the mixed-quadratic step had to use the second cot-theta root.
  bool alternate_root = false;
  MapJet2<double> jet = MapJet2<double>::identity(1);       // the transformed germ, order-4 terms included
  MapJet2<double> residual = MapJet2<double>::identity(1);  // terms of degree >= 4 of jet
  MapJet2<double> source = MapJet2<double>::identity(1);    // accumulated source change
  double rotation = 0.0;     // accumulated target rotation
  std::vector<TransformStep> log;

  bool sharksfin() const { return eps1 * eps2 > 0; }
  /// (uv, a20 (e1 u^2 + e2 v^2)/2 + a30 u^3/6 + a03 v^3/6) at the given order.
  MapJet2<double> model(int order) const;
};

/// Target rotation by angle: (x, y) -> (cos x - sin y, sin x + cos y).
MapJet2<double> rotate_target(const MapJet2<double>& f, double angle);

/// Compositional inverse of a map jet with invertible linear part.
MapJet2<double> invert_source(const MapJet2<double>& phi);

/// First component to exactly uv: rotate the target until the first component
/// is Morse of index 1, then complete squares degree by degree.
NormalFormStage reduce_to_uv_form(const MapJet2<double>& f, const NormalFormOptions& opts = {});

/// Morse-normalizes the first component (assumed index 1) starting at from_degree.
void normalize_first_component(NormalFormStage& stage, int from_degree, const NormalFormOptions& opts = {});

/// Diagonal source scaling making |a20| = |a02| for (uv, a20 u^2/2 + ... + a02 v^2/2).
void balance_quadratic(NormalFormStage& stage, const NormalFormOptions& opts = {});

/// Roots t = cot(theta) of B t^2 + (1 - B^2 + AC) t - B = 0 for the quadratic
/// part (uv, A u^2/2 + B uv + C v^2/2). A root is usable iff (t - B)^2 > AC,
/// i.e. the rotated first component stays indefinite.
struct MixedQuadraticRoots {
  double plus = 0.0;   // the "+" radical
  double minus = 0.0;  // = -1 / plus
  bool plus_valid = false;
  bool minus_valid = false;
};
MixedQuadraticRoots mixed_quadratic_cot(double A, double B, double C);

/// Removes the uv term of the second component. Returns whether the alternate root was used.
bool eliminate_mixed_quadratic(NormalFormStage& stage, const NormalFormOptions& opts = {});

/// Removes u^2 v and u v^2 from the second component, fixes signs and reads off the form.
So2NormalForm kill_mixed_cubics(NormalFormStage stage, const NormalFormOptions& opts = {});

/// Full pipeline. Throws NotRankZeroError / DegenerateHessianError on bad input.
So2NormalForm so2_normal_form(const MapJet2<double>& f, const NormalFormOptions& opts = {});

/// Closed-form curvatures and cusp angle; sharksfin forms only.
CuspInvariants so2_invariants(const So2NormalForm& nf);

}  // namespace corank2

#endif  // CORANK2_NORMALFORM_HPP
