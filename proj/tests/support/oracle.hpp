#ifndef CORANK2_TESTS_ORACLE_HPP
#define CORANK2_TESTS_ORACLE_HPP

// Independent reference computations for the test suites. Nothing here calls
// into the classifier; the only shared code is the jet container.

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <utility>

#include "corank2/jets.hpp"

namespace corank2::oracle {

using QJet = MapJet2<QuadScalar>;

// (uv, eps u^2/2 + v^2/2 + a30 u^3/6 + a21 u^2 v/2 + a12 u v^2/2 + a03 v^3/6)
struct ReducedForm {
  int eps = 1;
  Rational a30, a21, a12, a03;
};

class NotReducedFormError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

QJet reduced_form_jet(const ReducedForm& r, int order = 4);
/// Reads the cubic coefficients back; throws unless the 2-jet is (uv, eps u^2/2 + v^2/2)
/// and the first component has no cubic terms.
ReducedForm read_reduced_form(const QJet& f);

/// eps = 1: (a30-3a21+3a12-a03)(a30+3a21+3a12+a03).
/// eps = -1: (a30-3a12)^2 + (3a21-a03)^2.
/// Nonzero exactly when the germ is a sharksfin (eps = 1) or a deltoid (eps = -1).
Rational brute_force_condition(const QJet& f);

enum class Restriction { RotationOnly, OrientationPreserving, General };

struct DiffeoJet {
  QJet map;
  int orientation = 1;
  Restriction restriction = Restriction::General;
};

/// Exact rotation with rational cosine and sine (c^2 + s^2 must be 1).
DiffeoJet rotation_diffeo(int order, const Rational& c, const Rational& s);
/// Rotation through a Pythagorean triple drawn from rng.
DiffeoJet random_rotation(int order, std::mt19937_64& rng);
DiffeoJet random_diffeo(int order, std::mt19937_64& rng, Restriction r);

/// Phi o f o phi for a seeded pair of random diffeomorphism jets.
QJet random_a_equivalence(const QJet& f, std::uint64_t seed, Restriction r);

struct TildeShift {
  Rational a30_tilde, a03_tilde;
  bool first_component_uv = false;
  bool quadratic_unchanged = false;
  bool mixed_cubics_vanish = false;
  bool a30_matches = false;
  bool a03_matches = false;
  bool ok() const {
    return first_component_uv && quadratic_unchanged && mixed_cubics_vanish && a30_matches && a03_matches;
  }
};

/// Applies u = u1 + a12 u1^2/2 - eps a21 u1 v1/2, v = v1 - a12 u1 v1/2 + eps a21 v1^2/2
/// to a reduced form and compares the result with the predicted shifted coefficients.
TildeShift tilde_shift_check(const QJet& f);

// --- brute-force polynomial arithmetic, kept separate from Jet2 ---

using Poly = std::map<std::pair<int, int>, QuadScalar>;

Poly to_poly(const Jet2<QuadScalar>& g);
Poly poly_mul(const Poly& a, const Poly& b, int max_degree);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_du(const Poly& a);
Poly poly_dv(const Poly& a);

/// xi^k f at the origin for the vector field xi = (xi1, xi2), by repeated symbolic
/// differentiation of polynomials.
Vec2<QuadScalar> brute_force_iterate(const QJet& f, const Jet2<QuadScalar>& xi1, const Jet2<QuadScalar>& xi2,
                                     int k);

// --- random generators ---

Rational random_rational(std::mt19937_64& rng, int numerator_range, int max_denominator = 1);
/// Random jet with coefficients in degrees [min_degree, order].
Jet2<QuadScalar> random_jet(int order, std::mt19937_64& rng, int min_degree, int range = 3, int max_den = 1);
QJet random_germ(int order, std::mt19937_64& rng, int min_degree, int range = 3, int max_den = 1);

/// Random target rotation plus random orientation-preserving source change, floating.
MapJet2<double> random_so2_conjugate(const MapJet2<double>& f, std::mt19937_64& rng);

}  // namespace corank2::oracle

#endif  // CORANK2_TESTS_ORACLE_HPP
