#ifndef CORANK2_REPORT_HPP
#define CORANK2_REPORT_HPP

// Report construction. Every number in a report is an object
//   {"value": ..., "mode": "exact"}                     or
//   {"value": ..., "mode": "floating", "tolerance": t}
// so a reader never has to guess how a value was obtained.

#include <complex>
#include <string>

#include <json.hpp>

#include "corank2/classify.hpp"
#include "corank2/cusp.hpp"
#include "corank2/quad_scalar.hpp"

namespace corank2 {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "corank2-report/1";

Json exact_number(const QuadScalar& x);
Json exact_number(const Rational& x);
Json floating_number(double x, double tolerance);
Json floating_number(const std::complex<double>& x, double tolerance);

inline Json tagged(const QuadScalar& x, double) { return exact_number(x); }
inline Json tagged(const std::complex<double>& x, double tol) { return floating_number(x, tol); }
inline Json tagged(double x, double tol) { return floating_number(x, tol); }

template <class S>
Json tagged_vector(const Vec2<S>& v, double tol) {
  return Json::array({tagged(v[0], tol), tagged(v[1], tol)});
}

/// Hessian, quadric roots and criterion values of a classification.
template <class S>
Json classification_json(const Classification<S>& c, double tol) {
  Json j;
  j["verdict"] = to_string(c.verdict);
  j["rank"] = c.rank;
  if (c.hessian) {
    const auto& h = *c.hessian;
    j["hessian"] = {{"huu", tagged(h.huu, tol)},
                    {"huv", tagged(h.huv, tol)},
                    {"hvv", tagged(h.hvv, tol)},
                    {"det", tagged(h.det, tol)},
                    {"index", to_string(h.index)}};
  }
  if (c.roots) {
    const auto& r = *c.roots;
    j["quadric_roots"] = {{"eta1", tagged_vector(r.eta1, tol)},
                          {"eta2", tagged_vector(r.eta2, tol)},
                          {"discriminant", tagged(r.discriminant, tol)},
                          {"normalization", to_string(r.normalization)},
                          {"complex_pair", r.complex_pair}};
  }
  if (c.criterion) {
    const auto& d = *c.criterion;
    j["criterion"] = {{"d1", tagged(d.d1, tol)}, {"d2", tagged(d.d2, tol)}, {"product", tagged(d.product, tol)}};
  }
  return j;
}

template <class S>
Json cusp_json(const CuspData<S>& c, double tol) {
  Json j;
  j["status"] = to_string(c.status);
  j["second_derivative"] = tagged_vector(c.second, tol);
  j["third_derivative"] = tagged_vector(c.third, tol);
  j["det"] = tagged(c.det, tol);
  if (c.kappa) j["kappa"] = floating_number(*c.kappa, tol);
  j["direction"] = Json::array({floating_number(c.direction[0], tol), floating_number(c.direction[1], tol)});
  return j;
}

Json invariants_json(const CuspInvariants& inv, double tol);

/// Human-readable rendering of a report (indented key: value lines).
std::string render_text(const Json& report);
/// Stable machine rendering (two-space indented JSON plus newline).
std::string render_machine(const Json& report);

}  // namespace corank2

#endif  // CORANK2_REPORT_HPP
