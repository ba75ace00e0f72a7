#include "corank2/report.hpp"

#include <sstream>

namespace corank2 {

Json exact_number(const QuadScalar& x) {
  return {{"value", x.to_string()}, {"mode", "exact"}};
}

Json exact_number(const Rational& x) {
  return {{"value", rational_to_string(x)}, {"mode", "exact"}};
}

Json floating_number(double x, double tolerance) {
  return {{"value", x}, {"mode", "floating"}, {"tolerance", tolerance}};
}

Json floating_number(const std::complex<double>& x, double tolerance) {
  Json j{{"value", x.real()}};
  if (x.imag() != 0.0) j["imag"] = x.imag();
  j["mode"] = "floating";
  j["tolerance"] = tolerance;
  return j;
}

Json invariants_json(const CuspInvariants& inv, double tol) {
  return {{"kappa_plus", floating_number(inv.kappa_plus, tol)},
          {"kappa_minus", floating_number(inv.kappa_minus, tol)},
          {"theta_gamma", floating_number(inv.theta_gamma, tol)}};
}

namespace {

bool is_number_object(const Json& j) { return j.is_object() && j.contains("mode") && j.contains("value"); }

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (is_number_object(j)) {
    std::ostringstream os;
    os << scalar_text(j["value"]);
    if (j.contains("imag")) {
      const double im = j["imag"].get<double>();
      os << (im < 0 ? " - " : " + ") << std::abs(im) << "i";
    }
    if (j["mode"] == "exact") {
      os << "  [exact]";
    } else {
      os << "  [floating, tol " << j["tolerance"].get<double>() << "]";
    }
    return os.str();
  }
  if (j.is_number_float()) {
    std::ostringstream os;
    os.precision(12);
    os << j.get<double>();
    return os.str();
  }
  return j.dump();
}

bool is_leaf(const Json& j) {
  if (is_number_object(j)) return true;
  if (j.is_array()) {
    for (const auto& e : j)
      if (!is_number_object(e) && (e.is_structured())) return false;
    return true;
  }
  return !j.is_structured();
}

void render(const Json& j, int depth, std::ostringstream& os) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_leaf(value)) {
        os << pad << key << ": ";
        if (value.is_array()) {
          os << "(";
          bool first = true;
          for (const auto& e : value) {
            os << (first ? "" : ", ") << scalar_text(e);
            first = false;
          }
          os << ")";
        } else {
          os << scalar_text(value);
        }
        os << '\n';
      } else {
        os << pad << key << ":\n";
        render(value, depth + 1, os);
      }
    }
  } else if (j.is_array()) {
    std::size_t k = 0;
    for (const auto& e : j) {
      os << pad << "- [" << k++ << "]\n";
      render(e, depth + 1, os);
    }
  } else {
    os << pad << scalar_text(j) << '\n';
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream os;
  render(report, 0, os);
  return os.str();
}

std::string render_machine(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace corank2
