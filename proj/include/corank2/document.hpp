#ifndef CORANK2_DOCUMENT_HPP
#define CORANK2_DOCUMENT_HPP

// Line-oriented input documents. See docs/input_format.md for the grammar.

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "corank2/applications.hpp"
#include "corank2/jets.hpp"

namespace corank2 {

class DocumentError : public std::runtime_error {
 public:
  DocumentError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

enum class DocumentMode { Germ, Umbrella, Motion };
std::string to_string(DocumentMode m);

/// A literal from the document: exact value plus whether it was written as a decimal.
struct Number {
  Rational value;
  bool decimal = false;
  bool operator==(const Number&) const = default;
};

struct TermEntry {
  int component = 1;  // 1 or 2
  int i = 0, j = 0;
  Number value;
  bool operator==(const TermEntry&) const = default;
};

struct GermInputDocument {
  DocumentMode mode = DocumentMode::Germ;
  int order = 4;
  std::vector<TermEntry> terms;                        // germ
  std::map<std::string, Number> scalars;               // umbrella: c3, d20, ...
  std::map<std::string, std::vector<Number>> lists;    // motion: a1, a2, p, b1, b2, q
  std::optional<std::array<Number, 2>> omega;          // motion

  /// True when any literal was a decimal; such documents only run in floating mode.
  bool floating() const;
  bool operator==(const GermInputDocument&) const = default;
};

inline constexpr std::array<const char*, 8> kUmbrellaKeys = {"c3", "d20", "d11", "d02", "d30", "d21", "d12", "d03"};
inline constexpr std::array<const char*, 6> kMotionKeys = {"a1", "a2", "p", "b1", "b2", "q"};

GermInputDocument parse_document(std::string_view text);
std::string serialize_document(const GermInputDocument& doc);
GermInputDocument read_document_file(const std::string& path);

/// Germ jet at the given order (terms above it are dropped).
MapJet2<QuadScalar> germ_jet(const GermInputDocument& doc, int order);
UmbrellaForm umbrella_form(const GermInputDocument& doc);
MotionSpec motion_spec(const GermInputDocument& doc);

/// Exact decimal expansion of a rational whose denominator divides a power of 10.
std::string rational_to_decimal(const Rational& q);

}  // namespace corank2

#endif  // CORANK2_DOCUMENT_HPP
