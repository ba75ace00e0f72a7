#include "corank2/document.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace corank2 {

DocumentError::DocumentError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

std::string to_string(DocumentMode m) {
  switch (m) {
    case DocumentMode::Germ: return "germ";
    case DocumentMode::Umbrella: return "umbrella";
    case DocumentMode::Motion: return "motion";
  }
  return "?";
}

bool GermInputDocument::floating() const {
  for (const auto& t : terms)
    if (t.value.decimal) return true;
  for (const auto& [key, n] : scalars)
    if (n.decimal) return true;
  for (const auto& [key, list] : lists)
    for (const auto& n : list)
      if (n.decimal) return true;
  if (omega && ((*omega)[0].decimal || (*omega)[1].decimal)) return true;
  return false;
}

namespace {

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream is{std::string(line)};
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

bool looks_decimal(const std::string& s) {
  return s.find_first_of(".eE") != std::string::npos;
}

Number parse_number(const std::string& word, int line) {
  try {
    if (looks_decimal(word)) return {parse_decimal(word), true};
    return {parse_rational(word), false};
  } catch (const std::exception& e) {
    throw DocumentError(line, e.what());
  }
}

int parse_int(const std::string& word, int line, const char* what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(word, &used);
    if (used != word.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw DocumentError(line, std::string("invalid ") + what + " '" + word + "'");
  }
}

template <std::size_t K>
bool member(const std::array<const char*, K>& keys, const std::string& w) {
  return std::any_of(keys.begin(), keys.end(), [&](const char* k) { return w == k; });
}

std::string number_text(const Number& n) {
  return n.decimal ? rational_to_decimal(n.value) : rational_to_string(n.value);
}

}  // namespace

GermInputDocument parse_document(std::string_view text) {
  GermInputDocument doc;
  bool have_mode = false, have_order = false;
  std::set<std::string> seen;
  std::set<std::array<int, 3>> seen_terms;
  std::istringstream is{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(is, raw)) {
    ++line;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::vector<std::string> w = split_words(raw);
    if (w.empty()) continue;
    const std::string& key = w[0];
    if (!have_mode) {
      if (key != "mode" || w.size() != 2) throw DocumentError(line, "document must start with 'mode germ|umbrella|motion'");
      if (w[1] == "germ") {
        doc.mode = DocumentMode::Germ;
      } else if (w[1] == "umbrella") {
        doc.mode = DocumentMode::Umbrella;
      } else if (w[1] == "motion") {
        doc.mode = DocumentMode::Motion;
      } else {
        throw DocumentError(line, "unknown mode '" + w[1] + "'");
      }
      have_mode = true;
      continue;
    }
    if (key == "mode") throw DocumentError(line, "mode given twice");
    if (key == "order") {
      if (have_order) throw DocumentError(line, "order given twice");
      if (w.size() != 2) throw DocumentError(line, "usage: order <N>");
      doc.order = parse_int(w[1], line, "order");
      if (doc.order < 1 || doc.order > 12) throw DocumentError(line, "order must be between 1 and 12");
      have_order = true;
      continue;
    }
    switch (doc.mode) {
      case DocumentMode::Germ: {
        if (key != "term") throw DocumentError(line, "unknown germ key '" + key + "'");
        if (w.size() != 5) throw DocumentError(line, "usage: term <component> <i> <j> <value>");
        TermEntry t;
        t.component = parse_int(w[1], line, "component");
        t.i = parse_int(w[2], line, "exponent");
        t.j = parse_int(w[3], line, "exponent");
        t.value = parse_number(w[4], line);
        if (t.component != 1 && t.component != 2) throw DocumentError(line, "component must be 1 or 2");
        if (t.i < 0 || t.j < 0) throw DocumentError(line, "exponents must be nonnegative");
        if (t.i + t.j == 0) throw DocumentError(line, "constant terms are not allowed (the germ maps 0 to 0)");
        if (!seen_terms.insert({t.component, t.i, t.j}).second) throw DocumentError(line, "duplicate term");
        doc.terms.push_back(t);
        break;
      }
      case DocumentMode::Umbrella: {
        if (!member(kUmbrellaKeys, key)) throw DocumentError(line, "unknown umbrella key '" + key + "'");
        if (w.size() != 2) throw DocumentError(line, "usage: " + key + " <value>");
        if (!seen.insert(key).second) throw DocumentError(line, key + " given twice");
        doc.scalars[key] = parse_number(w[1], line);
        break;
      }
      case DocumentMode::Motion: {
        if (key == "omega") {
          if (w.size() != 3) throw DocumentError(line, "usage: omega <w1> <w2>");
          if (doc.omega) throw DocumentError(line, "omega given twice");
          doc.omega = std::array<Number, 2>{parse_number(w[1], line), parse_number(w[2], line)};
          break;
        }
        if (!member(kMotionKeys, key)) throw DocumentError(line, "unknown motion key '" + key + "'");
        if (!seen.insert(key).second) throw DocumentError(line, key + " given twice");
        std::vector<Number> values;
        for (std::size_t k = 1; k < w.size(); ++k) values.push_back(parse_number(w[k], line));
        doc.lists[key] = std::move(values);
        break;
      }
    }
  }
  if (!have_mode) throw DocumentError(0, "empty document");
  if (doc.mode == DocumentMode::Germ) {
    for (const auto& t : doc.terms) {
      if (t.i + t.j > doc.order) {
        throw DocumentError(0, "term u^" + std::to_string(t.i) + " v^" + std::to_string(t.j) + " exceeds order " +
                                   std::to_string(doc.order));
      }
    }
  }
  if (doc.mode == DocumentMode::Umbrella) {
    for (const char* k : {"c3", "d02"}) {
      if (!doc.scalars.count(k)) throw DocumentError(0, std::string("umbrella document needs ") + k);
    }
  }
  return doc;
}

std::string serialize_document(const GermInputDocument& doc) {
  std::ostringstream os;
  os << "mode " << to_string(doc.mode) << '\n';
  os << "order " << doc.order << '\n';
  switch (doc.mode) {
    case DocumentMode::Germ:
      for (const auto& t : doc.terms) {
        os << "term " << t.component << ' ' << t.i << ' ' << t.j << ' ' << number_text(t.value) << '\n';
      }
      break;
    case DocumentMode::Umbrella:
      for (const char* k : kUmbrellaKeys) {
        const auto it = doc.scalars.find(k);
        if (it != doc.scalars.end()) os << k << ' ' << number_text(it->second) << '\n';
      }
      break;
    case DocumentMode::Motion:
      for (const char* k : kMotionKeys) {
        const auto it = doc.lists.find(k);
        if (it == doc.lists.end()) continue;
        os << k;
        for (const auto& n : it->second) os << ' ' << number_text(n);
        os << '\n';
      }
      if (doc.omega) os << "omega " << number_text((*doc.omega)[0]) << ' ' << number_text((*doc.omega)[1]) << '\n';
      break;
  }
  return os.str();
}

GermInputDocument read_document_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DocumentError(0, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

MapJet2<QuadScalar> germ_jet(const GermInputDocument& doc, int order) {
  if (doc.mode != DocumentMode::Germ) throw DocumentError(0, "not a germ document");
  Jet2<QuadScalar> f1(order), f2(order);
  for (const auto& t : doc.terms) {
    if (t.i + t.j > order) continue;
    (t.component == 1 ? f1 : f2).coeff(t.i, t.j) = QuadScalar(t.value.value);
  }
  return {f1, f2};
}

UmbrellaForm umbrella_form(const GermInputDocument& doc) {
  if (doc.mode != DocumentMode::Umbrella) throw DocumentError(0, "not an umbrella document");
  auto get = [&](const char* k) {
    const auto it = doc.scalars.find(k);
    return it == doc.scalars.end() ? Rational(0) : it->second.value;
  };
  UmbrellaForm w;
  w.c3 = get("c3");
  w.d20 = get("d20");
  w.d11 = get("d11");
  w.d02 = get("d02");
  w.d30 = get("d30");
  w.d21 = get("d21");
  w.d12 = get("d12");
  w.d03 = get("d03");
  return w;
}

MotionSpec motion_spec(const GermInputDocument& doc) {
  if (doc.mode != DocumentMode::Motion) throw DocumentError(0, "not a motion document");
  auto get = [&](const char* k) {
    std::vector<Rational> out;
    const auto it = doc.lists.find(k);
    if (it != doc.lists.end())
      for (const auto& n : it->second) out.push_back(n.value);
    return out;
  };
  MotionSpec m;
  m.a1 = get("a1");
  m.a2 = get("a2");
  m.p = get("p");
  m.b1 = get("b1");
  m.b2 = get("b2");
  m.q = get("q");
  if (doc.omega) {
    m.w1 = (*doc.omega)[0].value;
    m.w2 = (*doc.omega)[1].value;
  }
  return m;
}

std::string rational_to_decimal(const Rational& q) {
  mpz_class den = q.get_den();
  int twos = 0, fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2) != 0) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5) != 0) {
    den /= 5;
    ++fives;
  }
  if (den != 1) throw std::invalid_argument("rational_to_decimal: no finite decimal expansion");
  const int digits = std::max(twos, fives);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const mpz_class scaled = q.get_num() * scale / q.get_den();
  const bool negative = sgn(scaled) < 0;
  std::string s = mpz_class(abs(scaled)).get_str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits - s.size() + 1), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  } else {
    s += ".0";
  }
  return negative ? "-" + s : s;
}

}  // namespace corank2
