#include "qpr/coefficient.hpp"

#include <cctype>
#include <sstream>

#include "qpr/errors.hpp"

namespace qpr {

void throw_unassigned(const std::string& name) {
  throw DomainError("parameter '" + name + "' has no value");
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw DomainError("empty number");
  std::size_t pos = 0;
  if (s[0] == '+' || s[0] == '-') pos = 1;
  bool seen_digit = false;
  bool seen_slash = false;
  bool digit_after_slash = false;
  for (std::size_t k = pos; k < s.size(); ++k) {
    char c = s[k];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      seen_digit = true;
      if (seen_slash) digit_after_slash = true;
    } else if (c == '/' && seen_digit && !seen_slash) {
      seen_slash = true;
    } else {
      throw DomainError("malformed number '" + s + "'");
    }
  }
  if (!seen_digit || (seen_slash && !digit_after_slash)) {
    throw DomainError("malformed number '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  Rational r;
  if (r.set_str(s, 10) != 0) throw DomainError("malformed number '" + s + "'");
  if (r.get_den() == 0) throw DomainError("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

bool is_identifier(std::string_view text) {
  if (text.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(text[0])) || text[0] == '_')) return false;
  for (char c : text) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

Coefficient::Coefficient(long value) : Coefficient(Rational(value)) {}

Coefficient::Coefficient(const Rational& value) {
  Rational reduced = value;
  reduced.canonicalize();
  if (sgn(reduced) != 0) terms_.emplace(ParamMonomial{}, reduced);
}

Coefficient Coefficient::parameter(const std::string& name) {
  Coefficient c;
  c.terms_.emplace(ParamMonomial{{name, 1}}, Rational(1));
  return c;
}

bool Coefficient::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational Coefficient::constant_value() const {
  if (!is_constant()) throw DomainError("coefficient '" + to_string() + "' is not a constant");
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

Rational Coefficient::leading_rational() const {
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

std::set<std::string> Coefficient::parameters() const {
  std::set<std::string> names;
  for (const auto& [m, c] : terms_) {
    for (const auto& [name, e] : m) names.insert(name);
  }
  return names;
}

Rational Coefficient::specialize(const ParamAssignment& values) const {
  Coefficient c = partially_specialize(values);
  if (!c.is_constant()) throw_unassigned(*c.parameters().begin());
  return c.constant_value();
}

Coefficient Coefficient::partially_specialize(const ParamAssignment& values) const {
  Coefficient result;
  for (const auto& [m, c] : terms_) {
    ParamMonomial rest;
    Rational factor = c;
    for (const auto& [name, e] : m) {
      auto it = values.find(name);
      if (it == values.end()) {
        rest.emplace(name, e);
        continue;
      }
      for (unsigned k = 0; k < e; ++k) factor *= it->second;
    }
    result.add_term(rest, factor);
  }
  return result;
}

void Coefficient::add_term(const ParamMonomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Coefficient Coefficient::operator-() const {
  Coefficient r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Coefficient& Coefficient::operator+=(const Coefficient& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Coefficient& Coefficient::operator*=(const Coefficient& other) {
  Coefficient product;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      ParamMonomial m = ma;
      for (const auto& [name, e] : mb) m[name] += e;
      product.add_term(m, ca * cb);
    }
  }
  *this = std::move(product);
  return *this;
}

namespace {
std::string monomial_string(const ParamMonomial& m) {
  std::string out;
  for (const auto& [name, e] : m) {
    if (!out.empty()) out += '*';
    out += name;
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}
}  // namespace

std::string Coefficient::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational magnitude = abs(c);
    if (sgn(c) < 0) {
      out += '-';
    } else if (!first) {
      out += '+';
    }
    if (m.empty()) {
      out += magnitude.get_str();
    } else {
      if (magnitude != 1) out += magnitude.get_str() + "*";
      out += monomial_string(m);
    }
    first = false;
  }
  return out;
}

bool Coefficient::needs_parentheses() const { return terms_.size() > 1; }

namespace {

class CoefficientParser {
 public:
  explicit CoefficientParser(std::string_view text) : text_(text) {}

  Coefficient parse() {
    if (text_.empty()) throw DomainError("empty entry");
    Coefficient result;
    bool first = true;
    while (pos_ < text_.size()) {
      int sign = 1;
      if (text_[pos_] == '+' || text_[pos_] == '-') {
        sign = text_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Coefficient term = parse_term();
      result += sign < 0 ? -term : term;
      first = false;
    }
    return result;
  }

 private:
  Coefficient parse_term() {
    Coefficient term = parse_factor();
    while (pos_ < text_.size() && text_[pos_] == '*') {
      ++pos_;
      term *= parse_factor();
    }
    return term;
  }

  Coefficient parse_factor() {
    if (pos_ >= text_.size()) fail("missing factor");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/')) {
        ++pos_;
      }
      return Coefficient(parse_rational(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      Coefficient base = Coefficient::parameter(std::string(text_.substr(start, pos_ - start)));
      if (pos_ < text_.size() && text_[pos_] == '^') {
        ++pos_;
        std::size_t estart = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (estart == pos_) fail("missing exponent");
        unsigned e = static_cast<unsigned>(std::stoul(std::string(text_.substr(estart, pos_ - estart))));
        Coefficient power(1L);
        for (unsigned k = 0; k < e; ++k) power *= base;
        return power;
      }
      return base;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("bad entry '" + std::string(text_) + "': " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Coefficient parse_coefficient(std::string_view text) { return CoefficientParser(text).parse(); }

}  // namespace qpr
