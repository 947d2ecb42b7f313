#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <set>
#include <string>
#include <string_view>

namespace qpr {

using Rational = mpq_class;

/// Parses `a` or `a/b` (optional leading sign). Throws DomainError.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& value);

/// Product of parameters with exponents, e.g. lambda^2*mu -> {lambda:2, mu:1}.
using ParamMonomial = std::map<std::string, unsigned>;
using ParamAssignment = std::map<std::string, Rational>;

[[noreturn]] void throw_unassigned(const std::string& name);

/// A matrix entry: sparse polynomial with rational coefficients in named
/// parameters. Zero terms are never stored.
class Coefficient {
 public:
  using TermMap = std::map<ParamMonomial, Rational>;

  Coefficient() = default;
  Coefficient(long value);  // NOLINT(google-explicit-constructor)
  Coefficient(const Rational& value);  // NOLINT(google-explicit-constructor)

  static Coefficient parameter(const std::string& name);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant coefficient; throws DomainError otherwise.
  Rational constant_value() const;
  /// Rational factor of the first term in canonical order (0 for zero).
  Rational leading_rational() const;
  std::set<std::string> parameters() const;

  /// Substitutes every parameter. Throws DomainError on a missing value.
  Rational specialize(const ParamAssignment& values) const;
  /// Substitutes only the parameters present in `values`.
  Coefficient partially_specialize(const ParamAssignment& values) const;

  /// Evaluates in a field described by `field` (zero(), from_rational()).
  template <class Field>
  typename Field::value_type evaluate(
      const std::map<std::string, typename Field::value_type>& params,
      const Field& field) const;

  Coefficient operator-() const;
  Coefficient& operator+=(const Coefficient& other);
  Coefficient& operator-=(const Coefficient& other);
  Coefficient& operator*=(const Coefficient& other);
  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }

  friend bool operator==(const Coefficient& a, const Coefficient& b) { return a.terms_ == b.terms_; }
  friend bool operator<(const Coefficient& a, const Coefficient& b) { return a.terms_ < b.terms_; }

  /// Canonical text, parseable by parse_coefficient: `1/2-3*lambda`.
  std::string to_string() const;
  /// True when to_string() needs parentheses as a factor of a product.
  bool needs_parentheses() const;

 private:
  void add_term(const ParamMonomial& m, const Rational& c);
  TermMap terms_;
};

/// Parses an entry of the quiver file grammar: sums of `<rational>`,
/// `<rational>*<param>`, `<param>` terms, with optional `^k` exponents and
/// products of parameters. Throws DomainError with a column-free message.
Coefficient parse_coefficient(std::string_view text);

bool is_identifier(std::string_view text);

template <class Field>
typename Field::value_type Coefficient::evaluate(
    const std::map<std::string, typename Field::value_type>& params,
    const Field& field) const {
  auto result = field.zero();
  for (const auto& [monomial, c] : terms_) {
    auto term = field.from_rational(c);
    for (const auto& [name, exponent] : monomial) {
      auto it = params.find(name);
      if (it == params.end()) {
        throw_unassigned(name);
      }
      for (unsigned k = 0; k < exponent; ++k) {
        term = term * it->second;
      }
    }
    result = result + term;
  }
  return result;
}

}  // namespace qpr
