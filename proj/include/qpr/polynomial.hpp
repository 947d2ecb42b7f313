#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qpr/coefficient.hpp"
#include "qpr/combinatorics.hpp"
#include "qpr/core.hpp"
#include "qpr/errors.hpp"
#include "qpr/field.hpp"

namespace qpr {

/// Delta_I for an e_p-subset I of the basis at vertex p.
using PlueckerVariable = IndexSubset;

/// Sorted list of variables (with repetition).
using Monomial = std::vector<PlueckerVariable>;

enum class Labeling { Local, Global };

/// Sparse polynomial in Pluecker variables with parametric rational
/// coefficients. Terms are kept in lexicographic order of their sorted
/// variable lists; zero coefficients are never stored.
class RelationPolynomial {
 public:
  using TermMap = std::map<Monomial, Coefficient>;

  RelationPolynomial() = default;
  static RelationPolynomial variable(const PlueckerVariable& v);
  static RelationPolynomial constant(const Coefficient& c);

  void add_term(Monomial monomial, const Coefficient& coefficient);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::set<PlueckerVariable> variables() const;
  std::set<std::string> parameters() const;
  std::size_t total_degree() const;

  /// Multiplied by -1 if the first coefficient's leading rational is negative.
  RelationPolynomial sign_normalized() const;
  /// Divided by the first coefficient's leading rational.
  RelationPolynomial monic() const;

  /// Replaces the given variables by coefficients (0 and 1 for Schubert charts).
  RelationPolynomial substitute(const std::map<PlueckerVariable, Coefficient>& values) const;
  /// Specializes the listed parameters in every coefficient.
  RelationPolynomial specialize_parameters(const ParamAssignment& values) const;

  RelationPolynomial operator-() const;
  RelationPolynomial& operator+=(const RelationPolynomial& other);
  RelationPolynomial& operator-=(const RelationPolynomial& other);
  RelationPolynomial& operator*=(const RelationPolynomial& other);
  RelationPolynomial& operator*=(const Coefficient& scalar);
  friend RelationPolynomial operator+(RelationPolynomial a, const RelationPolynomial& b) { return a += b; }
  friend RelationPolynomial operator-(RelationPolynomial a, const RelationPolynomial& b) { return a -= b; }
  friend RelationPolynomial operator*(RelationPolynomial a, const RelationPolynomial& b) { return a *= b; }
  friend RelationPolynomial operator*(RelationPolynomial a, const Coefficient& c) { return a *= c; }

  friend bool operator==(const RelationPolynomial& a, const RelationPolynomial& b) { return a.terms_ == b.terms_; }

  template <class Field>
  typename Field::value_type evaluate(
      const std::map<PlueckerVariable, typename Field::value_type>& point,
      const std::map<std::string, typename Field::value_type>& params, const Field& field) const;

 private:
  TermMap terms_;
};

/// True iff a = c * b for a nonzero rational c.
bool proportional_eq(const RelationPolynomial& a, const RelationPolynomial& b);

/// `Delta[3,5]` (global) or `Delta[p;1,2]` (local). The empty subset is
/// always written `Delta[p;]`.
std::string render_variable(const PlueckerVariable& v, const Representation& rep, Labeling labeling);

/// Parses either rendering back. Throws DomainError.
PlueckerVariable parse_variable(std::string_view text, const Representation& rep);

/// Deterministic rendering in canonical term order, e.g.
/// `Delta[1,3]*Delta[5] - Delta[2,3]*Delta[4]`; "0" for the zero polynomial.
std::string canonical_string(const RelationPolynomial& poly, const Representation& rep,
                             Labeling labeling);

/// Same rendering with a caller-supplied variable printer.
template <class VariablePrinter>
std::string render_polynomial(const RelationPolynomial& poly, VariablePrinter&& print_variable);

template <class Field>
typename Field::value_type evaluate(
    const RelationPolynomial& poly,
    const std::map<PlueckerVariable, typename Field::value_type>& point,
    const std::map<std::string, typename Field::value_type>& params, const Field& field) {
  return poly.evaluate(point, params, field);
}

template <class Field>
typename Field::value_type RelationPolynomial::evaluate(
    const std::map<PlueckerVariable, typename Field::value_type>& point,
    const std::map<std::string, typename Field::value_type>& params, const Field& field) const {
  for (const auto& [v, value] : point) field.check(value);
  for (const auto& [name, value] : params) field.check(value);
  auto result = field.zero();
  for (const auto& [monomial, coefficient] : terms_) {
    auto term = coefficient.evaluate(params, field);
    for (const auto& v : monomial) {
      auto it = point.find(v);
      if (it == point.end()) throw DomainError("Pluecker variable has no value at this point");
      term = term * it->second;
    }
    result = result + term;
  }
  return result;
}

namespace detail {
std::string render_term(const Coefficient& coefficient, const std::string& monomial, bool first);
}

template <class VariablePrinter>
std::string render_polynomial(const RelationPolynomial& poly, VariablePrinter&& print_variable) {
  if (poly.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [monomial, coefficient] : poly.terms()) {
    std::string factors;
    for (std::size_t k = 0; k < monomial.size();) {
      std::size_t run = 1;
      while (k + run < monomial.size() && monomial[k + run] == monomial[k]) ++run;
      if (!factors.empty()) factors += '*';
      factors += print_variable(monomial[k]);
      if (run > 1) factors += '^' + std::to_string(run);
      k += run;
    }
    out += detail::render_term(coefficient, factors, first);
    first = false;
  }
  return out;
}

}  // namespace qpr
