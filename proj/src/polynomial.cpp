#include "qpr/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace qpr {

RelationPolynomial RelationPolynomial::variable(const PlueckerVariable& v) {
  RelationPolynomial p;
  p.add_term({v}, Coefficient(1L));
  return p;
}

RelationPolynomial RelationPolynomial::constant(const Coefficient& c) {
  RelationPolynomial p;
  p.add_term({}, c);
  return p;
}

void RelationPolynomial::add_term(Monomial monomial, const Coefficient& coefficient) {
  if (coefficient.is_zero()) return;
  std::sort(monomial.begin(), monomial.end());
  auto [it, inserted] = terms_.emplace(std::move(monomial), coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::set<PlueckerVariable> RelationPolynomial::variables() const {
  std::set<PlueckerVariable> out;
  for (const auto& [m, c] : terms_) out.insert(m.begin(), m.end());
  return out;
}

std::set<std::string> RelationPolynomial::parameters() const {
  std::set<std::string> out;
  for (const auto& [m, c] : terms_) {
    auto names = c.parameters();
    out.insert(names.begin(), names.end());
  }
  return out;
}

std::size_t RelationPolynomial::total_degree() const {
  std::size_t degree = 0;
  for (const auto& [m, c] : terms_) degree = std::max(degree, m.size());
  return degree;
}

RelationPolynomial RelationPolynomial::sign_normalized() const {
  if (!terms_.empty() && sgn(terms_.begin()->second.leading_rational()) < 0) return -*this;
  return *this;
}

RelationPolynomial RelationPolynomial::monic() const {
  if (terms_.empty()) return *this;
  Rational lead = terms_.begin()->second.leading_rational();
  RelationPolynomial out = *this;
  Coefficient scale(Rational(1) / lead);
  for (auto& [m, c] : out.terms_) c *= scale;
  return out;
}

RelationPolynomial RelationPolynomial::substitute(
    const std::map<PlueckerVariable, Coefficient>& values) const {
  RelationPolynomial out;
  for (const auto& [m, c] : terms_) {
    Coefficient factor = c;
    Monomial rest;
    for (const auto& v : m) {
      auto it = values.find(v);
      if (it == values.end()) {
        rest.push_back(v);
      } else {
        factor *= it->second;
      }
    }
    out.add_term(std::move(rest), factor);
  }
  return out;
}

RelationPolynomial RelationPolynomial::specialize_parameters(const ParamAssignment& values) const {
  RelationPolynomial out;
  for (const auto& [m, c] : terms_) out.add_term(m, c.partially_specialize(values));
  return out;
}

RelationPolynomial RelationPolynomial::operator-() const {
  RelationPolynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

RelationPolynomial& RelationPolynomial::operator+=(const RelationPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

RelationPolynomial& RelationPolynomial::operator-=(const RelationPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

RelationPolynomial& RelationPolynomial::operator*=(const RelationPolynomial& other) {
  RelationPolynomial product;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      product.add_term(std::move(m), ca * cb);
    }
  }
  *this = std::move(product);
  return *this;
}

RelationPolynomial& RelationPolynomial::operator*=(const Coefficient& scalar) {
  RelationPolynomial product;
  for (const auto& [m, c] : terms_) product.add_term(m, c * scalar);
  *this = std::move(product);
  return *this;
}

bool proportional_eq(const RelationPolynomial& a, const RelationPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.monic() == b.monic();
}

std::string render_variable(const PlueckerVariable& v, const Representation& rep, Labeling labeling) {
  const std::string& vertex = rep.quiver.vertices.at(v.vertex);
  std::string out = "Delta[";
  if (labeling == Labeling::Local || v.members.empty()) {
    out += vertex + ";";
    for (std::size_t k = 0; k < v.members.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(v.members[k]);
    }
  } else {
    for (std::size_t k = 0; k < v.members.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(rep.global_label(v.vertex, v.members[k]));
    }
  }
  return out + "]";
}

namespace {
std::vector<unsigned> parse_index_list(std::string_view text, std::string_view whole) {
  std::vector<unsigned> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw DomainError("bad index list in '" + std::string(whole) + "'");
    }
    out.push_back(static_cast<unsigned>(std::stoul(std::string(item))));
    pos = end + 1;
    if (end == text.size()) break;
  }
  return out;
}
}  // namespace

PlueckerVariable parse_variable(std::string_view text, const Representation& rep) {
  constexpr std::string_view prefix = "Delta[";
  if (text.substr(0, prefix.size()) != prefix || text.empty() || text.back() != ']') {
    throw DomainError("expected Delta[...], got '" + std::string(text) + "'");
  }
  std::string_view inner = text.substr(prefix.size(), text.size() - prefix.size() - 1);
  PlueckerVariable v;
  auto semicolon = inner.find(';');
  if (semicolon != std::string_view::npos) {
    std::string vertex(inner.substr(0, semicolon));
    auto index = rep.quiver.find_vertex(vertex);
    if (!index) throw DomainError("unknown vertex '" + vertex + "' in '" + std::string(text) + "'");
    v.vertex = *index;
    v.members = parse_index_list(inner.substr(semicolon + 1), text);
  } else {
    if (inner.empty()) throw DomainError("empty global subset needs a vertex: '" + std::string(text) + "'");
    bool first = true;
    for (unsigned label : parse_index_list(inner, text)) {
      auto local = rep.from_global_label(label);
      if (!local) throw DomainError("no basis vector labelled " + std::to_string(label));
      if (!first && local->first != v.vertex) {
        throw DomainError("labels of '" + std::string(text) + "' span several vertices");
      }
      v.vertex = local->first;
      v.members.push_back(local->second);
      first = false;
    }
  }
  std::sort(v.members.begin(), v.members.end());
  check_subset(v, rep.dim(v.vertex));
  return v;
}

std::string canonical_string(const RelationPolynomial& poly, const Representation& rep,
                             Labeling labeling) {
  return render_polynomial(poly, [&](const PlueckerVariable& v) { return render_variable(v, rep, labeling); });
}

namespace detail {

std::string render_term(const Coefficient& coefficient, const std::string& monomial, bool first) {
  int sign = 1;
  std::string body;
  if (coefficient.terms().size() == 1) {
    const auto& [params, r] = *coefficient.terms().begin();
    sign = sgn(r) < 0 ? -1 : 1;
    Coefficient magnitude = sign < 0 ? -coefficient : coefficient;
    if (params.empty()) {
      Rational m = abs(r);
      if (monomial.empty()) {
        body = m.get_str();
      } else {
        body = (m == 1) ? monomial : m.get_str() + "*" + monomial;
      }
    } else {
      body = magnitude.to_string();
      if (!monomial.empty()) body += "*" + monomial;
    }
  } else {
    body = "(" + coefficient.to_string() + ")";
    if (!monomial.empty()) body += "*" + monomial;
  }
  if (first) return (sign < 0 ? "-" : "") + body;
  return (sign < 0 ? " - " : " + ") + body;
}

}  // namespace detail

}  // namespace qpr
