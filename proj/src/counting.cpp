#include "qpr/counting.hpp"

#include <algorithm>
#include <set>

#include "qpr/errors.hpp"

namespace qpr {

Rational CountingPolynomial::operator()(const Rational& q) const {
  Rational value = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) value = value * q + *it;
  return value;
}

std::string CountingPolynomial::to_string() const {
  std::string out;
  for (std::size_t k = coefficients.size(); k > 0; --k) {
    const Rational& c = coefficients[k - 1];
    const std::size_t power = k - 1;
    if (sgn(c) == 0) continue;
    const Rational magnitude = abs(c);
    std::string monomial = power == 0 ? "" : (power == 1 ? "q" : "q^" + std::to_string(power));
    std::string body;
    if (monomial.empty()) {
      body = magnitude.get_str();
    } else {
      body = magnitude == 1 ? monomial : magnitude.get_str() + "*" + monomial;
    }
    if (out.empty()) {
      out = (sgn(c) < 0 ? "-" : "") + body;
    } else {
      out += (sgn(c) < 0 ? " - " : " + ") + body;
    }
  }
  return out.empty() ? "0" : out;
}

unsigned counting_degree_bound(const Representation& rep, const DimensionVector& e) {
  unsigned bound = 0;
  for (std::size_t v = 0; v < rep.quiver.vertices.size(); ++v) {
    const unsigned k = e.at(rep.quiver.vertices[v]);
    bound += k * (rep.dim(v) - k);
  }
  return bound;
}

namespace {

/// Newton divided differences, expanded to monomial coefficients.
std::vector<Rational> interpolate(const std::vector<CountSample>& samples) {
  const std::size_t n = samples.size();
  std::vector<Rational> xs(n);
  std::vector<Rational> table(n);
  for (std::size_t k = 0; k < n; ++k) {
    xs[k] = Rational(static_cast<unsigned long>(samples[k].q));
    table[k] = Rational(static_cast<unsigned long>(samples[k].count));
  }
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t k = n - 1; k >= level; --k) {
      table[k] = (table[k] - table[k - 1]) / (xs[k] - xs[k - level]);
      if (k == level) break;
    }
  }
  // Horner on the Newton form: p = t0 + (x - x0)(t1 + (x - x1)(t2 + ...)).
  std::vector<Rational> coefficients{table[n - 1]};
  for (std::size_t k = n - 1; k > 0; --k) {
    std::vector<Rational> next(coefficients.size() + 1, Rational(0));
    for (std::size_t t = 0; t < coefficients.size(); ++t) {
      next[t + 1] += coefficients[t];
      next[t] -= xs[k - 1] * coefficients[t];
    }
    next[0] += table[k - 1];
    coefficients = std::move(next);
  }
  while (coefficients.size() > 1 && sgn(coefficients.back()) == 0) coefficients.pop_back();
  if (coefficients.size() == 1 && sgn(coefficients[0]) == 0) coefficients.clear();
  return coefficients;
}

}  // namespace

CountingPolynomial fit_counting_polynomial(const std::vector<CountSample>& samples,
                                           const std::vector<CountSample>& validation,
                                           unsigned degree_bound) {
  std::set<std::uint64_t> points;
  for (const auto& s : samples) {
    if (!points.insert(s.q).second) throw DomainError("duplicate sample point q = " + std::to_string(s.q));
  }
  if (samples.empty()) throw DomainError("no samples to interpolate");
  if (samples.size() < degree_bound + 1 && validation.empty()) {
    throw DomainError("need " + std::to_string(degree_bound + 1) +
                      " samples (or held-out validation samples), got " + std::to_string(samples.size()));
  }

  CountingPolynomial cp;
  cp.samples = samples;
  cp.validation = validation;
  cp.coefficients = interpolate(samples);
  cp.status = CountingPolynomial::Status::Validated;

  auto fail = [&](std::string why, std::optional<CountSample> witness) {
    cp.status = CountingPolynomial::Status::NonPolynomialCount;
    cp.failure = std::move(why);
    cp.witness = witness;
  };

  if (cp.degree() > degree_bound) {
    fail("interpolant has degree " + std::to_string(cp.degree()) + " > bound " + std::to_string(degree_bound),
         std::nullopt);
    return cp;
  }
  for (const auto& v : validation) {
    const Rational predicted = cp(Rational(static_cast<unsigned long>(v.q)));
    if (predicted != Rational(static_cast<unsigned long>(v.count))) {
      fail("predicted " + predicted.get_str() + " points at q = " + std::to_string(v.q) + ", counted " +
               std::to_string(v.count),
           v);
      return cp;
    }
  }
  std::uint64_t top = 0;
  for (const auto& s : samples) top = std::max(top, s.q);
  for (std::uint64_t q = 0; q <= top; ++q) {
    const Rational value = cp(Rational(static_cast<unsigned long>(q)));
    if (value.get_den() != 1) {
      fail("non-integer value " + value.get_str() + " at q = " + std::to_string(q), std::nullopt);
      return cp;
    }
  }
  return cp;
}

long euler_characteristic(const CountingPolynomial& polynomial) {
  if (!polynomial.validated()) {
    throw ConsistencyError("counting polynomial did not validate: " + polynomial.failure);
  }
  const Rational chi = polynomial(Rational(1));
  if (chi.get_den() != 1) throw ConsistencyError("Euler characteristic " + chi.get_str() + " is not an integer");
  return chi.get_num().get_si();
}

}  // namespace qpr
