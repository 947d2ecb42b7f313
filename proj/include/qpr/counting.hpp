#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qpr/coefficient.hpp"
#include "qpr/core.hpp"

namespace qpr {

struct CountSample {
  std::uint64_t q = 0;
  std::uint64_t count = 0;

  friend bool operator==(const CountSample&, const CountSample&) = default;
};

/// Univariate polynomial in q interpolated through point counts.
struct CountingPolynomial {
  enum class Status { Validated, NonPolynomialCount };

  std::vector<Rational> coefficients;  // ascending powers of q
  std::vector<CountSample> samples;
  std::vector<CountSample> validation;
  Status status = Status::NonPolynomialCount;
  std::string failure;                 // empty when validated
  std::optional<CountSample> witness;  // first failing validation sample

  bool validated() const { return status == Status::Validated; }
  std::size_t degree() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
  Rational operator()(const Rational& q) const;
  /// E.g. `q^2 + 4*q + 1`.
  std::string to_string() const;
};

/// Sum over vertices of e_p (d_p - e_p), the dimension of the ambient product.
unsigned counting_degree_bound(const Representation& rep, const DimensionVector& e);

/// Interpolates exactly through `samples` and checks the result against
/// `validation`, the degree bound and integrality at q = 0..max sample.
/// Throws DomainError for duplicate sample points, or for fewer than
/// degree_bound + 1 samples when no validation sample is supplied.
CountingPolynomial fit_counting_polynomial(const std::vector<CountSample>& samples,
                                           const std::vector<CountSample>& validation,
                                           unsigned degree_bound);

/// Value at q = 1. Throws ConsistencyError if the polynomial did not
/// validate or the value is not an integer.
long euler_characteristic(const CountingPolynomial& polynomial);

}  // namespace qpr
