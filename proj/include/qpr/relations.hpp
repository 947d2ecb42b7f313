#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "qpr/combinatorics.hpp"
#include "qpr/core.hpp"
#include "qpr/errors.hpp"
#include "qpr/field.hpp"
#include "qpr/polynomial.hpp"

namespace qpr {

struct RelationLabel {
  enum class Kind { Quiver, Classical };

  Kind kind = Kind::Quiver;
  Path path;               // Kind::Quiver (any length, trivial paths included)
  std::size_t vertex = 0;  // Kind::Classical
  IndexSubset I;
  IndexSubset J;

  /// `E(a;{};{1,2,3})` or `P(v;{1};{2,3,4})`, indices in the given labeling.
  std::string to_string(const Representation& rep, Labeling labeling) const;
};

struct LabeledRelation {
  RelationLabel label;
  RelationPolynomial polynomial;
};

struct RelationSet {
  DimensionVector e;
  std::size_t max_path_len = 1;
  bool include_classical = false;
  /// Reduced list: zero polynomials dropped, proportional duplicates removed
  /// (the first label in generation order survives), sign-normalized.
  std::vector<LabeledRelation> relations;
  /// Every nonzero generated relation, before deduplication.
  std::vector<LabeledRelation> generated;
  /// Number of (path, I, J) or (vertex, I, J) triples evaluated.
  std::size_t invocations = 0;
};

/// E(v,I,J) = sum_{i notin I, j in J} (-1)^{eps(i,I)+eps(j,J)} m_{v,j,i}
///            Delta_{I+i} Delta_{J-j}, sign-normalized.
/// Requires |I| = e_p - 1 at the source and |J| = e_q + 1 at the target.
RelationPolynomial quiver_relation(const Representation& rep, const DimensionVector& e,
                                   const std::string& arrow, const IndexSubset& I,
                                   const IndexSubset& J);

/// Same formula with the entries of path_matrix(path).
RelationPolynomial higher_order_relation(const Representation& rep, const DimensionVector& e,
                                         const Path& path, const IndexSubset& I,
                                         const IndexSubset& J);

/// The formula for an explicit d_q x d_p matrix; I lives at the source
/// vertex and J at the target vertex. Not sign-normalized.
RelationPolynomial relation_from_matrix(const CoefficientMatrix& m, const IndexSubset& I,
                                        const IndexSubset& J);

/// Classical Pluecker relations of Gr(k, d) at `vertex`, zero polynomials
/// dropped and proportional duplicates removed, in (I, J) order.
std::vector<RelationPolynomial> classical_relations(std::size_t vertex, unsigned d, unsigned k);
std::vector<RelationPolynomial> classical_relations(const Representation& rep,
                                                    const DimensionVector& e,
                                                    const std::string& vertex);

/// Classical relations per vertex (optional), then E(pi,I,J) for every path
/// of length 1..max_path_len in enumerate_paths order. `threads` <= 0 uses
/// the OpenMP default; output does not depend on it.
RelationSet all_relations(const Representation& rep, const DimensionVector& e,
                          std::size_t max_path_len, bool include_classical, int threads = 0);

/// Sets Delta := 0 for `zeros` and Delta := 1 for the chosen variable per
/// vertex, drops zero results and sign-normalizes.
std::vector<RelationPolynomial> schubert_dehomogenize(
    const std::vector<RelationPolynomial>& relations, const std::set<PlueckerVariable>& zeros,
    const std::map<std::size_t, PlueckerVariable>& ones);

// ---------------------------------------------------------------------------
// Chart formulas. A Pluecker vector at a vertex with basis size d and
// subspace dimension e is indexed by subset_rank of the e-subsets.

template <class Field>
using PlueckerVector = std::vector<typename Field::value_type>;

namespace detail {
template <class Field>
const typename Field::value_type& delta_at(const PlueckerVector<Field>& delta,
                                           const IndexSubset& subset, unsigned d) {
  return delta.at(subset_rank(subset, d));
}
}  // namespace detail

/// Spanning vectors n_{i0} (i0 in I0) of the subspace with Pluecker vector
/// `delta`: delta_{i,i0} on I0, (-1)^{eps(i,I)+eps(i0,I)} Delta_{I+i}/Delta_{I0}
/// off I0, where I = I0 - {i0}. Throws ChartError if Delta_{I0} = 0.
template <class Field>
std::vector<std::vector<typename Field::value_type>> chart_basis(const PlueckerVector<Field>& delta,
                                                                 unsigned d, unsigned e,
                                                                 const IndexSubset& I0,
                                                                 const Field& field) {
  if (I0.size() != e) throw DomainError("chart pivot must have size e");
  check_subset(I0, d);
  const auto& pivot = detail::delta_at<Field>(delta, I0, d);
  if (is_zero(pivot)) throw ChartError("Pluecker coordinate of the chart pivot vanishes");
  const typename Field::value_type pivot_inverse = field.one() / pivot;
  std::vector<std::vector<typename Field::value_type>> basis;
  for (unsigned i0 : I0.members) {
    const IndexSubset I = I0.without(i0);
    std::vector<typename Field::value_type> n(d, field.zero());
    for (unsigned i = 1; i <= d; ++i) {
      if (I0.contains(i)) {
        n[i - 1] = (i == i0) ? field.one() : field.zero();
        continue;
      }
      typename Field::value_type value = detail::delta_at<Field>(delta, I.with(i), d) * pivot_inverse;
      if (sign_of_parity(epsilon(i, I, d) + epsilon(i0, I, d)) < 0) value = -value;
      n[i - 1] = value;
    }
    basis.push_back(std::move(n));
  }
  return basis;
}

/// Coefficients n_{j0,j} (j in J0) with v_{j0} = sum_j v_j n_{j0,j} for v in
/// the subspace: (-1)^{eps(j0,J)+eps(j,J)+1} Delta_{J-j}/Delta_{J0}, J = J0+j0.
template <class Field>
std::map<unsigned, typename Field::value_type> dual_chart_coefficients(
    const PlueckerVector<Field>& delta, unsigned d, unsigned e, const IndexSubset& J0, unsigned j0,
    const Field& field) {
  if (J0.size() != e) throw DomainError("chart pivot must have size e");
  check_subset(J0, d);
  if (j0 < 1 || j0 > d || J0.contains(j0)) throw DomainError("j0 must be a basis index outside J0");
  const auto& pivot = detail::delta_at<Field>(delta, J0, d);
  if (is_zero(pivot)) throw ChartError("Pluecker coordinate of the chart pivot vanishes");
  const typename Field::value_type pivot_inverse = field.one() / pivot;
  const IndexSubset J = J0.with(j0);
  std::map<unsigned, typename Field::value_type> out;
  for (unsigned j : J0.members) {
    typename Field::value_type value = detail::delta_at<Field>(delta, J.without(j), d) * pivot_inverse;
    if (sign_of_parity(epsilon(j0, J, d) + epsilon(j, J, d) + 1) < 0) value = -value;
    out.emplace(j, value);
  }
  return out;
}

/// dual_chart_coefficients for every j0 outside J0 (empty when e = d).
template <class Field>
std::map<unsigned, std::map<unsigned, typename Field::value_type>> dual_chart_table(
    const PlueckerVector<Field>& delta, unsigned d, unsigned e, const IndexSubset& J0,
    const Field& field) {
  std::map<unsigned, std::map<unsigned, typename Field::value_type>> out;
  for (unsigned j0 = 1; j0 <= d; ++j0) {
    if (!J0.contains(j0)) out.emplace(j0, dual_chart_coefficients(delta, d, e, J0, j0, field));
  }
  return out;
}

/// For every (e+1)-subset J the linear form v -> sum_{j in J} (-1)^{eps(j,J)}
/// v_j Delta_{J-j}, as a dense coefficient vector of length d. A vector lies
/// in the subspace iff all forms vanish on it.
template <class Field>
std::vector<std::vector<typename Field::value_type>> membership_forms(
    const PlueckerVector<Field>& delta, unsigned d, unsigned e, const Field& field) {
  std::vector<std::vector<typename Field::value_type>> forms;
  if (e + 1 > d) return forms;
  for (const auto& J : k_subsets(0, d, e + 1)) {
    std::vector<typename Field::value_type> form(d, field.zero());
    for (unsigned j : J.members) {
      typename Field::value_type value = detail::delta_at<Field>(delta, J.without(j), d);
      if (sign_of_parity(epsilon(j, J, d)) < 0) value = -value;
      form[j - 1] = value;
    }
    forms.push_back(std::move(form));
  }
  return forms;
}

/// Symbolic entry of a chart vector: 0, 1 or sign * Delta_num / Delta_den.
struct ChartEntry {
  enum class Kind { Zero, One, Ratio };
  Kind kind = Kind::Zero;
  int sign = 1;
  PlueckerVariable numerator;
  PlueckerVariable denominator;
};

/// Symbolic form of chart_basis: one row of d entries per i0 in I0.
std::vector<std::vector<ChartEntry>> chart_formulas(std::size_t vertex, unsigned d,
                                                    const IndexSubset& I0);
/// Symbolic form of dual_chart_table: j0 -> (j -> entry).
std::map<unsigned, std::map<unsigned, ChartEntry>> dual_chart_formulas(std::size_t vertex,
                                                                        unsigned d,
                                                                        const IndexSubset& J0);

std::string render_chart_entry(const ChartEntry& entry, const Representation& rep,
                               Labeling labeling);

}  // namespace qpr
