#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qpr/coefficient.hpp"
#include "qpr/core.hpp"
#include "qpr/field.hpp"
#include "qpr/polynomial.hpp"
#include "qpr/relations.hpp"

namespace qpr {

/// An e-dimensional subspace of F_p^d in reduced row-echelon form.
struct SubspaceRREF {
  std::uint32_t prime = 2;
  unsigned d = 0;
  std::vector<unsigned> pivots;      // 1-based pivot columns, increasing
  std::vector<std::uint32_t> rows;   // e x d, row-major

  unsigned dim() const { return static_cast<unsigned>(pivots.size()); }
  std::uint32_t at(unsigned r, unsigned c) const { return rows[r * d + c]; }
  std::span<const std::uint32_t> row(unsigned r) const { return {rows.data() + r * d, d}; }
  /// Row-space membership; `v` has length d.
  bool contains(std::span<const std::uint32_t> v) const;

  friend auto operator<=>(const SubspaceRREF&, const SubspaceRREF&) = default;
  friend bool operator==(const SubspaceRREF&, const SubspaceRREF&) = default;
};

/// Number of e-dimensional subspaces of F_q^d.
std::uint64_t gaussian_binomial(unsigned d, unsigned e, std::uint64_t q);

/// Every e-dimensional subspace of F_p^d exactly once: pivot sets in
/// lexicographic order, free entries as a row-major odometer.
std::vector<SubspaceRREF> enumerate_subspaces(std::uint32_t p, unsigned d, unsigned e);

/// Row space of arbitrary rows (length d each) in normal form.
SubspaceRREF row_space(std::uint32_t p, unsigned d, std::vector<std::vector<std::uint32_t>> rows);

/// Rank of a list of vectors over F_p.
unsigned rank_mod(std::uint32_t p, std::vector<std::vector<std::uint32_t>> rows);

/// Maximal minors in lexicographic order of the column subsets, scaled so
/// that the first nonzero entry is 1.
std::vector<std::uint32_t> pluecker_of_subspace(const SubspaceRREF& subspace);

/// Scales a nonzero vector so its first nonzero entry is 1.
void normalize_projective(std::vector<std::uint32_t>& v, std::uint32_t p);

/// A representation whose parameters have been substituted and reduced mod p.
struct FpRepresentation {
  struct ArrowMap {
    std::string id;
    std::size_t source = 0;
    std::size_t target = 0;
    std::vector<std::uint32_t> matrix;  // d_target x d_source, row-major
  };
  std::uint32_t prime = 2;
  std::vector<std::string> vertices;
  std::vector<unsigned> dims;
  std::vector<ArrowMap> arrows;

  /// A_v * x for x of length d_source.
  std::vector<std::uint32_t> apply(const ArrowMap& arrow, std::span<const std::uint32_t> x) const;
};

/// Throws DomainError for an unassigned parameter or a denominator divisible by p.
FpRepresentation specialize(const Representation& rep, const ParamAssignment& params,
                            std::uint32_t p);

/// Rank test: for each arrow v: p -> q, rank(S_q stacked with A_v(rows of S_p)) = dim S_q.
bool is_subrepresentation(const FpRepresentation& rep, const std::vector<SubspaceRREF>& tuple);

/// Per-vertex normalized Pluecker vectors.
using GrassmannPoint = std::vector<std::vector<std::uint32_t>>;

struct PointSet {
  std::uint32_t prime = 2;
  std::vector<std::size_t> shape;        // C(d_p, e_p) per vertex
  std::vector<GrassmannPoint> points;    // sorted, unique

  std::size_t size() const { return points.size(); }
  bool contains(const GrassmannPoint& x) const;
};

struct SetComparison {
  std::vector<GrassmannPoint> missing;  // in `expected` only
  std::vector<GrassmannPoint> extra;    // in `actual` only
  bool equal() const { return missing.empty() && extra.empty(); }
};

/// Throws DomainError if primes or shapes differ.
SetComparison compare_sets(const PointSet& expected, const PointSet& actual);

std::string render_point(const GrassmannPoint& point);

/// iota of every subrepresentation of dimension vector e over F_p.
PointSet subrep_points(const Representation& rep, const DimensionVector& e, std::uint32_t p,
                       const ParamAssignment& params = {}, int threads = 0);

std::uint64_t count_subrepresentations(const Representation& rep, const DimensionVector& e,
                                       std::uint32_t p, const ParamAssignment& params = {},
                                       int threads = 0);

/// Points of prod Gr(e_p, d_p)(F_p) where every relation vanishes.
PointSet variety_points(const std::vector<RelationPolynomial>& relations, const Representation& rep,
                        const DimensionVector& e, std::uint32_t p,
                        const ParamAssignment& params = {}, int threads = 0);
PointSet variety_points(const RelationSet& relations, const Representation& rep,
                        const DimensionVector& e, std::uint32_t p,
                        const ParamAssignment& params = {}, int threads = 0);

/// Plain polynomial list of a RelationSet's reduced relations.
std::vector<RelationPolynomial> polynomials_of(const RelationSet& relations);

/// Evaluates a Pluecker point at a variable.
std::uint32_t coordinate(const GrassmannPoint& point, const PlueckerVariable& v, unsigned d);

namespace reference {

/// Serial Cartesian-product enumeration using is_subrepresentation.
PointSet subrep_points(const Representation& rep, const DimensionVector& e, std::uint32_t p,
                       const ParamAssignment& params = {});

/// Serial Cartesian-product enumeration using RelationPolynomial::evaluate.
PointSet variety_points(const std::vector<RelationPolynomial>& relations, const Representation& rep,
                        const DimensionVector& e, std::uint32_t p,
                        const ParamAssignment& params = {});

}  // namespace reference

}  // namespace qpr
