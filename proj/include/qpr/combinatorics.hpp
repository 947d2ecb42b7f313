#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace qpr {

/// Strictly increasing subset of the local basis {1, ..., d} of one vertex.
/// `vertex` is the declaration index of the vertex in its quiver.
struct IndexSubset {
  std::size_t vertex = 0;
  std::vector<unsigned> members;

  std::size_t size() const { return members.size(); }
  bool contains(unsigned i) const;

  /// Copy with `i` inserted (i must not be a member).
  IndexSubset with(unsigned i) const;
  /// Copy with `i` removed (i must be a member).
  IndexSubset without(unsigned i) const;

  friend auto operator<=>(const IndexSubset&, const IndexSubset&) = default;
  friend bool operator==(const IndexSubset&, const IndexSubset&) = default;
};

/// Throws DomainError unless the members are strictly increasing in 1..d.
void check_subset(const IndexSubset& subset, unsigned d);

std::uint64_t binomial(unsigned n, unsigned k);

/// #{i' in I : i' <= i}. `i` may or may not be a member of I.
unsigned epsilon(unsigned i, const IndexSubset& subset, unsigned d);

/// (-1)^n as +1 / -1.
inline int sign_of_parity(unsigned n) { return (n % 2 == 0) ? 1 : -1; }

/// All k-subsets of {1..d} in lexicographic order. Throws DomainError if k > d.
std::vector<IndexSubset> k_subsets(std::size_t vertex, unsigned d, unsigned k);

/// Position of the subset in k_subsets(vertex, d, |I|).
std::uint64_t subset_rank(const IndexSubset& subset, unsigned d);

/// Inverse of subset_rank.
IndexSubset subset_unrank(std::size_t vertex, unsigned d, unsigned k, std::uint64_t rank);

}  // namespace qpr
