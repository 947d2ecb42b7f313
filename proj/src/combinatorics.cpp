#include "qpr/combinatorics.hpp"

#include <algorithm>
#include <string>

#include "qpr/errors.hpp"

namespace qpr {

bool IndexSubset::contains(unsigned i) const {
  return std::binary_search(members.begin(), members.end(), i);
}

IndexSubset IndexSubset::with(unsigned i) const {
  IndexSubset out = *this;
  auto it = std::lower_bound(out.members.begin(), out.members.end(), i);
  if (it != out.members.end() && *it == i) {
    throw DomainError("index " + std::to_string(i) + " already in subset");
  }
  out.members.insert(it, i);
  return out;
}

IndexSubset IndexSubset::without(unsigned i) const {
  IndexSubset out = *this;
  auto it = std::lower_bound(out.members.begin(), out.members.end(), i);
  if (it == out.members.end() || *it != i) {
    throw DomainError("index " + std::to_string(i) + " not in subset");
  }
  out.members.erase(it);
  return out;
}

void check_subset(const IndexSubset& subset, unsigned d) {
  unsigned previous = 0;
  for (unsigned m : subset.members) {
    if (m <= previous || m > d) {
      throw DomainError("subset members must be strictly increasing within 1.." +
                        std::to_string(d));
    }
    previous = m;
  }
}

std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (unsigned t = 1; t <= k; ++t) {
    r = r * (n - k + t) / t;
  }
  return r;
}

unsigned epsilon(unsigned i, const IndexSubset& subset, unsigned d) {
  if (i < 1 || i > d) {
    throw DomainError("basis index " + std::to_string(i) + " outside 1.." + std::to_string(d));
  }
  return static_cast<unsigned>(
      std::upper_bound(subset.members.begin(), subset.members.end(), i) - subset.members.begin());
}

std::vector<IndexSubset> k_subsets(std::size_t vertex, unsigned d, unsigned k) {
  if (k > d) {
    throw DomainError("cannot choose " + std::to_string(k) + " of " + std::to_string(d));
  }
  std::vector<IndexSubset> out;
  out.reserve(binomial(d, k));
  std::vector<unsigned> current(k);
  for (unsigned t = 0; t < k; ++t) current[t] = t + 1;
  while (true) {
    out.push_back(IndexSubset{vertex, current});
    // Advance the rightmost position that can still move.
    int t = static_cast<int>(k) - 1;
    while (t >= 0 && current[t] == d - k + static_cast<unsigned>(t) + 1) --t;
    if (t < 0) break;
    ++current[t];
    for (unsigned u = static_cast<unsigned>(t) + 1; u < k; ++u) current[u] = current[u - 1] + 1;
  }
  return out;
}

std::uint64_t subset_rank(const IndexSubset& subset, unsigned d) {
  check_subset(subset, d);
  const unsigned k = static_cast<unsigned>(subset.members.size());
  std::uint64_t rank = 0;
  unsigned previous = 0;
  for (unsigned t = 0; t < k; ++t) {
    for (unsigned x = previous + 1; x < subset.members[t]; ++x) {
      rank += binomial(d - x, k - t - 1);
    }
    previous = subset.members[t];
  }
  return rank;
}

IndexSubset subset_unrank(std::size_t vertex, unsigned d, unsigned k, std::uint64_t rank) {
  if (k > d || rank >= binomial(d, k)) throw DomainError("subset rank out of range");
  IndexSubset out{vertex, {}};
  unsigned x = 1;
  for (unsigned t = 0; t < k; ++t) {
    while (true) {
      std::uint64_t block = binomial(d - x, k - t - 1);
      if (rank < block) break;
      rank -= block;
      ++x;
    }
    out.members.push_back(x);
    ++x;
  }
  return out;
}

}  // namespace qpr
