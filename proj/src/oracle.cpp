#include "qpr/oracle.hpp"

#include <omp.h>

#include <algorithm>
#include <map>

#include "qpr/combinatorics.hpp"
#include "qpr/errors.hpp"

namespace qpr {

bool SubspaceRREF::contains(std::span<const std::uint32_t> v) const {
  if (v.size() != d) throw DomainError("vector length does not match the ambient dimension");
  const std::uint64_t p = prime;
  for (unsigned c = 0; c < d; ++c) {
    std::uint64_t combo = 0;
    for (unsigned r = 0; r < dim(); ++r) {
      combo += static_cast<std::uint64_t>(v[pivots[r] - 1]) * at(r, c) % p;
    }
    if (combo % p != v[c]) return false;
  }
  return true;
}

std::uint64_t gaussian_binomial(unsigned d, unsigned e, std::uint64_t q) {
  if (e > d) return 0;
  // [d, e] = [d-1, e-1] + q^e [d-1, e]
  std::vector<std::vector<std::uint64_t>> table(d + 1, std::vector<std::uint64_t>(e + 1, 0));
  for (unsigned n = 0; n <= d; ++n) {
    table[n][0] = 1;
    std::uint64_t power = 1;
    for (unsigned k = 1; k <= std::min(n, e); ++k) {
      power *= q;
      table[n][k] = table[n - 1][k - 1] + (k <= n - 1 ? power * table[n - 1][k] : 0);
    }
  }
  return table[d][e];
}

std::vector<SubspaceRREF> enumerate_subspaces(std::uint32_t p, unsigned d, unsigned e) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (e > d) throw DomainError("subspace dimension exceeds ambient dimension");
  std::vector<SubspaceRREF> out;
  for (const auto& pivot_set : k_subsets(0, d, e)) {
    SubspaceRREF base;
    base.prime = p;
    base.d = d;
    base.pivots = pivot_set.members;
    base.rows.assign(static_cast<std::size_t>(e) * d, 0);
    std::vector<std::size_t> free_slots;  // row-major positions of free entries
    for (unsigned r = 0; r < e; ++r) {
      base.rows[r * d + base.pivots[r] - 1] = 1;
      for (unsigned c = base.pivots[r]; c < d; ++c) {
        if (!pivot_set.contains(c + 1)) free_slots.push_back(r * d + c);
      }
    }
    std::vector<std::uint32_t> digits(free_slots.size(), 0);
    // Odometer; the last free entry turns fastest.
    auto advance = [&] {
      for (std::size_t k = digits.size(); k > 0; --k) {
        if (++digits[k - 1] < p) return true;
        digits[k - 1] = 0;
      }
      return false;
    };
    do {
      SubspaceRREF s = base;
      for (std::size_t k = 0; k < free_slots.size(); ++k) s.rows[free_slots[k]] = digits[k];
      out.push_back(std::move(s));
    } while (advance());
  }
  return out;
}

namespace {

/// In-place row reduction mod p; returns the pivot columns (0-based).
std::vector<unsigned> reduce_rows(const PrimeField& field, unsigned d,
                                  std::vector<std::vector<std::uint32_t>>& rows) {
  std::vector<unsigned> pivots;
  std::size_t rank = 0;
  for (unsigned c = 0; c < d && rank < rows.size(); ++c) {
    std::size_t found = rank;
    while (found < rows.size() && rows[found][c] == 0) ++found;
    if (found == rows.size()) continue;
    std::swap(rows[rank], rows[found]);
    const std::uint32_t inv = field.inv(rows[rank][c]);
    for (auto& x : rows[rank]) x = field.mul(x, inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const std::uint32_t factor = rows[r][c];
      for (unsigned k = 0; k < d; ++k) rows[r][k] = field.sub(rows[r][k], field.mul(factor, rows[rank][k]));
    }
    pivots.push_back(c);
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

std::uint32_t determinant(const PrimeField& field, std::vector<std::uint32_t> m, unsigned n) {
  std::uint32_t det = 1;
  for (unsigned c = 0; c < n; ++c) {
    unsigned found = c;
    while (found < n && m[found * n + c] == 0) ++found;
    if (found == n) return 0;
    if (found != c) {
      for (unsigned k = 0; k < n; ++k) std::swap(m[found * n + k], m[c * n + k]);
      det = field.neg(det);
    }
    const std::uint32_t pivot = m[c * n + c];
    det = field.mul(det, pivot);
    const std::uint32_t inv = field.inv(pivot);
    for (unsigned r = c + 1; r < n; ++r) {
      const std::uint32_t factor = field.mul(m[r * n + c], inv);
      if (factor == 0) continue;
      for (unsigned k = c; k < n; ++k) m[r * n + k] = field.sub(m[r * n + k], field.mul(factor, m[c * n + k]));
    }
  }
  return det;
}

}  // namespace

SubspaceRREF row_space(std::uint32_t p, unsigned d, std::vector<std::vector<std::uint32_t>> rows) {
  const PrimeField field(p);
  for (auto& r : rows) {
    if (r.size() != d) throw DomainError("row length does not match the ambient dimension");
    for (auto& x : r) x %= p;
  }
  const auto pivots = reduce_rows(field, d, rows);
  SubspaceRREF s;
  s.prime = p;
  s.d = d;
  for (unsigned c : pivots) s.pivots.push_back(c + 1);
  for (const auto& r : rows) s.rows.insert(s.rows.end(), r.begin(), r.end());
  return s;
}

unsigned rank_mod(std::uint32_t p, std::vector<std::vector<std::uint32_t>> rows) {
  if (rows.empty()) return 0;
  const unsigned d = static_cast<unsigned>(rows.front().size());
  return static_cast<unsigned>(reduce_rows(PrimeField(p), d, rows).size());
}

void normalize_projective(std::vector<std::uint32_t>& v, std::uint32_t p) {
  const PrimeField field(p);
  auto it = std::find_if(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; });
  if (it == v.end()) throw DomainError("zero vector has no projective normalization");
  const std::uint32_t inv = field.inv(*it);
  for (auto& x : v) x = field.mul(x, inv);
}

std::vector<std::uint32_t> pluecker_of_subspace(const SubspaceRREF& subspace) {
  const PrimeField field(subspace.prime);
  const unsigned e = subspace.dim();
  std::vector<std::uint32_t> out;
  for (const auto& I : k_subsets(0, subspace.d, e)) {
    std::vector<std::uint32_t> minor(static_cast<std::size_t>(e) * e);
    for (unsigned r = 0; r < e; ++r) {
      for (unsigned k = 0; k < e; ++k) minor[r * e + k] = subspace.at(r, I.members[k] - 1);
    }
    out.push_back(determinant(field, std::move(minor), e));
  }
  normalize_projective(out, subspace.prime);
  return out;
}

std::vector<std::uint32_t> FpRepresentation::apply(const ArrowMap& arrow,
                                                   std::span<const std::uint32_t> x) const {
  const unsigned ds = dims[arrow.source];
  const unsigned dt = dims[arrow.target];
  std::vector<std::uint32_t> y(dt, 0);
  for (unsigned r = 0; r < dt; ++r) {
    std::uint64_t sum = 0;
    for (unsigned c = 0; c < ds; ++c) sum += static_cast<std::uint64_t>(arrow.matrix[r * ds + c]) * x[c] % prime;
    y[r] = static_cast<std::uint32_t>(sum % prime);
  }
  return y;
}

FpRepresentation specialize(const Representation& rep, const ParamAssignment& params,
                            std::uint32_t p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  FpRepresentation out;
  out.prime = p;
  out.vertices = rep.quiver.vertices;
  for (std::size_t v = 0; v < rep.quiver.vertices.size(); ++v) out.dims.push_back(rep.dim(v));
  for (const auto& a : rep.quiver.arrows) {
    FpRepresentation::ArrowMap m;
    m.id = a.id;
    m.source = rep.quiver.vertex_index(a.source);
    m.target = rep.quiver.vertex_index(a.target);
    const auto& matrix = rep.matrix(a.id);
    for (std::size_t r = 0; r < matrix.rows(); ++r) {
      for (std::size_t c = 0; c < matrix.cols(); ++c) {
        m.matrix.push_back(reduce_mod(matrix(r, c).specialize(params), p));
      }
    }
    out.arrows.push_back(std::move(m));
  }
  return out;
}

bool is_subrepresentation(const FpRepresentation& rep, const std::vector<SubspaceRREF>& tuple) {
  if (tuple.size() != rep.dims.size()) throw DomainError("one subspace per vertex expected");
  for (std::size_t v = 0; v < tuple.size(); ++v) {
    if (tuple[v].prime != rep.prime || tuple[v].d != rep.dims[v]) {
      throw DomainError("subspace at vertex '" + rep.vertices[v] + "' does not fit the representation");
    }
  }
  for (const auto& arrow : rep.arrows) {
    const SubspaceRREF& source = tuple[arrow.source];
    const SubspaceRREF& target = tuple[arrow.target];
    std::vector<std::vector<std::uint32_t>> stacked;
    for (unsigned r = 0; r < target.dim(); ++r) {
      auto row = target.row(r);
      stacked.emplace_back(row.begin(), row.end());
    }
    for (unsigned r = 0; r < source.dim(); ++r) stacked.push_back(rep.apply(arrow, source.row(r)));
    if (rank_mod(rep.prime, std::move(stacked)) != target.dim()) return false;
  }
  return true;
}

bool PointSet::contains(const GrassmannPoint& x) const {
  return std::binary_search(points.begin(), points.end(), x);
}

SetComparison compare_sets(const PointSet& expected, const PointSet& actual) {
  if (expected.prime != actual.prime) throw DomainError("point sets over different primes");
  if (expected.shape != actual.shape) throw DomainError("point sets of different shapes");
  SetComparison out;
  std::set_difference(expected.points.begin(), expected.points.end(), actual.points.begin(),
                      actual.points.end(), std::back_inserter(out.missing));
  std::set_difference(actual.points.begin(), actual.points.end(), expected.points.begin(),
                      expected.points.end(), std::back_inserter(out.extra));
  return out;
}

std::string render_point(const GrassmannPoint& point) {
  std::string out = "[";
  for (std::size_t v = 0; v < point.size(); ++v) {
    if (v) out += " | ";
    for (std::size_t k = 0; k < point[v].size(); ++k) {
      if (k) out += ':';
      out += std::to_string(point[v][k]);
    }
  }
  return out + "]";
}

std::uint32_t coordinate(const GrassmannPoint& point, const PlueckerVariable& v, unsigned d) {
  return point.at(v.vertex).at(subset_rank(v, d));
}

std::vector<RelationPolynomial> polynomials_of(const RelationSet& relations) {
  std::vector<RelationPolynomial> out;
  out.reserve(relations.relations.size());
  for (const auto& r : relations.relations) out.push_back(r.polynomial);
  return out;
}

namespace {

struct VertexData {
  std::vector<SubspaceRREF> subspaces;
  std::vector<std::vector<std::uint32_t>> pluecker;
};

std::vector<VertexData> vertex_data(const Representation& rep, const DimensionVector& e,
                                    std::uint32_t p) {
  std::vector<VertexData> data(rep.quiver.vertices.size());
  for (std::size_t v = 0; v < data.size(); ++v) {
    data[v].subspaces = enumerate_subspaces(p, rep.dim(v), e.at(rep.quiver.vertices[v]));
    for (const auto& s : data[v].subspaces) data[v].pluecker.push_back(pluecker_of_subspace(s));
  }
  return data;
}

PointSet empty_set(const Representation& rep, const DimensionVector& e, std::uint32_t p) {
  PointSet set;
  set.prime = p;
  for (std::size_t v = 0; v < rep.quiver.vertices.size(); ++v) {
    set.shape.push_back(binomial(rep.dim(v), e.at(rep.quiver.vertices[v])));
  }
  return set;
}

int worker_count(int threads) { return threads > 0 ? threads : omp_get_max_threads(); }

/// Depth-first search over one subspace per vertex in declaration order. A
/// check attached to level k runs once vertices 0..k are chosen; the search
/// is split across workers by the choice at vertex 0.
template <class Check, class Emit>
void search_tuples(const std::vector<std::size_t>& sizes, const Check& check_level,
                   const Emit& emit, std::vector<std::size_t>& choice, std::size_t level) {
  if (level == sizes.size()) {
    emit(choice);
    return;
  }
  for (std::size_t k = 0; k < sizes[level]; ++k) {
    choice[level] = k;
    if (check_level(level, choice)) search_tuples(sizes, check_level, emit, choice, level + 1);
  }
}

/// Runs the search and collects the points emitted per top-level branch,
/// concatenated in branch order and sorted.
template <class Check, class MakePoint>
std::vector<GrassmannPoint> parallel_points(const std::vector<std::size_t>& sizes,
                                            const Check& check_level, const MakePoint& make_point,
                                            int threads) {
  if (sizes.empty()) return {GrassmannPoint{}};
  const long branches = static_cast<long>(sizes[0]);
  std::vector<std::vector<GrassmannPoint>> chunks(sizes[0]);
#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_count(threads))
  for (long b = 0; b < branches; ++b) {
    std::vector<std::size_t> choice(sizes.size(), 0);
    choice[0] = static_cast<std::size_t>(b);
    if (!check_level(0, choice)) continue;
    auto& sink = chunks[static_cast<std::size_t>(b)];
    search_tuples(sizes, check_level, [&](const std::vector<std::size_t>& c) { sink.push_back(make_point(c)); },
                  choice, 1);
  }
  std::vector<GrassmannPoint> points;
  for (auto& chunk : chunks) {
    points.insert(points.end(), std::make_move_iterator(chunk.begin()), std::make_move_iterator(chunk.end()));
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

/// Membership checks for the fast subrepresentation kernel: for each arrow,
/// the images of the basis rows of every source subspace are precomputed.
struct SubrepKernel {
  const FpRepresentation& rep;
  const std::vector<VertexData>& data;
  std::vector<std::vector<std::size_t>> arrows_at_level;
  // images[a][k] = A_a applied to the rows of subspace k at the source, flattened.
  std::vector<std::vector<std::vector<std::uint32_t>>> images;

  SubrepKernel(const FpRepresentation& r, const std::vector<VertexData>& d) : rep(r), data(d) {
    arrows_at_level.resize(rep.dims.size());
    images.resize(rep.arrows.size());
    for (std::size_t a = 0; a < rep.arrows.size(); ++a) {
      const auto& arrow = rep.arrows[a];
      arrows_at_level[std::max(arrow.source, arrow.target)].push_back(a);
      for (const auto& s : data[arrow.source].subspaces) {
        std::vector<std::uint32_t> flat;
        for (unsigned r = 0; r < s.dim(); ++r) {
          auto y = rep.apply(arrow, s.row(r));
          flat.insert(flat.end(), y.begin(), y.end());
        }
        images[a].push_back(std::move(flat));
      }
    }
  }

  bool operator()(std::size_t level, const std::vector<std::size_t>& choice) const {
    for (std::size_t a : arrows_at_level[level]) {
      const auto& arrow = rep.arrows[a];
      const SubspaceRREF& target = data[arrow.target].subspaces[choice[arrow.target]];
      const auto& flat = images[a][choice[arrow.source]];
      const unsigned dt = rep.dims[arrow.target];
      const unsigned rows = dt == 0 ? 0 : static_cast<unsigned>(flat.size() / dt);
      for (unsigned r = 0; r < rows; ++r) {
        if (!target.contains(std::span<const std::uint32_t>(flat.data() + r * dt, dt))) return false;
      }
    }
    return true;
  }
};

/// Relations compiled to residues and dense Pluecker indices.
struct CompiledRelation {
  struct Term {
    std::uint32_t coefficient;
    std::vector<std::pair<std::size_t, std::size_t>> factors;  // (vertex, rank)
  };
  std::vector<Term> terms;
};

struct VarietyKernel {
  PrimeField field;
  const std::vector<VertexData>& data;
  std::vector<std::vector<CompiledRelation>> at_level;
  bool infeasible = false;

  VarietyKernel(const std::vector<RelationPolynomial>& relations, const Representation& rep,
                const ParamAssignment& params, std::uint32_t p, const std::vector<VertexData>& d)
      : field(p), data(d) {
    at_level.resize(std::max<std::size_t>(data.size(), 1));
    for (const auto& poly : relations) {
      CompiledRelation compiled;
      std::size_t level = 0;
      for (const auto& [monomial, coefficient] : poly.terms()) {
        const std::uint32_t c = reduce_mod(coefficient.specialize(params), p);
        if (c == 0) continue;
        CompiledRelation::Term term{c, {}};
        for (const auto& v : monomial) {
          term.factors.emplace_back(v.vertex, subset_rank(v, rep.dim(v.vertex)));
          level = std::max(level, v.vertex);
        }
        compiled.terms.push_back(std::move(term));
      }
      if (compiled.terms.empty()) continue;
      if (compiled.terms.size() == 1 && compiled.terms[0].factors.empty()) {
        infeasible = true;
        continue;
      }
      at_level[level].push_back(std::move(compiled));
    }
  }

  bool operator()(std::size_t level, const std::vector<std::size_t>& choice) const {
    if (infeasible) return false;
    for (const auto& relation : at_level[level]) {
      std::uint32_t sum = 0;
      for (const auto& term : relation.terms) {
        std::uint32_t value = term.coefficient;
        for (const auto& [v, rank] : term.factors) value = field.mul(value, data[v].pluecker[choice[v]][rank]);
        sum = field.add(sum, value);
      }
      if (sum != 0) return false;
    }
    return true;
  }
};

std::vector<std::size_t> sizes_of(const std::vector<VertexData>& data) {
  std::vector<std::size_t> sizes;
  for (const auto& v : data) sizes.push_back(v.subspaces.size());
  return sizes;
}

GrassmannPoint point_of(const std::vector<VertexData>& data, const std::vector<std::size_t>& choice) {
  GrassmannPoint point(data.size());
  for (std::size_t v = 0; v < data.size(); ++v) point[v] = data[v].pluecker[choice[v]];
  return point;
}

void check_inputs(const Representation& rep, const DimensionVector& e, std::uint32_t p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  check_subdimension(rep, e);
}

}  // namespace

PointSet subrep_points(const Representation& rep, const DimensionVector& e, std::uint32_t p,
                       const ParamAssignment& params, int threads) {
  check_inputs(rep, e, p);
  const FpRepresentation fp = specialize(rep, params, p);
  const auto data = vertex_data(rep, e, p);
  const SubrepKernel kernel(fp, data);
  PointSet set = empty_set(rep, e, p);
  set.points = parallel_points(sizes_of(data), kernel,
                               [&](const std::vector<std::size_t>& c) { return point_of(data, c); }, threads);
  return set;
}

std::uint64_t count_subrepresentations(const Representation& rep, const DimensionVector& e,
                                       std::uint32_t p, const ParamAssignment& params,
                                       int threads) {
  check_inputs(rep, e, p);
  const FpRepresentation fp = specialize(rep, params, p);
  const auto data = vertex_data(rep, e, p);
  const SubrepKernel kernel(fp, data);
  const auto sizes = sizes_of(data);
  if (sizes.empty()) return 1;
  std::uint64_t total = 0;
  const long branches = static_cast<long>(sizes[0]);
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : total) num_threads(worker_count(threads))
  for (long b = 0; b < branches; ++b) {
    std::vector<std::size_t> choice(sizes.size(), 0);
    choice[0] = static_cast<std::size_t>(b);
    if (!kernel(0, choice)) continue;
    std::uint64_t local = 0;
    search_tuples(sizes, kernel, [&](const std::vector<std::size_t>&) { ++local; }, choice, 1);
    total += local;
  }
  return total;
}

PointSet variety_points(const std::vector<RelationPolynomial>& relations, const Representation& rep,
                        const DimensionVector& e, std::uint32_t p, const ParamAssignment& params,
                        int threads) {
  check_inputs(rep, e, p);
  const auto data = vertex_data(rep, e, p);
  const VarietyKernel kernel(relations, rep, params, p, data);
  PointSet set = empty_set(rep, e, p);
  set.points = parallel_points(sizes_of(data), kernel,
                               [&](const std::vector<std::size_t>& c) { return point_of(data, c); }, threads);
  return set;
}

PointSet variety_points(const RelationSet& relations, const Representation& rep,
                        const DimensionVector& e, std::uint32_t p, const ParamAssignment& params,
                        int threads) {
  return variety_points(polynomials_of(relations), rep, e, p, params, threads);
}

namespace reference {

namespace {

/// Calls `visit` for every tuple of the Cartesian product, odometer order.
template <class Visit>
void for_each_tuple(const std::vector<std::size_t>& sizes, const Visit& visit) {
  for (std::size_t s : sizes) {
    if (s == 0) return;
  }
  std::vector<std::size_t> choice(sizes.size(), 0);
  while (true) {
    visit(choice);
    std::size_t k = sizes.size();
    while (k > 0) {
      --k;
      if (++choice[k] < sizes[k]) break;
      choice[k] = 0;
      if (k == 0) return;
    }
    if (sizes.empty()) return;
  }
}

}  // namespace

PointSet subrep_points(const Representation& rep, const DimensionVector& e, std::uint32_t p,
                       const ParamAssignment& params) {
  check_inputs(rep, e, p);
  const FpRepresentation fp = specialize(rep, params, p);
  std::vector<std::vector<SubspaceRREF>> lists;
  std::vector<std::size_t> sizes;
  for (std::size_t v = 0; v < rep.quiver.vertices.size(); ++v) {
    lists.push_back(enumerate_subspaces(p, rep.dim(v), e.at(rep.quiver.vertices[v])));
    sizes.push_back(lists.back().size());
  }
  PointSet set = empty_set(rep, e, p);
  for_each_tuple(sizes, [&](const std::vector<std::size_t>& choice) {
    std::vector<SubspaceRREF> tuple;
    for (std::size_t v = 0; v < lists.size(); ++v) tuple.push_back(lists[v][choice[v]]);
    if (!is_subrepresentation(fp, tuple)) return;
    GrassmannPoint point;
    for (const auto& s : tuple) point.push_back(pluecker_of_subspace(s));
    set.points.push_back(std::move(point));
  });
  std::sort(set.points.begin(), set.points.end());
  return set;
}

PointSet variety_points(const std::vector<RelationPolynomial>& relations, const Representation& rep,
                        const DimensionVector& e, std::uint32_t p, const ParamAssignment& params) {
  check_inputs(rep, e, p);
  const PrimeField field(p);
  std::map<std::string, Fp> fp_params;
  for (const auto& [name, value] : params) fp_params.emplace(name, field.from_rational(value));

  std::vector<std::vector<std::vector<std::uint32_t>>> lists;
  std::vector<std::vector<IndexSubset>> variables;
  std::vector<std::size_t> sizes;
  for (std::size_t v = 0; v < rep.quiver.vertices.size(); ++v) {
    const unsigned k = e.at(rep.quiver.vertices[v]);
    std::vector<std::vector<std::uint32_t>> vectors;
    for (const auto& s : enumerate_subspaces(p, rep.dim(v), k)) vectors.push_back(pluecker_of_subspace(s));
    lists.push_back(std::move(vectors));
    variables.push_back(k_subsets(v, rep.dim(v), k));
    sizes.push_back(lists.back().size());
  }
  PointSet set = empty_set(rep, e, p);
  for_each_tuple(sizes, [&](const std::vector<std::size_t>& choice) {
    std::map<PlueckerVariable, Fp> point;
    GrassmannPoint gp;
    for (std::size_t v = 0; v < lists.size(); ++v) {
      const auto& vec = lists[v][choice[v]];
      for (std::size_t r = 0; r < vec.size(); ++r) point.emplace(variables[v][r], Fp(vec[r], p));
      gp.push_back(vec);
    }
    for (const auto& poly : relations) {
      if (!poly.evaluate(point, fp_params, field).is_zero()) return;
    }
    set.points.push_back(std::move(gp));
  });
  std::sort(set.points.begin(), set.points.end());
  return set;
}

}  // namespace reference

}  // namespace qpr
