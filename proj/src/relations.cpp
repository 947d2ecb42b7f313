#include "qpr/relations.hpp"

#include <omp.h>

#include <algorithm>

namespace qpr {

namespace {

std::string subset_string(const IndexSubset& s, const Representation& rep, Labeling labeling) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.members.size(); ++k) {
    if (k) out += ',';
    unsigned index = labeling == Labeling::Global ? rep.global_label(s.vertex, s.members[k]) : s.members[k];
    out += std::to_string(index);
  }
  return out + "}";
}

void require_sizes(const Representation& rep, const DimensionVector& e, std::size_t p,
                   std::size_t q, const IndexSubset& I, const IndexSubset& J) {
  const std::string& pv = rep.quiver.vertices.at(p);
  const std::string& qv = rep.quiver.vertices.at(q);
  const unsigned ep = e.at(pv);
  const unsigned eq = e.at(qv);
  if (ep == 0) throw DomainError("no relations: e is 0 at source vertex '" + pv + "'");
  if (eq + 1 > rep.dim(q)) throw DomainError("no relations: e equals d at target vertex '" + qv + "'");
  if (I.vertex != p || I.size() != ep - 1) {
    throw DomainError("I must be an (e_p - 1)-subset at vertex '" + pv + "'");
  }
  if (J.vertex != q || J.size() != eq + 1) {
    throw DomainError("J must be an (e_q + 1)-subset at vertex '" + qv + "'");
  }
  check_subset(I, rep.dim(p));
  check_subset(J, rep.dim(q));
}

}  // namespace

std::string RelationLabel::to_string(const Representation& rep, Labeling labeling) const {
  if (kind == Kind::Classical) {
    return "P(" + rep.quiver.vertices.at(vertex) + ";" + subset_string(I, rep, labeling) + ";" +
           subset_string(J, rep, labeling) + ")";
  }
  return "E(" + path.name() + ";" + subset_string(I, rep, labeling) + ";" +
         subset_string(J, rep, labeling) + ")";
}

RelationPolynomial relation_from_matrix(const CoefficientMatrix& m, const IndexSubset& I,
                                        const IndexSubset& J) {
  const unsigned dp = static_cast<unsigned>(m.cols());
  const unsigned dq = static_cast<unsigned>(m.rows());
  RelationPolynomial poly;
  for (unsigned i = 1; i <= dp; ++i) {
    if (I.contains(i)) continue;
    const IndexSubset Ii = I.with(i);
    const unsigned eps_i = epsilon(i, I, dp);
    for (unsigned j : J.members) {
      const Coefficient& entry = m(j - 1, i - 1);
      if (entry.is_zero()) continue;
      const int sign = sign_of_parity(eps_i + epsilon(j, J, dq));
      poly.add_term({Ii, J.without(j)}, sign < 0 ? -entry : entry);
    }
  }
  return poly;
}

RelationPolynomial higher_order_relation(const Representation& rep, const DimensionVector& e,
                                         const Path& path, const IndexSubset& I,
                                         const IndexSubset& J) {
  const std::size_t p = rep.quiver.vertex_index(path.source);
  const std::size_t q = rep.quiver.vertex_index(path.target);
  require_sizes(rep, e, p, q, I, J);
  return relation_from_matrix(path_matrix(rep, path), I, J).sign_normalized();
}

RelationPolynomial quiver_relation(const Representation& rep, const DimensionVector& e,
                                   const std::string& arrow, const IndexSubset& I,
                                   const IndexSubset& J) {
  return higher_order_relation(rep, e, arrow_path(rep.quiver, arrow), I, J);
}

std::vector<RelationPolynomial> classical_relations(std::size_t vertex, unsigned d, unsigned k) {
  std::vector<RelationPolynomial> out;
  if (k == 0 || k >= d) return out;
  std::set<RelationPolynomial::TermMap> seen;
  for (const auto& I : k_subsets(vertex, d, k - 1)) {
    for (const auto& J : k_subsets(vertex, d, k + 1)) {
      RelationPolynomial poly;
      for (unsigned i : J.members) {
        if (I.contains(i)) continue;
        const int sign = sign_of_parity(epsilon(i, I, d) + epsilon(i, J, d));
        poly.add_term({I.with(i), J.without(i)}, Coefficient(static_cast<long>(sign)));
      }
      if (poly.is_zero()) continue;
      if (!seen.insert(poly.monic().terms()).second) continue;
      out.push_back(poly.sign_normalized());
    }
  }
  return out;
}

std::vector<RelationPolynomial> classical_relations(const Representation& rep,
                                                    const DimensionVector& e,
                                                    const std::string& vertex) {
  const std::size_t v = rep.quiver.vertex_index(vertex);
  return classical_relations(v, rep.dim(v), e.at(vertex));
}

RelationSet all_relations(const Representation& rep, const DimensionVector& e,
                          std::size_t max_path_len, bool include_classical, int threads) {
  check_subdimension(rep, e);
  if (max_path_len < 1) throw DomainError("max_path_len must be at least 1");

  struct Task {
    RelationLabel label;
    const CoefficientMatrix* matrix = nullptr;  // null for classical
    std::size_t p = 0;
    std::size_t q = 0;
  };
  std::vector<Task> tasks;
  std::vector<CoefficientMatrix> path_matrices;

  const auto& vertices = rep.quiver.vertices;
  if (include_classical) {
    for (std::size_t v = 0; v < vertices.size(); ++v) {
      const unsigned d = rep.dim(v);
      const unsigned k = e.at(vertices[v]);
      if (k == 0 || k >= d) continue;
      for (const auto& I : k_subsets(v, d, k - 1)) {
        for (const auto& J : k_subsets(v, d, k + 1)) {
          Task t;
          t.label.kind = RelationLabel::Kind::Classical;
          t.label.vertex = v;
          t.label.I = I;
          t.label.J = J;
          t.p = t.q = v;
          tasks.push_back(std::move(t));
        }
      }
    }
  }

  std::vector<Path> paths;
  for (auto& path : enumerate_paths(rep.quiver, max_path_len)) {
    if (path.length() >= 1) paths.push_back(std::move(path));
  }
  path_matrices.reserve(paths.size());
  for (const auto& path : paths) path_matrices.push_back(path_matrix(rep, path));

  for (std::size_t k = 0; k < paths.size(); ++k) {
    const std::size_t p = rep.quiver.vertex_index(paths[k].source);
    const std::size_t q = rep.quiver.vertex_index(paths[k].target);
    const unsigned ep = e.at(vertices[p]);
    const unsigned eq = e.at(vertices[q]);
    if (ep == 0 || eq + 1 > rep.dim(q)) continue;
    for (const auto& I : k_subsets(p, rep.dim(p), ep - 1)) {
      for (const auto& J : k_subsets(q, rep.dim(q), eq + 1)) {
        Task t;
        t.label.kind = RelationLabel::Kind::Quiver;
        t.label.path = paths[k];
        t.label.I = I;
        t.label.J = J;
        t.matrix = &path_matrices[k];
        t.p = p;
        t.q = q;
        tasks.push_back(std::move(t));
      }
    }
  }

  std::vector<RelationPolynomial> results(tasks.size());
  const long n = static_cast<long>(tasks.size());
  const int workers = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 16) num_threads(workers)
  for (long k = 0; k < n; ++k) {
    const Task& t = tasks[static_cast<std::size_t>(k)];
    if (t.matrix != nullptr) {
      results[k] = relation_from_matrix(*t.matrix, t.label.I, t.label.J);
    } else {
      const unsigned d = rep.dim(t.p);
      CoefficientMatrix identity = CoefficientMatrix::identity(d, Coefficient(), Coefficient(1L));
      results[k] = relation_from_matrix(identity, t.label.I, t.label.J);
    }
  }

  RelationSet set;
  set.e = e;
  set.max_path_len = max_path_len;
  set.include_classical = include_classical;
  set.invocations = tasks.size();
  std::set<RelationPolynomial::TermMap> seen;
  for (std::size_t k = 0; k < tasks.size(); ++k) {
    if (results[k].is_zero()) continue;
    LabeledRelation entry{tasks[k].label, results[k].sign_normalized()};
    if (seen.insert(results[k].monic().terms()).second) set.relations.push_back(entry);
    set.generated.push_back(std::move(entry));
  }
  return set;
}

std::vector<RelationPolynomial> schubert_dehomogenize(
    const std::vector<RelationPolynomial>& relations, const std::set<PlueckerVariable>& zeros,
    const std::map<std::size_t, PlueckerVariable>& ones) {
  std::map<PlueckerVariable, Coefficient> values;
  for (const auto& z : zeros) values.emplace(z, Coefficient());
  for (const auto& [vertex, v] : ones) {
    if (v.vertex != vertex) throw DomainError("dehomogenizing variable is not at its vertex");
    if (zeros.count(v)) throw DomainError("a variable cannot be set to both 0 and 1");
    values.emplace(v, Coefficient(1L));
  }
  std::vector<RelationPolynomial> out;
  for (const auto& r : relations) {
    RelationPolynomial s = r.substitute(values);
    if (!s.is_zero()) out.push_back(s.sign_normalized());
  }
  return out;
}

std::vector<std::vector<ChartEntry>> chart_formulas(std::size_t vertex, unsigned d,
                                                    const IndexSubset& I0) {
  check_subset(I0, d);
  IndexSubset pivot{vertex, I0.members};
  std::vector<std::vector<ChartEntry>> rows;
  for (unsigned i0 : pivot.members) {
    const IndexSubset I = pivot.without(i0);
    std::vector<ChartEntry> row(d);
    for (unsigned i = 1; i <= d; ++i) {
      ChartEntry& entry = row[i - 1];
      if (pivot.contains(i)) {
        entry.kind = i == i0 ? ChartEntry::Kind::One : ChartEntry::Kind::Zero;
        continue;
      }
      entry.kind = ChartEntry::Kind::Ratio;
      entry.sign = sign_of_parity(epsilon(i, I, d) + epsilon(i0, I, d));
      entry.numerator = I.with(i);
      entry.denominator = pivot;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::map<unsigned, std::map<unsigned, ChartEntry>> dual_chart_formulas(std::size_t vertex,
                                                                        unsigned d,
                                                                        const IndexSubset& J0) {
  check_subset(J0, d);
  IndexSubset pivot{vertex, J0.members};
  std::map<unsigned, std::map<unsigned, ChartEntry>> out;
  for (unsigned j0 = 1; j0 <= d; ++j0) {
    if (pivot.contains(j0)) continue;
    const IndexSubset J = pivot.with(j0);
    auto& row = out[j0];
    for (unsigned j : pivot.members) {
      ChartEntry entry;
      entry.kind = ChartEntry::Kind::Ratio;
      entry.sign = sign_of_parity(epsilon(j0, J, d) + epsilon(j, J, d) + 1);
      entry.numerator = J.without(j);
      entry.denominator = pivot;
      row.emplace(j, entry);
    }
  }
  return out;
}

std::string render_chart_entry(const ChartEntry& entry, const Representation& rep,
                               Labeling labeling) {
  switch (entry.kind) {
    case ChartEntry::Kind::Zero:
      return "0";
    case ChartEntry::Kind::One:
      return "1";
    case ChartEntry::Kind::Ratio:
      break;
  }
  return std::string(entry.sign < 0 ? "-" : "") + render_variable(entry.numerator, rep, labeling) +
         "/" + render_variable(entry.denominator, rep, labeling);
}

}  // namespace qpr
