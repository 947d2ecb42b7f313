#include "qpr/core.hpp"

#include <algorithm>
#include <set>

#include "qpr/errors.hpp"

namespace qpr {

std::optional<std::size_t> Quiver::find_vertex(const std::string& id) const {
  auto it = std::find(vertices.begin(), vertices.end(), id);
  if (it == vertices.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

std::optional<std::size_t> Quiver::find_arrow(const std::string& id) const {
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    if (arrows[k].id == id) return k;
  }
  return std::nullopt;
}

std::size_t Quiver::vertex_index(const std::string& id) const {
  auto k = find_vertex(id);
  if (!k) throw StructuralError("unknown vertex '" + id + "'");
  return *k;
}

const Arrow& Quiver::arrow(const std::string& id) const {
  auto k = find_arrow(id);
  if (!k) throw StructuralError("unknown arrow '" + id + "'");
  return arrows[*k];
}

unsigned DimensionVector::at(const std::string& vertex) const {
  auto it = entries_.find(vertex);
  if (it == entries_.end()) throw StructuralError("no dimension for vertex '" + vertex + "'");
  return it->second;
}

const CoefficientMatrix& Representation::matrix(const std::string& arrow) const {
  auto it = matrices.find(arrow);
  if (it == matrices.end()) throw StructuralError("no matrix for arrow '" + arrow + "'");
  return it->second;
}

unsigned Representation::global_label(std::size_t vertex, unsigned i) const {
  const std::string& name = quiver.vertices.at(vertex);
  auto it = labels.find(name);
  if (it != labels.end()) return it->second.at(i - 1);
  unsigned offset = 0;
  for (std::size_t v = 0; v < vertex; ++v) offset += dim(v);
  return offset + i;
}

std::optional<std::pair<std::size_t, unsigned>> Representation::from_global_label(
    unsigned label) const {
  for (std::size_t v = 0; v < quiver.vertices.size(); ++v) {
    for (unsigned i = 1; i <= dim(v); ++i) {
      if (global_label(v, i) == label) return std::make_pair(v, i);
    }
  }
  return std::nullopt;
}

ValidationReport validate_representation(const Representation& rep) {
  ValidationReport report;
  auto add = [&](Violation::Kind kind, const std::string& where, std::string message) {
    report.violations.push_back({kind, where, std::move(message)});
  };

  std::set<std::string> seen;
  for (const auto& v : rep.quiver.vertices) {
    if (!seen.insert(v).second) add(Violation::Kind::DuplicateVertex, v, "duplicate vertex '" + v + "'");
    if (!rep.dims.contains(v)) add(Violation::Kind::MissingDimension, v, "vertex '" + v + "' has no dimension");
  }
  for (const auto& [v, d] : rep.dims.entries()) {
    if (!rep.quiver.find_vertex(v)) add(Violation::Kind::ExtraDimension, v, "dimension given for unknown vertex '" + v + "'");
  }

  std::set<std::string> seen_arrows;
  const std::set<std::string> declared(rep.parameters.begin(), rep.parameters.end());
  for (const auto& a : rep.quiver.arrows) {
    if (!seen_arrows.insert(a.id).second) add(Violation::Kind::DuplicateArrow, a.id, "duplicate arrow '" + a.id + "'");
    bool endpoints_ok = true;
    for (const auto* end : {&a.source, &a.target}) {
      if (!rep.quiver.find_vertex(*end)) {
        add(Violation::Kind::UnknownVertex, a.id, "arrow '" + a.id + "' uses unknown vertex '" + *end + "'");
        endpoints_ok = false;
      }
    }
    auto it = rep.matrices.find(a.id);
    if (it == rep.matrices.end()) {
      add(Violation::Kind::MissingMatrix, a.id, "arrow '" + a.id + "' has no matrix");
      continue;
    }
    if (endpoints_ok && rep.dims.contains(a.source) && rep.dims.contains(a.target)) {
      const unsigned rows = rep.dims.at(a.target);
      const unsigned cols = rep.dims.at(a.source);
      if (it->second.rows() != rows || it->second.cols() != cols) {
        add(Violation::Kind::ShapeMismatch, a.id,
            "matrix of arrow '" + a.id + "' is " + std::to_string(it->second.rows()) + "x" +
                std::to_string(it->second.cols()) + ", expected " + std::to_string(rows) + "x" +
                std::to_string(cols));
      }
    }
    for (std::size_t r = 0; r < it->second.rows(); ++r) {
      for (std::size_t c = 0; c < it->second.cols(); ++c) {
        for (const auto& name : it->second(r, c).parameters()) {
          if (!declared.count(name)) {
            add(Violation::Kind::UndeclaredParameter, a.id,
                "arrow '" + a.id + "' uses undeclared parameter '" + name + "'");
          }
        }
      }
    }
  }
  for (const auto& [arrow, m] : rep.matrices) {
    if (!rep.quiver.find_arrow(arrow)) add(Violation::Kind::UnknownMatrix, arrow, "matrix for unknown arrow '" + arrow + "'");
  }

  if (report.ok()) {
    std::set<unsigned> used;
    for (std::size_t v = 0; v < rep.quiver.vertices.size(); ++v) {
      const std::string& name = rep.quiver.vertices[v];
      auto it = rep.labels.find(name);
      if (it != rep.labels.end() && it->second.size() != rep.dim(v)) {
        add(Violation::Kind::BadLabels, name, "vertex '" + name + "' needs " + std::to_string(rep.dim(v)) + " labels");
        continue;
      }
      for (unsigned i = 1; i <= rep.dim(v); ++i) {
        unsigned label = rep.global_label(v, i);
        if (label == 0 || !used.insert(label).second) {
          add(Violation::Kind::BadLabels, name, "global label " + std::to_string(label) + " at vertex '" + name + "' is not unique and positive");
        }
      }
    }
  }
  return report;
}

void check_subdimension(const Representation& rep, const DimensionVector& e) {
  for (const auto& v : rep.quiver.vertices) {
    if (!e.contains(v)) throw DomainError("dimension vector misses vertex '" + v + "'");
    if (e.at(v) > rep.dim(v)) {
      throw DomainError("e at vertex '" + v + "' exceeds d = " + std::to_string(rep.dim(v)));
    }
  }
  for (const auto& [v, value] : e.entries()) {
    if (!rep.quiver.find_vertex(v)) throw DomainError("dimension vector names unknown vertex '" + v + "'");
  }
}

std::string Path::name() const {
  if (arrows.empty()) return "e_" + source;
  std::string out;
  for (const auto& a : arrows) {
    if (!out.empty()) out += '.';
    out += a;
  }
  return out;
}

Path trivial_path(const std::string& vertex) { return Path{vertex, vertex, {}}; }

Path arrow_path(const Quiver& quiver, const std::string& arrow) {
  const Arrow& a = quiver.arrow(arrow);
  return Path{a.source, a.target, {arrow}};
}

void check_path(const Quiver& quiver, const Path& path) {
  quiver.vertex_index(path.source);
  quiver.vertex_index(path.target);
  std::string at = path.source;
  for (const auto& id : path.arrows) {
    const Arrow& a = quiver.arrow(id);
    if (a.source != at) {
      throw StructuralError("path " + path.name() + ": arrow '" + id + "' does not start at '" + at + "'");
    }
    at = a.target;
  }
  if (at != path.target) {
    throw StructuralError("path " + path.name() + " ends at '" + at + "', not '" + path.target + "'");
  }
}

CoefficientMatrix path_matrix(const Representation& rep, const Path& path) {
  check_path(rep.quiver, path);
  CoefficientMatrix m = CoefficientMatrix::identity(rep.dim(path.source), Coefficient(), Coefficient(1L));
  for (const auto& id : path.arrows) {
    m = multiply(rep.matrix(id), m);
  }
  return m;
}

std::vector<Path> enumerate_paths(const Quiver& quiver, std::size_t max_len) {
  std::vector<Path> out;
  std::vector<Path> frontier;
  for (const auto& v : quiver.vertices) frontier.push_back(trivial_path(v));
  out = frontier;
  // Arrow ids sorted once so extensions come out lexicographically.
  std::vector<const Arrow*> sorted;
  for (const auto& a : quiver.arrows) sorted.push_back(&a);
  std::sort(sorted.begin(), sorted.end(), [](const Arrow* x, const Arrow* y) { return x->id < y->id; });

  for (std::size_t len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<Path> next;
    for (const auto& p : frontier) {
      for (const Arrow* a : sorted) {
        if (a->source != p.target) continue;
        Path q = p;
        if (q.arrows.empty()) q.source = p.source;
        q.arrows.push_back(a->id);
        q.target = a->target;
        next.push_back(std::move(q));
      }
    }
    std::sort(next.begin(), next.end(), [](const Path& x, const Path& y) { return x.arrows < y.arrows; });
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

}  // namespace qpr
