#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qpr/coefficient.hpp"
#include "qpr/matrix.hpp"

namespace qpr {

struct Arrow {
  std::string id;
  std::string source;
  std::string target;
};

/// Vertices and arrows as declared. Loops and parallel arrows are allowed.
struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  std::optional<std::size_t> find_vertex(const std::string& id) const;
  std::optional<std::size_t> find_arrow(const std::string& id) const;
  /// Throws StructuralError for unknown identifiers.
  std::size_t vertex_index(const std::string& id) const;
  const Arrow& arrow(const std::string& id) const;
};

/// Nonnegative integer per vertex identifier.
class DimensionVector {
 public:
  DimensionVector() = default;
  DimensionVector(std::map<std::string, unsigned> entries) : entries_(std::move(entries)) {}  // NOLINT

  unsigned at(const std::string& vertex) const;
  bool contains(const std::string& vertex) const { return entries_.count(vertex) != 0; }
  void set(const std::string& vertex, unsigned value) { entries_[vertex] = value; }
  const std::map<std::string, unsigned>& entries() const { return entries_; }

  friend bool operator==(const DimensionVector&, const DimensionVector&) = default;

 private:
  std::map<std::string, unsigned> entries_;
};

using CoefficientMatrix = Matrix<Coefficient>;

struct Representation {
  Quiver quiver;
  DimensionVector dims;
  std::vector<std::string> parameters;
  /// Arrow id -> d_target x d_source matrix.
  std::map<std::string, CoefficientMatrix> matrices;
  /// Optional per-vertex display labels for the global numbering; a vertex
  /// absent here is numbered consecutively after its predecessors.
  std::map<std::string, std::vector<unsigned>> labels;

  unsigned dim(const std::string& vertex) const { return dims.at(vertex); }
  unsigned dim(std::size_t vertex) const { return dims.at(quiver.vertices.at(vertex)); }
  const CoefficientMatrix& matrix(const std::string& arrow) const;

  /// Global display label of local basis index `i` (1-based) at `vertex`.
  unsigned global_label(std::size_t vertex, unsigned i) const;
  /// Inverse of global_label; nullopt if no basis vector carries the label.
  std::optional<std::pair<std::size_t, unsigned>> from_global_label(unsigned label) const;
};

struct Violation {
  enum class Kind {
    DuplicateVertex,
    DuplicateArrow,
    UnknownVertex,
    MissingDimension,
    ExtraDimension,
    MissingMatrix,
    UnknownMatrix,
    ShapeMismatch,
    UndeclaredParameter,
    BadLabels,
  };
  Kind kind;
  std::string location;  // offending vertex or arrow identifier
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate_representation(const Representation& rep);

/// Subrepresentation dimension vector checks: defined on exactly the vertex
/// set and 0 <= e_p <= d_p. Throws DomainError.
void check_subdimension(const Representation& rep, const DimensionVector& e);

struct Path {
  std::string source;
  std::string target;
  std::vector<std::string> arrows;  // in traversal order v_1, ..., v_n

  std::size_t length() const { return arrows.size(); }
  /// `e_<vertex>` for trivial paths, otherwise arrow ids joined by '.'.
  std::string name() const;

  friend bool operator==(const Path&, const Path&) = default;
};

Path trivial_path(const std::string& vertex);
Path arrow_path(const Quiver& quiver, const std::string& arrow);

/// Throws StructuralError unless the path is composable in the quiver.
void check_path(const Quiver& quiver, const Path& path);

/// M_pi = M_{v_n} ... M_{v_1}; identity for the trivial path.
CoefficientMatrix path_matrix(const Representation& rep, const Path& path);

/// All paths of length 0..max_len ordered by length, then by the arrow-id
/// sequence; trivial paths in vertex declaration order.
std::vector<Path> enumerate_paths(const Quiver& quiver, std::size_t max_len);

}  // namespace qpr
