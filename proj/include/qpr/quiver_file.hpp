#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qpr/core.hpp"
#include "qpr/polynomial.hpp"
#include "qpr/relations.hpp"

namespace qpr {

/// Parsed quiver file: the representation plus the subrepresentation
/// dimension vector.
struct QuiverFile {
  std::string name;
  Representation rep;
  DimensionVector e;
};

struct Diagnostic {
  std::size_t line = 0;    // 1-based; 0 when not tied to a line
  std::size_t column = 0;  // 1-based
  std::string message;

  std::string to_string() const;
};

struct ParseResult {
  std::optional<QuiverFile> file;  // set only when there are no diagnostics
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return file.has_value(); }
};

/// Line-oriented format, `#` starts a comment:
///
///     quiver <name>
///     param <ident>
///     vertex <ident> dim <int> [labels <int>...]
///     arrow <ident> : <src> -> <dst>
///     matrix <arrow>          followed by d_dst rows of d_src entries
///     dimvector <ident>=<int> ...
ParseResult parse_quiver_file(std::string_view text);

/// Canonical text; parse_quiver_file(print_quiver_file(f)) reproduces f.
std::string print_quiver_file(const QuiverFile& file);

enum class ExportFormat { Plain, CasScript };

/// Plain: a header comment then `label: polynomial` per line. CasScript: a
/// Singular ring over Q (parameters as transcendental generators) on the
/// Pluecker variables, followed by the ideal generated by the relations.
std::string export_relations(const RelationSet& relations, const QuiverFile& file,
                             ExportFormat format, Labeling labeling = Labeling::Global);

/// Identifier used for a Pluecker variable in CAS scripts, e.g. `D_4_5_6`.
std::string cas_variable_name(const PlueckerVariable& v, const Representation& rep);

}  // namespace qpr
