#include "qpr/quiver_file.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "qpr/errors.hpp"

namespace qpr {

std::string Diagnostic::to_string() const {
  if (line == 0) return "error: " + message;
  return std::to_string(line) + ":" + std::to_string(column) + ": error: " + message;
}

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t k = 0;
  while (k < line.size()) {
    if (line[k] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[k]))) {
      ++k;
      continue;
    }
    std::size_t start = k;
    while (k < line.size() && !std::isspace(static_cast<unsigned char>(line[k])) && line[k] != '#') ++k;
    tokens.push_back({std::string(line.substr(start, k - start)), start + 1});
  }
  return tokens;
}

bool parse_unsigned(const std::string& text, unsigned& out) {
  if (text.empty() || text.size() > 9 ||
      !std::all_of(text.begin(), text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    return false;
  }
  out = static_cast<unsigned>(std::stoul(text));
  return true;
}

class FileParser {
 public:
  explicit FileParser(std::string_view text) : text_(text) {}

  ParseResult run() {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      std::size_t end = text_.find('\n', pos);
      if (end == std::string_view::npos) end = text_.size();
      ++line_no;
      std::string_view line = text_.substr(pos, end - pos);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      handle_line(line_no, tokenize(line));
      if (end == text_.size()) break;
      pos = end + 1;
    }
    finish_matrix();
    return finish();
  }

 private:
  void error(std::size_t line, std::size_t column, std::string message) {
    diagnostics_.push_back({line, column, std::move(message)});
  }

  void handle_line(std::size_t line, const std::vector<Token>& tokens) {
    if (tokens.empty()) return;
    if (pending_) {
      const std::string& head = tokens[0].text;
      static const std::set<std::string> keywords{"quiver", "param", "vertex", "arrow", "matrix", "dimvector"};
      if (keywords.count(head) == 0) {
        matrix_row(line, tokens);
        return;
      }
      finish_matrix();
    }
    const std::string& head = tokens[0].text;
    if (head == "quiver") {
      quiver_line(line, tokens);
    } else if (!seen_quiver_) {
      error(line, tokens[0].column, "expected 'quiver <name>' before '" + head + "'");
      seen_quiver_ = true;  // report once
      skipped_header_ = true;
      dispatch(line, tokens);
    } else {
      dispatch(line, tokens);
    }
  }

  void dispatch(std::size_t line, const std::vector<Token>& tokens) {
    const std::string& head = tokens[0].text;
    if (head == "param") {
      param_line(line, tokens);
    } else if (head == "vertex") {
      vertex_line(line, tokens);
    } else if (head == "arrow") {
      arrow_line(line, tokens);
    } else if (head == "matrix") {
      matrix_line(line, tokens);
    } else if (head == "dimvector") {
      dimvector_line(line, tokens);
    } else if (head == "quiver") {
      quiver_line(line, tokens);
    } else {
      error(line, tokens[0].column, "unknown directive '" + head + "'");
    }
  }

  void quiver_line(std::size_t line, const std::vector<Token>& tokens) {
    if (seen_quiver_ && !skipped_header_) {
      error(line, tokens[0].column, "second 'quiver' declaration");
      return;
    }
    seen_quiver_ = true;
    if (tokens.size() != 2 || !is_identifier(tokens[1].text)) {
      error(line, tokens[0].column, "expected 'quiver <name>'");
      return;
    }
    file_.name = tokens[1].text;
  }

  void param_line(std::size_t line, const std::vector<Token>& tokens) {
    if (tokens.size() != 2 || !is_identifier(tokens[1].text)) {
      error(line, tokens[0].column, "expected 'param <identifier>'");
      return;
    }
    auto& params = file_.rep.parameters;
    if (std::find(params.begin(), params.end(), tokens[1].text) != params.end()) {
      error(line, tokens[1].column, "duplicate parameter '" + tokens[1].text + "'");
      return;
    }
    params.push_back(tokens[1].text);
  }

  void vertex_line(std::size_t line, const std::vector<Token>& tokens) {
    unsigned d = 0;
    if (tokens.size() < 4 || !is_identifier(tokens[1].text) || tokens[2].text != "dim" ||
        !parse_unsigned(tokens[3].text, d)) {
      error(line, tokens[0].column, "expected 'vertex <identifier> dim <int> [labels <int>...]'");
      return;
    }
    const std::string& id = tokens[1].text;
    if (file_.rep.quiver.find_vertex(id)) {
      error(line, tokens[1].column, "duplicate vertex '" + id + "'");
      return;
    }
    std::vector<unsigned> labels;
    if (tokens.size() > 4) {
      if (tokens[4].text != "labels") {
        error(line, tokens[4].column, "expected 'labels' after the dimension");
        return;
      }
      for (std::size_t k = 5; k < tokens.size(); ++k) {
        unsigned label = 0;
        if (!parse_unsigned(tokens[k].text, label) || label == 0) {
          error(line, tokens[k].column, "labels must be positive integers");
          return;
        }
        labels.push_back(label);
      }
      if (labels.size() != d) {
        error(line, tokens[4].column,
              "vertex '" + id + "' has dimension " + std::to_string(d) + " but " + std::to_string(labels.size()) + " labels");
        return;
      }
    }
    file_.rep.quiver.vertices.push_back(id);
    file_.rep.dims.set(id, d);
    if (tokens.size() > 4) file_.rep.labels[id] = labels;
    vertex_line_[id] = line;
  }

  void arrow_line(std::size_t line, const std::vector<Token>& tokens) {
    if (tokens.size() != 6 || !is_identifier(tokens[1].text) || tokens[2].text != ":" || tokens[4].text != "->") {
      error(line, tokens[0].column, "expected 'arrow <identifier> : <source> -> <target>'");
      return;
    }
    const std::string& id = tokens[1].text;
    if (file_.rep.quiver.find_arrow(id)) {
      error(line, tokens[1].column, "duplicate arrow '" + id + "'");
      return;
    }
    bool ok = true;
    for (std::size_t k : {3U, 5U}) {
      if (!file_.rep.quiver.find_vertex(tokens[k].text)) {
        error(line, tokens[k].column, "arrow '" + id + "' uses unknown vertex '" + tokens[k].text + "'");
        ok = false;
      }
    }
    if (!ok) return;
    file_.rep.quiver.arrows.push_back({id, tokens[3].text, tokens[5].text});
    arrow_line_[id] = line;
  }

  void matrix_line(std::size_t line, const std::vector<Token>& tokens) {
    if (tokens.size() != 2) {
      error(line, tokens[0].column, "expected 'matrix <arrow>'");
      return;
    }
    const std::string& id = tokens[1].text;
    auto index = file_.rep.quiver.find_arrow(id);
    if (!index) {
      error(line, tokens[1].column, "matrix for unknown arrow '" + id + "'");
      pending_ = true;  // swallow its rows
      pending_arrow_.clear();
      return;
    }
    if (file_.rep.matrices.count(id)) {
      error(line, tokens[1].column, "second matrix for arrow '" + id + "'");
      pending_ = true;
      pending_arrow_.clear();
      return;
    }
    const Arrow& a = file_.rep.quiver.arrows[*index];
    pending_ = true;
    pending_arrow_ = id;
    pending_line_ = line;
    pending_column_ = tokens[1].column;
    pending_rows_ = file_.rep.dims.at(a.target);
    pending_cols_ = file_.rep.dims.at(a.source);
    pending_matrix_ = CoefficientMatrix(pending_rows_, pending_cols_);
    pending_filled_ = 0;
  }

  std::string shape_text() const {
    return std::to_string(pending_rows_) + "x" + std::to_string(pending_cols_);
  }

  void matrix_row(std::size_t line, const std::vector<Token>& tokens) {
    if (pending_arrow_.empty()) return;
    if (pending_filled_ >= pending_rows_) {
      error(line, tokens[0].column,
            "matrix of arrow '" + pending_arrow_ + "' has more than " + std::to_string(pending_rows_) +
                " rows; expected shape " + shape_text() + " (d_target x d_source)");
      pending_arrow_.clear();
      return;
    }
    if (tokens.size() != pending_cols_) {
      error(line, tokens[0].column,
            "row of matrix '" + pending_arrow_ + "' has " + std::to_string(tokens.size()) + " entries; expected shape " +
                shape_text() + " (d_target x d_source)");
      pending_arrow_.clear();
      return;
    }
    const std::set<std::string> declared(file_.rep.parameters.begin(), file_.rep.parameters.end());
    for (std::size_t c = 0; c < tokens.size(); ++c) {
      try {
        Coefficient entry = parse_coefficient(tokens[c].text);
        for (const auto& name : entry.parameters()) {
          if (!declared.count(name)) {
            error(line, tokens[c].column, "undeclared parameter '" + name + "'");
            pending_arrow_.clear();
            return;
          }
        }
        pending_matrix_(pending_filled_, c) = entry;
      } catch (const DomainError& ex) {
        error(line, tokens[c].column, ex.what());
        pending_arrow_.clear();
        return;
      }
    }
    ++pending_filled_;
  }

  void finish_matrix() {
    if (!pending_) return;
    pending_ = false;
    if (pending_arrow_.empty()) return;
    if (pending_filled_ != pending_rows_) {
      error(pending_line_, pending_column_,
            "matrix of arrow '" + pending_arrow_ + "' has " + std::to_string(pending_filled_) +
                " rows; expected shape " + shape_text() + " (d_target x d_source)");
    } else {
      file_.rep.matrices[pending_arrow_] = pending_matrix_;
    }
    pending_arrow_.clear();
  }

  void dimvector_line(std::size_t line, const std::vector<Token>& tokens) {
    if (seen_dimvector_) {
      error(line, tokens[0].column, "second 'dimvector' declaration");
      return;
    }
    seen_dimvector_ = true;
    dimvector_line_ = line;
    for (std::size_t k = 1; k < tokens.size(); ++k) {
      const std::string& item = tokens[k].text;
      auto eq = item.find('=');
      unsigned value = 0;
      if (eq == std::string::npos || !parse_unsigned(item.substr(eq + 1), value)) {
        error(line, tokens[k].column, "expected '<vertex>=<int>', got '" + item + "'");
        continue;
      }
      std::string vertex = item.substr(0, eq);
      if (!file_.rep.quiver.find_vertex(vertex)) {
        error(line, tokens[k].column, "dimvector names unknown vertex '" + vertex + "'");
        continue;
      }
      if (file_.e.contains(vertex)) {
        error(line, tokens[k].column, "vertex '" + vertex + "' listed twice in dimvector");
        continue;
      }
      if (value > file_.rep.dims.at(vertex)) {
        error(line, tokens[k].column,
              "e = " + std::to_string(value) + " exceeds d = " + std::to_string(file_.rep.dims.at(vertex)) +
                  " at vertex '" + vertex + "'");
        continue;
      }
      file_.e.set(vertex, value);
    }
  }

  ParseResult finish() {
    if (!seen_quiver_) {
      error(0, 0, "no quiver declared");
    } else {
      if (!seen_dimvector_) error(0, 0, "no dimvector declared");
      for (const auto& v : file_.rep.quiver.vertices) {
        if (seen_dimvector_ && !file_.e.contains(v)) {
          error(dimvector_line_, 1, "dimvector misses vertex '" + v + "'");
        }
      }
      for (const auto& a : file_.rep.quiver.arrows) {
        if (!file_.rep.matrices.count(a.id) && !has_matrix_error(a.id)) {
          error(arrow_line_[a.id], 1, "arrow '" + a.id + "' has no matrix");
        }
      }
    }
    if (diagnostics_.empty()) {
      for (const auto& violation : validate_representation(file_.rep).violations) {
        std::size_t line = 0;
        if (auto it = arrow_line_.find(violation.location); it != arrow_line_.end()) line = it->second;
        if (auto it = vertex_line_.find(violation.location); it != vertex_line_.end()) line = it->second;
        error(line, 1, violation.message);
      }
    }
    ParseResult result;
    result.diagnostics = std::move(diagnostics_);
    if (result.diagnostics.empty()) result.file = std::move(file_);
    return result;
  }

  bool has_matrix_error(const std::string& arrow) const {
    const std::string needle = "'" + arrow + "'";
    return std::any_of(diagnostics_.begin(), diagnostics_.end(),
                       [&](const Diagnostic& d) { return d.message.find("matrix") != std::string::npos &&
                                                         d.message.find(needle) != std::string::npos; });
  }

  std::string_view text_;
  QuiverFile file_;
  std::vector<Diagnostic> diagnostics_;
  bool seen_quiver_ = false;
  bool skipped_header_ = false;
  bool seen_dimvector_ = false;
  std::size_t dimvector_line_ = 0;
  std::map<std::string, std::size_t> arrow_line_;
  std::map<std::string, std::size_t> vertex_line_;

  bool pending_ = false;
  std::string pending_arrow_;
  std::size_t pending_line_ = 0;
  std::size_t pending_column_ = 0;
  std::size_t pending_rows_ = 0;
  std::size_t pending_cols_ = 0;
  std::size_t pending_filled_ = 0;
  CoefficientMatrix pending_matrix_;
};

}  // namespace

ParseResult parse_quiver_file(std::string_view text) { return FileParser(text).run(); }

std::string print_quiver_file(const QuiverFile& file) {
  const Representation& rep = file.rep;
  std::ostringstream out;
  out << "quiver " << file.name << "\n";
  for (const auto& p : rep.parameters) out << "param " << p << "\n";
  for (const auto& v : rep.quiver.vertices) {
    out << "vertex " << v << " dim " << rep.dims.at(v);
    if (auto it = rep.labels.find(v); it != rep.labels.end()) {
      out << " labels";
      for (unsigned l : it->second) out << ' ' << l;
    }
    out << "\n";
  }
  for (const auto& a : rep.quiver.arrows) out << "arrow " << a.id << " : " << a.source << " -> " << a.target << "\n";
  for (const auto& a : rep.quiver.arrows) {
    const auto& m = rep.matrix(a.id);
    out << "matrix " << a.id << "\n";
    if (m.cols() == 0) continue;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m(r, c).to_string();
      out << "\n";
    }
  }
  out << "dimvector";
  for (const auto& v : rep.quiver.vertices) out << ' ' << v << '=' << file.e.at(v);
  out << "\n";
  return out.str();
}

std::string cas_variable_name(const PlueckerVariable& v, const Representation& rep) {
  if (v.members.empty()) return "D_" + rep.quiver.vertices.at(v.vertex) + "_empty";
  std::string name = "D";
  for (unsigned i : v.members) name += "_" + std::to_string(rep.global_label(v.vertex, i));
  return name;
}

std::string export_relations(const RelationSet& relations, const QuiverFile& file,
                             ExportFormat format, Labeling labeling) {
  const Representation& rep = file.rep;
  std::ostringstream out;
  if (format == ExportFormat::Plain) {
    out << "# quiver Pluecker relations of " << file.name << ": " << relations.relations.size()
        << " relation(s), paths up to length " << relations.max_path_len
        << (relations.include_classical ? ", classical included" : "") << "\n";
    for (const auto& r : relations.relations) {
      out << r.label.to_string(rep, labeling) << ": " << canonical_string(r.polynomial, rep, labeling) << "\n";
    }
    return out.str();
  }

  std::set<PlueckerVariable> variables;
  for (std::size_t v = 0; v < rep.quiver.vertices.size(); ++v) {
    const unsigned k = relations.e.at(rep.quiver.vertices[v]);
    if (k == 0 || k == rep.dim(v)) continue;
    for (auto& s : k_subsets(v, rep.dim(v), k)) variables.insert(std::move(s));
  }
  std::set<std::string> params(rep.parameters.begin(), rep.parameters.end());
  for (const auto& r : relations.relations) {
    auto vars = r.polynomial.variables();
    variables.insert(vars.begin(), vars.end());
  }

  out << "// quiver Pluecker relations of " << file.name << ": " << relations.relations.size()
      << " generator(s) in " << variables.size() << " variable(s)\n";
  out << "ring R = ";
  if (params.empty()) {
    out << "0";
  } else {
    out << "(0";
    for (const auto& p : rep.parameters) out << "," << p;
    out << ")";
  }
  out << ",(";
  bool first = true;
  for (const auto& v : variables) {
    out << (first ? "" : ",") << cas_variable_name(v, rep);
    first = false;
  }
  out << "),dp;\n";
  if (relations.relations.empty()) return out.str();
  out << "ideal I =\n";
  for (std::size_t k = 0; k < relations.relations.size(); ++k) {
    out << "  " << render_polynomial(relations.relations[k].polynomial,
                                     [&](const PlueckerVariable& v) { return cas_variable_name(v, rep); })
        << (k + 1 == relations.relations.size() ? ";\n" : ",\n");
  }
  return out.str();
}

}  // namespace qpr
