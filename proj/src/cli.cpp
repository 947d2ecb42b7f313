#include "qpr/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "qpr/counting.hpp"
#include "qpr/errors.hpp"
#include "qpr/oracle.hpp"
#include "qpr/quiver_file.hpp"
#include "qpr/relations.hpp"

namespace qpr {

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

QuiverFile load(const std::string& path, std::ostream& err) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  ParseResult result = parse_quiver_file(buffer.str());
  if (!result.ok()) {
    for (const auto& d : result.diagnostics) err << path << ":" << d.to_string() << "\n";
    throw InputError("'" + path + "' is not a valid quiver file");
  }
  return std::move(*result.file);
}

Labeling labeling_of(const std::string& text) {
  return text == "local" ? Labeling::Local : Labeling::Global;
}

ParamAssignment parse_assignments(const std::vector<std::string>& items, const Representation& rep) {
  ParamAssignment values;
  for (const auto& item : items) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("--set expects <param>=<value>, got '" + item + "'");
    std::string name = item.substr(0, eq);
    if (std::find(rep.parameters.begin(), rep.parameters.end(), name) == rep.parameters.end()) {
      throw InputError("unknown parameter '" + name + "'");
    }
    values[name] = parse_rational(item.substr(eq + 1));
  }
  for (const auto& p : rep.parameters) {
    if (!values.count(p)) throw InputError("parameter '" + p + "' needs a value (--set " + p + "=<value>)");
  }
  return values;
}

std::string assignment_text(const ParamAssignment& values) {
  std::string out;
  for (const auto& [name, value] : values) out += " " + name + "=" + value.get_str();
  return out;
}

void check_primes(const std::vector<unsigned>& primes) {
  if (primes.empty()) throw InputError("no primes given");
  for (unsigned p : primes) {
    if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  }
}

std::vector<unsigned> parse_index_list(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw InputError("bad index list '" + text + "'");
    }
    out.push_back(static_cast<unsigned>(std::stoul(item)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

constexpr std::size_t kMaxWitnesses = 5;

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quiver Pluecker relations: generation and finite-field verification", "qpr"};
  app.require_subcommand(1);

  std::string file;
  std::size_t order = 1;
  bool classical = false;
  std::string labels = "global";
  std::string format = "plain";
  int threads = 0;
  std::vector<unsigned> primes;
  std::vector<unsigned> validate;
  std::vector<std::string> sets;
  bool fit = false;
  std::string vertex;
  std::string pivot;
  std::vector<std::string> zeros;
  std::vector<std::string> ones;
  std::size_t max_len = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "quiver file")->required();
    cmd->add_option("--threads", threads, "worker threads (0 = OpenMP default)");
  };
  auto add_labels = [&](CLI::App* cmd) {
    cmd->add_option("--labels", labels, "basis numbering in output")
        ->check(CLI::IsMember({"local", "global"}));
  };

  auto* relations_cmd = app.add_subcommand("relations", "print the quiver Pluecker relations");
  add_common(relations_cmd);
  relations_cmd->add_option("--order", order, "maximal path length")->check(CLI::PositiveNumber);
  relations_cmd->add_flag("--classical", classical, "include classical Pluecker relations");
  add_labels(relations_cmd);
  relations_cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"plain", "cas"}));

  auto* verify_cmd = app.add_subcommand("verify", "compare subrepresentations with the zero set of the relations");
  add_common(verify_cmd);
  verify_cmd->add_option("--primes", primes, "comma-separated primes")->delimiter(',')->required();
  verify_cmd->add_option("--order", order, "maximal path length")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--set", sets, "parameter value <param>=<rational>");

  auto* count_cmd = app.add_subcommand("count", "count subrepresentations over prime fields");
  add_common(count_cmd);
  count_cmd->add_option("--primes", primes, "comma-separated primes")->delimiter(',')->required();
  count_cmd->add_flag("--fit", fit, "fit a counting polynomial");
  count_cmd->add_option("--validate", validate, "held-out primes for the fit")->delimiter(',');
  count_cmd->add_option("--set", sets, "parameter value <param>=<rational>");

  auto* chart_cmd = app.add_subcommand("chart", "chart spanning vectors and membership coefficients");
  add_common(chart_cmd);
  chart_cmd->add_option("--vertex", vertex, "vertex identifier")->required();
  chart_cmd->add_option("--pivot", pivot, "pivot subset as local indices, e.g. 1,2")->required();
  add_labels(chart_cmd);

  auto* schubert_cmd = app.add_subcommand("schubert", "zero and dehomogenize the relations");
  add_common(schubert_cmd);
  schubert_cmd->add_option("--zero", zeros, "variables set to 0, e.g. Delta[2,3]");
  schubert_cmd->add_option("--one", ones, "one variable per vertex set to 1");
  schubert_cmd->add_option("--order", order, "maximal path length")->check(CLI::PositiveNumber);
  schubert_cmd->add_flag("--classical", classical, "include classical Pluecker relations");
  add_labels(schubert_cmd);

  auto* paths_cmd = app.add_subcommand("paths", "list paths up to a given length");
  add_common(paths_cmd);
  paths_cmd->add_option("--max-len", max_len, "maximal path length")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    const QuiverFile qf = load(file, err);
    const Representation& rep = qf.rep;
    const Labeling labeling = labeling_of(labels);

    if (*relations_cmd) {
      const RelationSet rels = all_relations(rep, qf.e, order, classical, threads);
      out << export_relations(rels, qf, format == "cas" ? ExportFormat::CasScript : ExportFormat::Plain, labeling);
      return kExitOk;
    }

    if (*verify_cmd) {
      check_primes(primes);
      const ParamAssignment params = parse_assignments(sets, rep);
      const RelationSet rels = all_relations(rep, qf.e, order, true, threads);
      out << "verify " << qf.name << ":" << assignment_text(params) << " " << rels.relations.size()
          << " relation(s), paths up to length " << order << "\n";
      bool all_equal = true;
      for (unsigned p : primes) {
        const PointSet expected = subrep_points(rep, qf.e, p, params, threads);
        const PointSet actual = variety_points(rels, rep, qf.e, p, params, threads);
        const SetComparison cmp = compare_sets(expected, actual);
        if (cmp.equal()) {
          out << "p=" << p << ": equal, " << expected.size() << " point(s)\n";
          continue;
        }
        all_equal = false;
        out << "p=" << p << ": MISMATCH, " << expected.size() << " subrepresentation point(s), "
            << actual.size() << " variety point(s)\n";
        for (std::size_t k = 0; k < std::min(kMaxWitnesses, cmp.missing.size()); ++k) {
          out << "  missing " << render_point(cmp.missing[k]) << "\n";
        }
        for (std::size_t k = 0; k < std::min(kMaxWitnesses, cmp.extra.size()); ++k) {
          out << "  extra " << render_point(cmp.extra[k]) << "\n";
        }
      }
      return all_equal ? kExitOk : kExitMismatch;
    }

    if (*count_cmd) {
      check_primes(primes);
      if (!validate.empty()) check_primes(validate);
      const ParamAssignment params = parse_assignments(sets, rep);
      out << "count " << qf.name << ":" << assignment_text(params) << "\n";
      std::vector<CountSample> samples;
      for (unsigned p : primes) {
        samples.push_back({p, count_subrepresentations(rep, qf.e, p, params, threads)});
        out << "q=" << p << ": " << samples.back().count << "\n";
      }
      if (!fit) return kExitOk;
      std::vector<CountSample> held_out;
      for (unsigned p : validate) {
        held_out.push_back({p, count_subrepresentations(rep, qf.e, p, params, threads)});
        out << "q=" << p << ": " << held_out.back().count << " (validation)\n";
      }
      const CountingPolynomial cp = fit_counting_polynomial(samples, held_out, counting_degree_bound(rep, qf.e));
      if (!cp.validated()) {
        out << "fit: " << cp.to_string() << " REJECTED: " << cp.failure << "\n";
        return kExitMismatch;
      }
      out << "fit: " << cp.to_string() << "\n";
      out << "euler characteristic: " << euler_characteristic(cp) << "\n";
      return kExitOk;
    }

    if (*chart_cmd) {
      const std::size_t v = rep.quiver.vertex_index(vertex);
      const unsigned d = rep.dim(v);
      const unsigned e = qf.e.at(vertex);
      IndexSubset I0{v, parse_index_list(pivot)};
      if (I0.size() != e) throw InputError("pivot must have " + std::to_string(e) + " indices");
      check_subset(I0, d);
      out << "chart at " << vertex << " with pivot " << render_variable(I0, rep, labeling) << " != 0\n";
      out << "spanning vectors:\n";
      const auto rows = chart_formulas(v, d, I0);
      for (std::size_t k = 0; k < rows.size(); ++k) {
        out << "  n_" << I0.members[k] << " = (";
        for (std::size_t i = 0; i < rows[k].size(); ++i) {
          out << (i ? ", " : "") << render_chart_entry(rows[k][i], rep, labeling);
        }
        out << ")\n";
      }
      out << "membership coefficients (v_j0 = sum_j v_j * n_j0,j):\n";
      for (const auto& [j0, row] : dual_chart_formulas(v, d, I0)) {
        for (const auto& [j, entry] : row) {
          out << "  n_" << j0 << "," << j << " = " << render_chart_entry(entry, rep, labeling) << "\n";
        }
      }
      return kExitOk;
    }

    if (*schubert_cmd) {
      std::set<PlueckerVariable> zero_set;
      for (const auto& z : zeros) zero_set.insert(parse_variable(z, rep));
      std::map<std::size_t, PlueckerVariable> one_map;
      for (const auto& o : ones) {
        PlueckerVariable var = parse_variable(o, rep);
        if (!one_map.emplace(var.vertex, var).second) {
          throw InputError("two --one variables at vertex '" + rep.quiver.vertices[var.vertex] + "'");
        }
      }
      for (const auto& v : zero_set) {
        if (v.size() != qf.e.at(rep.quiver.vertices[v.vertex])) throw InputError("variable size does not match e");
      }
      for (const auto& [vtx, v] : one_map) {
        if (v.size() != qf.e.at(rep.quiver.vertices[vtx])) throw InputError("variable size does not match e");
      }
      const RelationSet rels = all_relations(rep, qf.e, order, classical, threads);
      const auto reduced = schubert_dehomogenize(polynomials_of(rels), zero_set, one_map);
      out << "# " << reduced.size() << " equation(s) on the cell\n";
      for (const auto& poly : reduced) out << canonical_string(poly, rep, labeling) << "\n";
      return kExitOk;
    }

    if (*paths_cmd) {
      for (const auto& path : enumerate_paths(rep.quiver, max_len)) {
        out << path.length() << " " << path.name() << " : " << path.source << " -> " << path.target << "\n";
      }
      return kExitOk;
    }
  } catch (const InputError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace qpr
