// Acceptance suite: one line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "qpr/cli.hpp"
#include "qpr/counting.hpp"
#include "qpr/field.hpp"
#include "qpr/oracle.hpp"
#include "qpr/relations.hpp"
#include "test_support.hpp"

using namespace qpr;
using namespace qpr::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + std::string("FAILED: ") + what;
    }
  }
  void note(const std::string& text) { detail += (detail.empty() ? "" : "; ") + text; }
};

struct Criterion {
  int number;
  const char* title;
  double limit_seconds;
  std::function<Outcome()> body;
};

RelationPolynomial D(const Representation& rep, const std::string& name) {
  return RelationPolynomial::variable(parse_variable(name, rep));
}

std::string run(const std::vector<std::string>& args, int* code = nullptr) {
  std::ostringstream out, err;
  int rc = run_cli(args, out, err);
  if (code) *code = rc;
  return out.str() + err.str();
}

bool zero_set_matches(const Representation& rep, const DimensionVector& e, std::uint32_t p,
                   const ParamAssignment& params, const std::vector<RelationPolynomial>& relations) {
  return compare_sets(subrep_points(rep, e, p, params), variety_points(relations, rep, e, p, params)).equal();
}

std::vector<CountSample> counts(const QuiverFile& file, std::initializer_list<std::uint32_t> primes,
                                const ParamAssignment& params = {}) {
  std::vector<CountSample> out;
  for (auto p : primes) out.push_back({p, count_subrepresentations(file.rep, file.e, p, params)});
  return out;
}

std::string show(const std::vector<CountSample>& samples) {
  std::string out;
  for (const auto& s : samples) out += (out.empty() ? "" : ",") + std::to_string(s.q) + ":" + std::to_string(s.count);
  return out;
}

// 1. Del Pezzo relations and the sign of E(c).
Outcome relation_regeneration() {
  Outcome o;
  auto ex1 = example1();
  const auto& rep = ex1.rep;
  int code = 0;
  std::string text = run({"relations", fixture_path("example1_del_pezzo.quiver"), "--labels", "global"}, &code);
  std::size_t lines = 0;
  for (std::size_t pos = 0; (pos = text.find("\nE(", pos)) != std::string::npos; ++pos) ++lines;
  o.require(code == 0 && lines == 3, "relations prints 3 relations");

  auto set = all_relations(rep, ex1.e, 1, true);
  o.require(set.relations.size() == 3, "3 relations generated");
  if (set.relations.size() != 3) return o;
  auto d = [&](const char* name) { return D(rep, name); };
  o.require(proportional_eq(set.relations[0].polynomial, d("Delta[5]") * d("Delta[1,3]") - d("Delta[4]") * d("Delta[2,3]")),
            "E(a) = Delta5 Delta13 - Delta4 Delta23");
  o.require(proportional_eq(set.relations[1].polynomial, d("Delta[6]") * d("Delta[1,3]") - d("Delta[7]") * d("Delta[1,2]")),
            "E(b) = Delta6 Delta13 - Delta7 Delta12");
  auto displayed_c = d("Delta[9]") * d("Delta[1,2]") - d("Delta[8]") * d("Delta[2,3]");
  o.require(proportional_eq(set.relations[2].polynomial, d("Delta[8]") * d("Delta[2,3]") + d("Delta[9]") * d("Delta[1,2]")),
            "E(c) = Delta8 Delta23 + Delta9 Delta12");

  auto formula = polynomials_of(set);
  auto displayed = formula;
  displayed[2] = displayed_c;
  for (std::uint32_t p : {2U, 3U}) {
    o.require(zero_set_matches(rep, ex1.e, p, {}, formula), "formula variant equals subrep_points over F_" + std::to_string(p));
  }
  o.note("formula E(c) matches subrep_points over F_2, F_3");
  for (std::uint32_t p : {2U, 3U, 5U}) {
    const bool displayed_equal = zero_set_matches(rep, ex1.e, p, {}, displayed);
    if (p == 5) {
      o.require(!displayed_equal, "displayed variant differs from subrep_points over F_5");
      continue;
    }
    std::string why;
    if (displayed_equal) {
      PrimeField f(p);
      bool same_mod_p = true;
      const RelationPolynomial difference = displayed_c - formula[2];
      for (const auto& [monomial, c] : difference.terms()) {
        same_mod_p = same_mod_p && f.from_rational(c.constant_value()).is_zero();
      }
      if (same_mod_p) why = " (impossible: the two variants coincide mod " + std::to_string(p) + ")";
    }
    o.require(!displayed_equal, "displayed variant differs from subrep_points over F_" + std::to_string(p) + why);
  }
  return o;
}

// 2. Relation counts.
Outcome relation_counts() {
  Outcome o;
  auto ex1 = example1(), ex2 = example2(), ex3 = example3();
  const auto n2 = all_relations(ex2.rep, ex2.e, 1, true).relations.size();
  const auto n3 = all_relations(ex3.rep, ex3.e, 1, true).relations.size();
  std::size_t classical = 0;
  for (const auto& v : ex1.rep.quiver.vertices) classical += classical_relations(ex1.rep, ex1.e, v).size();
  o.require(n2 == 1, "example 2 has 1 relation");
  o.require(n3 == 4, "example 3 has 4 relations");
  o.require(classical == 0, "example 1 has no classical relations");
  o.note("counts " + std::to_string(n2) + ", " + std::to_string(n3) + ", classical " + std::to_string(classical));
  return o;
}

// 3. Set-level equality on the fixtures and on random instances.
Outcome oracle_equivalence() {
  Outcome o;
  std::size_t comparisons = 0;
  for (const auto& file : {example1(), example2(), example3()}) {
    auto relations = polynomials_of(all_relations(file.rep, file.e, 1, true));
    std::vector<ParamAssignment> params{{}};
    if (!file.rep.parameters.empty()) params = {lambda(0), lambda(1), lambda(2)};
    for (const auto& at : params) {
      for (std::uint32_t p : {2U, 3U}) {
        o.require(zero_set_matches(file.rep, file.e, p, at, relations), file.name + " over F_" + std::to_string(p));
        ++comparisons;
      }
    }
  }
  std::mt19937 rng(20260101);
  for (int trial = 0; trial < 25; ++trial) {
    auto inst = random_instance(rng, 8, 3, 20000, 3);
    auto relations = polynomials_of(all_relations(inst.rep, inst.e, 1, true));
    for (std::uint32_t p : {2U, 3U}) {
      o.require(zero_set_matches(inst.rep, inst.e, p, {}, relations),
                "random instance " + std::to_string(trial) + " over F_" + std::to_string(p));
      ++comparisons;
    }
  }
  o.note(std::to_string(comparisons) + " set comparisons equal");
  return o;
}

// 4. Euler characteristics of the two fibres of the jumping family.
Outcome jumping_euler() {
  Outcome o;
  auto ex2 = example2();
  const unsigned bound = counting_degree_bound(ex2.rep, ex2.e);
  for (auto [lam, poly, chi] : {std::tuple{1L, "q + 1", 2L}, std::tuple{0L, "2*q + 1", 3L}}) {
    auto cp = fit_counting_polynomial(counts(ex2, {2, 3, 5}, lambda(lam)), counts(ex2, {7}, lambda(lam)), bound);
    o.require(cp.validated(), "fit validates at lambda=" + std::to_string(lam));
    if (!cp.validated()) continue;
    o.require(cp.to_string() == poly, std::string("fit is ") + poly);
    o.require(euler_characteristic(cp) == chi, "chi = " + std::to_string(chi));
    o.note("lambda=" + std::to_string(lam) + ": " + cp.to_string() + ", chi=" + std::to_string(euler_characteristic(cp)));
  }
  return o;
}

// 5. Counting polynomial of the del Pezzo example.
Outcome del_pezzo() {
  Outcome o;
  auto ex1 = example1();
  auto cp = fit_counting_polynomial(counts(ex1, {2, 3, 5, 7}), counts(ex1, {11}),
                                    counting_degree_bound(ex1.rep, ex1.e));
  o.require(cp.validated(), "fit validates at 11");
  if (!cp.validated()) return o;
  o.require(euler_characteristic(cp) == 6, "chi = 6");
  o.note("counts " + show(cp.samples) + " validated " + show(cp.validation) + ": " + cp.to_string() +
         ", chi=" + std::to_string(euler_characteristic(cp)));
  return o;
}

// 6. Elliptic component: non-polynomial counts and the chart cubic.
Outcome elliptic() {
  Outcome o;
  auto ex3 = example3();
  auto cp = fit_counting_polynomial(counts(ex3, {2, 3, 5, 7, 11, 13}), counts(ex3, {17, 19}),
                                    counting_degree_bound(ex3.rep, ex3.e));
  o.require(!cp.validated(), "fit fails validation");
  if (cp.witness) {
    o.note("fit through " + show(cp.samples) + " misses q=" + std::to_string(cp.witness->q) + " (count " +
           std::to_string(cp.witness->count) + ", predicted " + to_string(cp(Rational(static_cast<long>(cp.witness->q)))) + ")");
  }

  // a_5 of y^2 = x^3 + x by direct enumeration.
  long affine = 0;
  for (long x = 0; x < 5; ++x) {
    for (long y = 0; y < 5; ++y) affine += ((y * y - x * x * x - x) % 5 + 5) % 5 == 0 ? 1 : 0;
  }
  const long a5 = 5 + 1 - (affine + 1);
  o.require(a5 != 0, "a_5 of y^2 = x^3 + x is nonzero");
  o.note("a_5=" + std::to_string(a5));

  const auto& rep = ex3.rep;
  const auto v1 = IndexSubset{0, {1}}, v2 = IndexSubset{0, {2}}, v3 = IndexSubset{0, {3}};
  const auto v567 = parse_variable("Delta[5,6,7]", rep);
  for (std::uint32_t p : {3U, 5U, 7U}) {
    PrimeField f(p);
    std::size_t on_chart = 0, displayed_fails = 0;
    for (const auto& point : subrep_points(rep, ex3.e, p).points) {
      Fp d1(coordinate(point, v1, 3), p), d2(coordinate(point, v2, 3), p), d3(coordinate(point, v3, 3), p);
      if (d3.is_zero() || coordinate(point, v567, 4) == 0) continue;
      ++on_chart;
      Fp cubic = d2 * d2 * d3 - d1 * d1 * d1 - d1 * d3 * d3;
      Fp displayed = d2 * d2 * d3 - d1 * d1 * d1 + d1 * d3 * d3;
      o.require(cubic.is_zero(), "cubic vanishes at " + render_point(point) + " over F_" + std::to_string(p));
      displayed_fails += displayed.is_zero() ? 0 : 1;
    }
    o.require(on_chart > 0, "chart locus is nonempty over F_" + std::to_string(p));
    o.note("F_" + std::to_string(p) + ": " + std::to_string(on_chart) + " chart points on D2^2 D3 - D1^3 - D1 D3^2 (displayed sign fails at " +
           std::to_string(displayed_fails) + ")");
  }
  return o;
}

// 7. Trivial paths give the classical relation of Gr(2,4).
Outcome zeroth_order() {
  Outcome o;
  Representation rep;
  rep.quiver.vertices = {"p"};
  rep.dims.set("p", 4);
  DimensionVector e({{"p", 2}});
  std::vector<RelationPolynomial> reduced;
  for (const auto& I : k_subsets(0, 4, 1)) {
    for (const auto& J : k_subsets(0, 4, 3)) {
      auto r = higher_order_relation(rep, e, trivial_path("p"), I, J);
      if (r.is_zero()) continue;
      bool seen = false;
      for (const auto& s : reduced) seen = seen || proportional_eq(s, r);
      if (!seen) reduced.push_back(r);
    }
  }
  auto d = [&](const char* name) { return D(rep, name); };
  auto classical = d("Delta[1,2]") * d("Delta[3,4]") - d("Delta[1,3]") * d("Delta[2,4]") + d("Delta[1,4]") * d("Delta[2,3]");
  o.require(reduced.size() == 1, "exactly one relation after deduplication");
  o.require(!reduced.empty() && proportional_eq(reduced[0], classical), "it is the classical relation");
  if (!reduced.empty()) o.note(canonical_string(reduced[0], rep, Labeling::Global));
  return o;
}

// 8. Higher-order relations vanish on subrepresentations.
Outcome higher_order_soundness() {
  Outcome o;
  auto ex2 = example2();
  const auto& rep = ex2.rep;
  const auto paths = enumerate_paths(rep.quiver, 3);
  std::vector<RelationPolynomial> relations;
  for (const auto& path : paths) {
    const std::size_t p = rep.quiver.vertex_index(path.source), q = rep.quiver.vertex_index(path.target);
    const unsigned ep = ex2.e.at(path.source), eq = ex2.e.at(path.target);
    if (ep == 0 || eq + 1 > rep.dim(q)) continue;
    for (const auto& I : k_subsets(p, rep.dim(p), ep - 1)) {
      for (const auto& J : k_subsets(q, rep.dim(q), eq + 1)) {
        auto r = higher_order_relation(rep, ex2.e, path, I, J);
        if (!r.is_zero()) relations.push_back(r);
      }
    }
  }
  PrimeField f5(5);
  std::size_t evaluations = 0, points = 0;
  for (long lam = 0; lam < 5; ++lam) {
    for (const auto& point : subrep_points(rep, ex2.e, 5, lambda(lam)).points) {
      ++points;
      std::map<PlueckerVariable, Fp> values;
      for (std::size_t v = 0; v < rep.quiver.vertices.size(); ++v) {
        const unsigned d = rep.dim(v), e = ex2.e.at(rep.quiver.vertices[v]);
        for (const auto& I : k_subsets(v, d, e)) values.emplace(I, Fp(coordinate(point, I, d), 5));
      }
      for (const auto& r : relations) {
        o.require(r.evaluate(values, {{"lambda", f5.from_int(lam)}}, f5).is_zero(),
                  "relation vanishes at " + render_point(point));
        ++evaluations;
      }
    }
  }
  o.note(std::to_string(paths.size()) + " paths, " + std::to_string(relations.size()) + " relations, " +
         std::to_string(points) + " points, " + std::to_string(evaluations) + " evaluations");
  return o;
}

// 9. Subspace enumeration, Pluecker injectivity and chart round-trips.
Outcome enumeration_integrity() {
  Outcome o;
  std::size_t subspaces = 0;
  for (std::uint32_t p : {2U, 3U, 5U}) {
    for (unsigned d = 0; d <= 5; ++d) {
      for (unsigned e = 0; e <= d; ++e) {
        // Product formula, independent of gaussian_binomial.
        std::uint64_t num = 1, den = 1;
        for (unsigned k = 0; k < e; ++k) {
          std::uint64_t a = 1, b = 1;
          for (unsigned t = 0; t < d - k; ++t) a *= p;
          for (unsigned t = 0; t <= k; ++t) b *= p;
          num *= a - 1;
          den *= b - 1;
        }
        auto list = enumerate_subspaces(p, d, e);
        o.require(list.size() == num / den, "count of (" + std::to_string(p) + "," + std::to_string(d) + "," +
                                                std::to_string(e) + ")");
        std::set<std::vector<std::uint32_t>> images;
        for (const auto& s : list) images.insert(pluecker_of_subspace(s));
        o.require(images.size() == list.size(), "Pluecker map injective");
        subspaces += list.size();
      }
    }
  }
  std::mt19937 rng(905);
  PrimeField f5(5);
  std::size_t charts = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::uniform_int_distribution<unsigned> dim(1, 5);
    const unsigned d = dim(rng);
    std::uniform_int_distribution<unsigned> sub(0, d);
    const unsigned e = sub(rng);
    auto s = random_subspace(rng, 5, d, e);
    std::vector<Fp> delta;
    for (auto x : pluecker_of_subspace(s)) delta.emplace_back(x, 5);
    for (const auto& I0 : k_subsets(0, d, e)) {
      if (delta[subset_rank(I0, d)].is_zero()) continue;
      std::vector<std::vector<std::uint32_t>> rows;
      for (const auto& n : chart_basis(delta, d, e, I0, f5)) {
        rows.emplace_back();
        for (const auto& x : n) rows.back().push_back(x.residue());
      }
      o.require(row_space(5, d, rows) == s, "chart round-trip");
      ++charts;
    }
  }
  o.note(std::to_string(subspaces) + " subspaces enumerated, " + std::to_string(charts) +
         " charts round-tripped on 1000 random subspaces");
  return o;
}

// 10. Output independent of the worker count.
Outcome determinism() {
  Outcome o;
  const std::vector<std::vector<std::string>> commands{
      {"verify", fixture_path("example1_del_pezzo.quiver"), "--primes", "2,3,5"},
      {"verify", fixture_path("example2_jumping.quiver"), "--primes", "2,3,5", "--set", "lambda=1", "--order", "3"},
      {"verify", fixture_path("example3_elliptic.quiver"), "--primes", "2,3,5"},
      {"relations", fixture_path("example1_del_pezzo.quiver"), "--classical", "--order", "2"},
      {"relations", fixture_path("example2_jumping.quiver"), "--order", "3", "--format", "cas"},
      {"relations", fixture_path("example3_elliptic.quiver"), "--classical", "--labels", "local"},
  };
  for (const auto& command : commands) {
    auto with = [&](const char* threads) {
      auto args = command;
      args.push_back("--threads");
      args.push_back(threads);
      int code = 0;
      std::string out = run(args, &code);
      return std::pair{code, out};
    };
    auto one = with("1");
    auto four = with("4");
    o.require(one.first == 0 && one == four, command[0] + " " + command[1] + " identical for 1 and 4 workers");
  }
  o.note(std::to_string(commands.size()) + " commands byte-identical for 1 and 4 workers");
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "relation regeneration (del Pezzo)", 1.0, relation_regeneration},
      {2, "relation counts", 1.0, relation_counts},
      {3, "oracle equivalence", 60.0, oracle_equivalence},
      {4, "jumping Euler characteristic", 5.0, jumping_euler},
      {5, "del Pezzo counting polynomial", 30.0, del_pezzo},
      {6, "elliptic component", 30.0, elliptic},
      {7, "zeroth order equals classical", 1.0, zeroth_order},
      {8, "higher-order soundness", 10.0, higher_order_soundness},
      {9, "enumeration integrity", 30.0, enumeration_integrity},
      {10, "determinism across worker counts", 60.0, determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.body();
    } catch (const std::exception& ex) {
      outcome.require(false, std::string("exception: ") + ex.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.limit_seconds) outcome.require(false, "runtime limit exceeded");
    if (!outcome.pass) ++failures;
    std::printf("[%s] %2d %-36s %8.3fs (limit %5.1fs)  %s\n", outcome.pass ? "PASS" : "FAIL", c.number, c.title,
                seconds, c.limit_seconds, outcome.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
