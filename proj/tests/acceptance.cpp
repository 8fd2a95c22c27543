// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "hornsat/oracle.hpp"
#include "hornsat/solver.hpp"
#include "support/builders.hpp"
#include "support/generators.hpp"

using namespace hornsat;
using namespace hornsat::testing;
using Clock = std::chrono::steady_clock;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double budget_ms;  // 0 means no runtime bound
  std::function<Verdict()> body;
};

// Outcomes over the exhaustive small family are shared by criteria 4, 10, 11.
const std::vector<HornFormula>& family() {
  static const std::vector<HornFormula> f = small_horn_family();
  return f;
}

LiteralSet consequents_of(const HornFormula& f) {
  LiteralSet s;
  for (const auto& h : f.implications) s.insert(h.consequent);
  return s;
}

std::vector<std::size_t> fired(const SolveOutcome& r) {
  std::vector<std::size_t> out;
  for (const TraceStep& s : r.trace) {
    if (!s.is_terminal()) out.push_back(*s.fired_index);
  }
  return out;
}

Verdict golden_example1() {
  Verdict v;
  const SolveOutcome r = decide(example1_horn());
  v.expect(r.final_set == set_of({"p", "q", "r", "s"}, true), "final set " + to_string(r.final_set));
  v.expect(r.h == 0, "h should be 0");
  const std::vector<LiteralSet> chain{set_of({"p"}), set_of({"p", "q"}), set_of({"p", "q", "r"}),
                                      set_of({"p", "q", "r", "s"}),
                                      set_of({"p", "q", "r", "s"}, true)};
  v.expect(r.trace.size() == chain.size() + 1, "trace length");
  for (std::size_t i = 0; i < chain.size() && i < r.trace.size(); ++i) {
    v.expect(r.trace[i].set_after == chain[i], "intermediate set " + std::to_string(i));
  }
  v.expect(fired(r) == std::vector<std::size_t>{0, 4, 2, 1, 3}, "firing order");
  return v;
}

Verdict golden_example2() {
  Verdict v;
  const SolveOutcome r = decide(example2_horn());
  v.expect(r.final_set == set_of({"p"}), "final set " + to_string(r.final_set));
  v.expect(r.h == 1, "h should be 1");
  const Valuation m = extract_model(example2_horn(), r.final_set);
  const Valuation expected{{PropSymbol("p"), true},
                           {PropSymbol("q"), false},
                           {PropSymbol("r"), false},
                           {PropSymbol("s"), false}};
  v.expect(m == expected, "model");
  v.expect(eval(example2_formula(), m) == 1, "model does not satisfy the original formula");
  return v;
}

Verdict golden_example3() {
  Verdict v;
  const SolveOutcome r = decide(example3_horn(), {.early_stop = true});
  v.expect(r.h == 0, "h should be 0");
  v.expect(set_of({"p", "r"}, true).is_subset_of(r.final_set), "final set " + to_string(r.final_set));
  return v;
}

Verdict sound_and_complete() {
  Verdict v;
  std::size_t mismatches = 0;
  for (const HornFormula& f : family()) {
    const bool sat = decide(f).h == 1;
    const bool oracle_sat =
        oracle::classify(f.to_formula()) != oracle::Classification::Contradictory;
    if (sat != oracle_sat) ++mismatches;
  }
  v.expect(family().size() == 28 + 28 * 28 + 28 * 28 * 28, "family size");
  v.expect(mismatches == 0, std::to_string(mismatches) + " mismatches");
  v.detail = v.ok ? std::to_string(family().size()) + " instances" : v.detail;
  return v;
}

Verdict termination_bound() {
  Verdict v;
  Rng rng(1001);
  std::size_t violations = 0;
  std::size_t no_unit = 0;
  for (int i = 0; i < 1000; ++i) {
    HornShape shape{.symbols = 12, .max_implications = 30, .max_antecedent = 3};
    if (i % 4 == 0) shape.top_antecedent = 0.0;
    const HornFormula f = random_horn(rng, shape);
    const SolveOutcome r = decide(f);
    if (r.steps > f.size() + 1) ++violations;
    if (precheck(f).no_top_antecedent) {
      ++no_unit;
      if (!(r.final_set == LiteralSet::initial()) || r.steps != 1 || !fired(r).empty()) {
        ++violations;
      }
    }
  }
  v.expect(no_unit >= 250, "too few formulas without a top antecedent");
  v.expect(violations == 0, std::to_string(violations) + " violations");
  return v;
}

Verdict increasing_and_monotone() {
  Verdict v;
  Rng rng(2002);
  std::size_t violations = 0;
  const HornShape shape{.symbols = 8, .max_implications = 16};
  for (int i = 0; i < 1000; ++i) {
    const HornFormula f = random_horn(rng, shape);
    const LiteralSet c = random_start_set(rng, shape.symbols);
    const LiteralSet d = random_superset(rng, c, shape.symbols);
    const LiteralSet ac = saturate(f, c).final_set;
    const LiteralSet ad = saturate(f, d).final_set;
    if (!c.is_subset_of(ac)) ++violations;
    if (!ac.is_subset_of(c.united(consequents_of(f)))) ++violations;
    if (!ac.is_subset_of(ad)) ++violations;
  }
  v.expect(violations == 0, std::to_string(violations) + " violations");
  return v;
}

Verdict permutation_invariance() {
  Verdict v;
  Rng rng(3003);
  std::size_t violations = 0;
  for (int i = 0; i < 500; ++i) {
    const HornFormula f = random_horn(rng, {.symbols = 10, .max_implications = 20});
    const LiteralSet reference = decide(f).final_set;
    for (int k = 0; k < 5; ++k) {
      if (!(decide(shuffled(rng, f)).final_set == reference)) ++violations;
    }
  }
  v.expect(violations == 0, std::to_string(violations) + " violations");
  return v;
}

Formula disjunction_of(const std::vector<Formula>& fs) {
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = Or(acc, fs[i]);
  return acc;
}

Formula conjunction_of(const std::vector<Formula>& fs) {
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = And(acc, fs[i]);
  return acc;
}

Verdict clause_rewrites() {
  Verdict v;
  const std::vector<Atom> positives{A("p"), A("q"), A("r"), Abot()};
  std::size_t mismatches = 0;
  std::size_t checked = 0;

  // L == top -> L
  for (const Atom& l : positives) {
    const Formula lf = l.to_formula();
    if (!oracle::equiv(lf, Imp(Top(), lf))) ++mismatches;
    const Clause c{{Literal::pos(l)}};
    if (!oracle::equiv(basic_to_implication(c).to_formula(), to_formula(c))) ++mismatches;
    ++checked;
  }

  // Sequences L1..Ln of positive literals, n <= 3.
  std::vector<std::vector<Atom>> seqs;
  for (const Atom& a : positives) {
    seqs.push_back({a});
    for (const Atom& b : positives) {
      seqs.push_back({a, b});
      for (const Atom& c : positives) seqs.push_back({a, b, c});
    }
  }
  for (const auto& seq : seqs) {
    std::vector<Formula> negs;
    std::vector<Formula> atoms;
    Clause clause;
    bool has_bottom = false;
    for (const Atom& a : seq) {
      negs.push_back(Not(a.to_formula()));
      atoms.push_back(a.to_formula());
      clause.literals.push_back(Literal::neg(a));
      has_bottom = has_bottom || a.is_bottom();
    }
    // ~L1 | .. | ~Ln == L1 & .. & Ln -> bot
    if (!oracle::equiv(disjunction_of(negs), Imp(conjunction_of(atoms), Bot()))) ++mismatches;
    // The negative literal over bot is top, which the rewrite refuses.
    if (!has_bottom &&
        !oracle::equiv(basic_to_implication(clause).to_formula(), to_formula(clause))) {
      ++mismatches;
    }
    ++checked;
    for (const Atom& head : positives) {
      // ~L1 | .. | ~Ln | L == L1 & .. & Ln -> L
      std::vector<Formula> with_head = negs;
      with_head.push_back(head.to_formula());
      if (!oracle::equiv(disjunction_of(with_head), Imp(conjunction_of(atoms), head.to_formula()))) {
        ++mismatches;
      }
      Clause c = clause;
      c.literals.push_back(Literal::pos(head));
      if (!has_bottom && !oracle::equiv(basic_to_implication(c).to_formula(), to_formula(c))) {
        ++mismatches;
      }
      ++checked;
    }
  }

  // (a -> g) | (b -> g) == (a & b) -> g
  const std::vector<Formula> instances{at("p"), at("q"), at("r"), Bot(), Top()};
  for (const Formula& a : instances) {
    for (const Formula& b : instances) {
      for (const Formula& g : instances) {
        if (!oracle::equiv(Or(Imp(a, g), Imp(b, g)), Imp(And(a, b), g))) ++mismatches;
        ++checked;
      }
    }
  }
  v.expect(mismatches == 0, std::to_string(mismatches) + " mismatches");
  v.detail = v.ok ? std::to_string(checked) + " shapes" : v.detail;
  return v;
}

Verdict cnf_correctness() {
  Verdict v;
  Rng rng(4004);
  std::size_t mismatches = 0;
  for (int i = 0; i < 500; ++i) {
    const Formula phi = random_formula(rng, 1 + i % 4, 5);
    if (!oracle::equiv(phi, to_formula(to_cnf(phi)))) ++mismatches;
  }
  v.expect(mismatches == 0, std::to_string(mismatches) + " mismatches");
  return v;
}

Verdict least_model() {
  Verdict v;
  std::size_t violations = 0;
  std::size_t satisfiable = 0;
  for (const HornFormula& f : family()) {
    const SolveOutcome r = decide(f);
    if (r.h != 1) continue;
    ++satisfiable;
    for (const Valuation& w : oracle::models(f.to_formula())) {
      for (const PropSymbol& p : r.final_set.symbols()) {
        if (!w(p)) ++violations;
      }
    }
    if (!satisfies(extract_model(f, r.final_set), f.to_formula())) ++violations;
  }
  v.expect(violations == 0, std::to_string(violations) + " violations");
  v.detail = v.ok ? std::to_string(satisfiable) + " satisfiable instances" : v.detail;
  return v;
}

Verdict early_stop_agreement() {
  Verdict v;
  std::size_t mismatches = 0;
  for (const HornFormula& f : family()) {
    if (decide(f, {.early_stop = true}).h != decide(f, {.early_stop = false}).h) ++mismatches;
  }
  v.expect(mismatches == 0, std::to_string(mismatches) + " mismatches");
  return v;
}

struct Captured {
  int code;
  std::string out;
};

Captured run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + HORNSAT_CLI + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

Verdict cli_contract() {
  Verdict v;
  const std::string data = HORNSAT_TEST_DATA;
  const std::array<int, 3> expected_codes{20, 10, 20};
  for (int i = 0; i < 3; ++i) {
    const std::string file = "\"" + data + "/example" + std::to_string(i + 1) + ".txt\"";
    const Captured solve = run_cli("solve " + file);
    v.expect(solve.code == expected_codes[i],
             "example " + std::to_string(i + 1) + " exit " + std::to_string(solve.code));
    const Captured a = run_cli("trace --json " + file);
    const Captured b = run_cli("trace --json " + file);
    v.expect(a.code == expected_codes[i], "trace exit code");
    v.expect(!a.out.empty() && a.out == b.out, "JSON trace differs between runs");
  }
  v.expect(run_cli("solve \"" + data + "/example2.txt\"").out == "SAT\np=1 q=0 r=0 s=0\n",
           "example 2 model line");
  v.expect(run_cli("trace --json \"" + data + "/example1.txt\"").out ==
               read_file(data + "/example1.trace.json"),
           "example 1 JSON differs from the golden file");
  return v;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "golden trace, first worked example", 1, golden_example1},
      {2, "golden trace and model, second worked example", 1, golden_example2},
      {3, "golden trace, third worked example", 1, golden_example3},
      {4, "soundness/completeness over the exhaustive small family", 10'000, sound_and_complete},
      {5, "termination bound on 1000 random formulas", 5'000, termination_bound},
      {6, "increasing and monotone on 1000 random triples", 5'000, increasing_and_monotone},
      {7, "final set invariant under 5 permutations x 500", 5'000, permutation_invariance},
      {8, "clause rewrites and the implication law", 2'000, clause_rewrites},
      {9, "CNF conversion equivalence on 500 random formulas", 10'000, cnf_correctness},
      {10, "least model over the small family", 10'000, least_model},
      {11, "early stop agrees with the full run", 0, early_stop_agreement},
      {12, "CLI exit codes and byte-stable JSON", 0, cli_contract},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    Verdict v = c.body();
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    if (c.budget_ms > 0 && ms >= c.budget_ms) {
      v.ok = false;
      v.detail = "over the " + std::to_string(c.budget_ms) + " ms budget";
    }
    std::ostringstream line;
    line << (v.ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << " ("
         << ms << " ms)";
    if (!v.detail.empty()) line << " - " << v.detail;
    std::cout << line.str() << '\n';
    if (!v.ok) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << '\n';
  return failed == 0 ? 0 : 1;
}
