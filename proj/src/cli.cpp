#include "hornsat/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "hornsat/dimacs.hpp"
#include "hornsat/oracle.hpp"
#include "hornsat/parser.hpp"
#include "hornsat/trace.hpp"

namespace hornsat {

namespace {

struct Options {
  std::string input;
  bool dimacs = false;
  bool no_early_stop = false;
  bool no_precheck = false;
  bool json = false;
  std::size_t max_clauses = kDefaultClauseBudget;
  std::size_t max_symbols = oracle::kDefaultSymbolCap;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

// Input after parsing and conversion, shared by every subcommand.
struct Problem {
  Formula formula = Formula::verum();
  CnfFormula cnf;
};

Problem load(const Options& opt, std::istream& in) {
  const std::string text = read_input(opt.input, in);
  Problem p;
  if (opt.dimacs) {
    p.cnf = parse_dimacs(text);
    p.formula = to_formula(p.cnf);
  } else {
    p.formula = parse_formula(text);
    p.cnf = to_cnf(p.formula, opt.max_clauses);
  }
  return p;
}

int solve(const Options& opt, std::istream& in, std::ostream& out) {
  const Problem p = load(opt, in);
  const HornFormula horn = horn_from_cnf(p.cnf);
  const SymbolSet universe = symbols(p.formula);

  // Without a top antecedent nothing fires, so {top} is the final set and
  // the all-zero valuation is the least model.
  if (!opt.no_precheck && precheck(horn).no_top_antecedent) {
    out << "SAT\n";
    const std::string model = format_model(least_model_over(horn, LiteralSet::initial(), universe));
    if (!model.empty()) out << model << '\n';
    return kExitSat;
  }

  const SolveOutcome r = decide(horn, {.early_stop = !opt.no_early_stop});
  if (!r.satisfiable()) {
    out << "UNSAT\n";
    return kExitUnsat;
  }
  out << "SAT\n";
  const std::string model = format_model(least_model_over(horn, r.final_set, universe));
  if (!model.empty()) out << model << '\n';
  return kExitSat;
}

int trace(const Options& opt, std::istream& in, std::ostream& out) {
  const Problem p = load(opt, in);
  const HornFormula horn = horn_from_cnf(p.cnf);
  std::optional<std::string> shortcut;
  if (!opt.no_precheck) {
    const Precheck pc = precheck(horn);
    if (pc.shortcut()) shortcut = pc.reason();
  }
  const SolveOutcome r = decide(horn, {.early_stop = !opt.no_early_stop});
  const TraceDocument doc =
      make_trace_document(to_string(p.formula), horn, r, symbols(p.formula), shortcut);
  if (opt.json) {
    out << to_json(doc) << '\n';
  } else {
    out << to_text(doc);
  }
  return r.satisfiable() ? kExitSat : kExitUnsat;
}

int convert(const Options& opt, std::istream& in, std::ostream& out) {
  const Problem p = load(opt, in);
  out << "cnf:\n";
  for (const Clause& c : p.cnf.clauses) out << "  " << to_string(c) << '\n';
  const HornFormula horn = horn_from_cnf(p.cnf);
  out << "horn:\n";
  for (const HornImplication& h : horn.implications) out << "  " << to_string(h) << '\n';
  if (horn.is_trivially_true()) out << "  (trivially true)\n";
  return kExitOk;
}

int classify(const Options& opt, std::istream& in, std::ostream& out) {
  const Formula phi = parse_formula(read_input(opt.input, in));
  out << oracle::to_string(oracle::classify(phi, opt.max_symbols)) << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Horn satisfiability by recursive forward chaining"};
  app.name(args.empty() ? "hornsat" : args.front());
  app.require_subcommand(1);

  Options opt;
  const auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", opt.input, "Input file, or - for standard input")->required();
  };
  const auto add_solver_flags = [&](CLI::App* cmd) {
    cmd->add_flag("--dimacs", opt.dimacs, "Read DIMACS CNF instead of formula text");
    cmd->add_flag("--no-early-stop", opt.no_early_stop, "Run to the fixpoint even after bot");
    cmd->add_flag("--no-precheck", opt.no_precheck, "Skip the satisfiability shortcuts");
    cmd->add_option("--max-clauses", opt.max_clauses, "Clause budget for CNF conversion")
        ->capture_default_str();
  };

  CLI::App* solve_cmd = app.add_subcommand("solve", "Decide satisfiability and print a model");
  add_input(solve_cmd);
  add_solver_flags(solve_cmd);

  CLI::App* trace_cmd = app.add_subcommand("trace", "Solve and print the full run");
  add_input(trace_cmd);
  add_solver_flags(trace_cmd);
  trace_cmd->add_flag("--json", opt.json, "Emit the trace as one JSON object");

  CLI::App* convert_cmd = app.add_subcommand("convert", "Print the CNF and the Horn form");
  add_input(convert_cmd);
  convert_cmd->add_flag("--dimacs", opt.dimacs, "Read DIMACS CNF instead of formula text");
  convert_cmd->add_option("--max-clauses", opt.max_clauses, "Clause budget for CNF conversion")
      ->capture_default_str();

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "Truth-table verdict: Valid, Satisfiable or Contradictory");
  add_input(classify_cmd);
  classify_cmd->add_option("--max-symbols", opt.max_symbols, "Largest truth table to build")
      ->capture_default_str();

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  if (args.empty()) argv.push_back("hornsat");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve_cmd->parsed()) return solve(opt, in, out);
    if (trace_cmd->parsed()) return trace(opt, in, out);
    if (convert_cmd->parsed()) return convert(opt, in, out);
    return classify(opt, in, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace hornsat
