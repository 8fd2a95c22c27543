#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hornsat/solver.hpp"

namespace hornsat {

/// Everything the `trace` command reports about one run.
struct TraceDocument {
  std::string input_formula;
  /// Rendered implications, index i is implication i of the Horn form.
  std::vector<std::string> horn_form;
  std::vector<TraceStep> steps;
  LiteralSet final_set;
  bool satisfiable = false;
  bool halted_early = false;
  /// Present iff satisfiable.
  std::optional<Valuation> model;
  std::optional<std::string> shortcut;
};

/// Builds the document for a finished run. The model, when there is one,
/// covers every symbol in `universe` as well as those of `horn`.
TraceDocument make_trace_document(const std::string& input_formula, const HornFormula& horn,
                                  const SolveOutcome& outcome, const SymbolSet& universe,
                                  std::optional<std::string> shortcut = std::nullopt);

/// Model over `universe`: symbols of the least model set to 1, others 0.
Valuation least_model_over(const HornFormula& horn, const LiteralSet& final_set,
                           const SymbolSet& universe);

/// "p=1 q=0 ..." in symbol order.
std::string format_model(const Valuation& v);

/// Single-line JSON object with keys in sorted order. Atoms are strings,
/// top and bot are spelled "top" and "bot", sets are sorted arrays.
std::string to_json(const TraceDocument& doc);

std::string to_text(const TraceDocument& doc);

}  // namespace hornsat
