#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hornsat/horn.hpp"

namespace hornsat {

/// Set of atoms drawn from {bot, top} and the propositional symbols. This is
/// the set the forward-chaining engine accumulates.
class LiteralSet {
 public:
  LiteralSet() = default;
  /// The start set {top}.
  static LiteralSet initial();

  bool contains_top() const noexcept { return top_; }
  bool contains_bottom() const noexcept { return bottom_; }
  bool contains(const Atom& a) const;
  bool contains(const PropSymbol& p) const { return symbols_.count(p) > 0; }

  void insert_top() noexcept { top_ = true; }
  void insert(const Atom& a);
  void insert(const PropSymbol& p) { symbols_.insert(p); }

  /// Symbols only; top and bot are reported by the flags above.
  const SymbolSet& symbols() const noexcept { return symbols_; }
  std::size_t size() const noexcept;

  bool is_subset_of(const LiteralSet& other) const;
  LiteralSet united(const LiteralSet& other) const;

  /// Member names sorted bytewise, with top and bot spelled "top"/"bot".
  std::vector<std::string> sorted_names() const;

  friend bool operator==(const LiteralSet&, const LiteralSet&) = default;

 private:
  bool top_ = false;
  bool bottom_ = false;
  SymbolSet symbols_;
};

std::string to_string(const LiteralSet& s);

/// {top} for the verum antecedent, otherwise the set of its atoms.
LiteralSet antecedent_atoms(const Antecedent& a);

/// One recursion step. `fired_index` refers to the position in the input
/// formula, not in the shrinking remainder. A terminal step (the base case)
/// has neither index nor consequent.
struct TraceStep {
  std::optional<std::size_t> fired_index;
  std::optional<Atom> consequent_added;
  LiteralSet set_before;
  LiteralSet set_after;
  std::size_t remaining_after = 0;

  bool is_terminal() const noexcept { return !fired_index.has_value(); }
};

/// Result of a single firing: the implication at `index` of the formula
/// passed to step() is removed and its consequent joins the set.
struct Firing {
  std::size_t index;
  HornFormula remaining;
  LiteralSet set;
};

/// Fires the leftmost implication whose antecedent atoms all lie in `c`.
/// Returns nullopt at a fixpoint, including when `remaining` is empty.
/// Requires top in `c`.
std::optional<Firing> step(const HornFormula& remaining, const LiteralSet& c);

struct RunResult {
  LiteralSet final_set;
  std::vector<TraceStep> trace;
  /// True when early stop cut the run short after bot was derived.
  bool halted_early = false;
};

/// Repeats step() until a fixpoint and returns the accumulated set. The
/// trace lists every firing followed by one terminal step. With
/// `early_stop`, the run ends as soon as bot is in the set; the returned set
/// is then a subset of the full fixpoint that already holds bot.
/// Requires top in `start`.
RunResult saturate(const HornFormula& phi, const LiteralSet& start, bool early_stop = false);

struct SolveOptions {
  bool early_stop = false;
};

struct SolveOutcome {
  /// 1 iff bot is absent from final_set.
  int h = 1;
  LiteralSet final_set;
  std::vector<TraceStep> trace;
  /// Firings plus the terminal step; never exceeds size() + 1.
  std::size_t steps = 0;
  bool halted_early = false;

  bool satisfiable() const noexcept { return h == 1; }
};

/// Runs the engine from {top}.
SolveOutcome decide(const HornFormula& phi, const SolveOptions& options = {});

/// Cheap sufficient conditions for satisfiability, checked without running
/// the engine.
struct Precheck {
  /// No implication concludes bot, so bot is never derived.
  bool no_bottom_consequent = false;
  /// No antecedent is top, so nothing fires from {top} and the run is a
  /// single terminal step.
  bool no_top_antecedent = false;

  bool shortcut() const noexcept { return no_bottom_consequent || no_top_antecedent; }
  /// Human readable list of the conditions that hold; empty if none.
  std::string reason() const;
};

Precheck precheck(const HornFormula& phi);

/// Least model read off a bot-free final set: symbols in the set map to 1,
/// every other symbol of `phi` maps to 0. Throws Error if bot is in the set.
Valuation extract_model(const HornFormula& phi, const LiteralSet& final_set);

}  // namespace hornsat
