#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hornsat/formula.hpp"

namespace hornsat {

/// An atomic formula other than verum: either falsum or a symbol.
class Atom {
 public:
  static Atom bottom() { return Atom(); }
  static Atom symbol(PropSymbol p) { return Atom(std::move(p)); }

  bool is_bottom() const noexcept { return !symbol_.has_value(); }
  /// Requires !is_bottom().
  const PropSymbol& prop() const;

  Formula to_formula() const;

  friend bool operator==(const Atom&, const Atom&) = default;
  /// Falsum orders before every symbol.
  friend std::strong_ordering operator<=>(const Atom&, const Atom&) = default;

 private:
  Atom() = default;
  explicit Atom(PropSymbol p) : symbol_(std::move(p)) {}
  std::optional<PropSymbol> symbol_;
};

/// A signed atom. The positive literals are exactly the atoms, falsum
/// included; verum is the negative literal over falsum.
struct Literal {
  Atom atom;
  bool positive;

  static Literal pos(Atom a) { return {std::move(a), true}; }
  static Literal neg(Atom a) { return {std::move(a), false}; }
  static Literal top() { return {Atom::bottom(), false}; }
  static Literal bottom() { return {Atom::bottom(), true}; }

  bool is_top() const noexcept { return !positive && atom.is_bottom(); }
  bool is_bottom() const noexcept { return positive && atom.is_bottom(); }
  bool complements(const Literal& other) const {
    return atom == other.atom && positive != other.positive;
  }

  friend bool operator==(const Literal&, const Literal&) = default;
};

/// Disjunction of literals in source order.
struct Clause {
  std::vector<Literal> literals;

  friend bool operator==(const Clause&, const Clause&) = default;
};

/// Conjunction of clauses in source order.
struct CnfFormula {
  std::vector<Clause> clauses;

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

/// Thrown when CNF distribution would exceed the clause budget.
class CnfBudgetExceeded : public Error {
 public:
  explicit CnfBudgetExceeded(std::size_t budget);
  std::size_t budget() const noexcept { return budget_; }

 private:
  std::size_t budget_;
};

inline constexpr std::size_t kDefaultClauseBudget = 100'000;

/// Equivalence-preserving CNF by negation pushing and distribution of
/// disjunction over conjunction. No auxiliary symbols are introduced.
///
/// Clause-level simplification: clauses holding the verum literal are
/// dropped, repeated literals are dropped, and falsum literals are dropped
/// from clauses that have other literals. Complementary pairs are kept.
/// When every clause is dropped the result is the single clause (true).
CnfFormula to_cnf(const Formula& phi, std::size_t clause_budget = kDefaultClauseBudget);

Formula to_formula(const Literal& l);
/// Left-nested disjunction; an empty clause reads as falsum.
Formula to_formula(const Clause& c);
/// Left-nested conjunction; no clauses reads as verum.
Formula to_formula(const CnfFormula& f);

int eval(const Literal& l, const Valuation& v);
int eval(const Clause& c, const Valuation& v);
int eval(const CnfFormula& f, const Valuation& v);

SymbolSet symbols(const CnfFormula& f);

/// A disjunction of literals is valid iff it holds the verum literal or a
/// complementary pair.
bool clause_is_valid(const Clause& c);

enum class QuickClass { Valid, Contradictory, Unknown };

/// Valid when every clause is valid; Contradictory when some clause is made
/// only of falsum literals (an empty clause counts); Unknown otherwise.
QuickClass cnf_quick_classify(const CnfFormula& f);

std::string to_string(const Atom& a);
std::string to_string(const Literal& l);
std::string to_string(const Clause& c);
std::string to_string(QuickClass c);

}  // namespace hornsat
