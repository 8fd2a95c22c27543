#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hornsat/normalform.hpp"

namespace hornsat {

/// Left-hand side of a Horn implication: either verum or a nonempty
/// conjunction of atoms (falsum allowed). Repeated atoms are dropped,
/// first occurrence wins.
class Antecedent {
 public:
  static Antecedent top() { return Antecedent(); }
  static Antecedent conj(std::vector<Atom> atoms);

  bool is_top() const noexcept { return atoms_.empty(); }
  /// Empty iff is_top().
  const std::vector<Atom>& atoms() const noexcept { return atoms_; }

  Formula to_formula() const;

  friend bool operator==(const Antecedent&, const Antecedent&) = default;

 private:
  Antecedent() = default;
  std::vector<Atom> atoms_;
};

struct HornImplication {
  Antecedent antecedent;
  Atom consequent;

  Formula to_formula() const;

  friend bool operator==(const HornImplication&, const HornImplication&) = default;
};

/// Ordered conjunction of implications. An empty sequence is the
/// "trivially true" formula produced when every clause was valid.
struct HornFormula {
  std::vector<HornImplication> implications;

  std::size_t size() const noexcept { return implications.size(); }
  bool is_trivially_true() const noexcept { return implications.empty(); }
  const HornImplication& operator[](std::size_t i) const { return implications[i]; }

  /// Left-nested conjunction of the implications; verum when empty.
  Formula to_formula() const;

  friend bool operator==(const HornFormula&, const HornFormula&) = default;
};

/// Raised when a clause has two or more positive literals.
class NotHorn : public Error {
 public:
  explicit NotHorn(std::size_t clause_index);
  /// Position of the offending clause in the CNF clause list.
  std::size_t clause_index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// At most one distinct positive literal (falsum counts as positive).
bool is_basic_horn(const Clause& c);

/// Rewrites a basic Horn clause as an implication:
///   L                  => true -> L
///   ~L1 | .. | ~Ln     => L1 & .. & Ln -> false
///   ~L1 | .. | ~Ln | L => L1 & .. & Ln -> L
/// Throws Error if the clause is not basic Horn or holds the verum literal.
HornImplication basic_to_implication(const Clause& c);

/// Drops valid (verum-holding) clauses and rewrites the rest in order.
/// Throws NotHorn with the index into `f.clauses` of the first clause that
/// is not basic Horn.
HornFormula horn_from_cnf(const CnfFormula& f);

HornFormula horn_from_formula(const Formula& phi,
                              std::size_t clause_budget = kDefaultClauseBudget);

SymbolSet symbols(const HornFormula& f);

std::string to_string(const Antecedent& a);
std::string to_string(const HornImplication& h);

}  // namespace hornsat
