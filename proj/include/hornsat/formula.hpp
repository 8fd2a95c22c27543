#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>

#include "hornsat/error.hpp"

namespace hornsat {

/// A propositional symbol. Two symbols are the same symbol iff their names
/// are equal. Names start with a letter and continue with letters, digits or
/// underscores.
class PropSymbol {
 public:
  explicit PropSymbol(std::string name);

  const std::string& name() const noexcept { return name_; }

  static bool is_valid_name(std::string_view name) noexcept;

  friend bool operator==(const PropSymbol&, const PropSymbol&) = default;
  friend std::strong_ordering operator<=>(const PropSymbol&,
                                          const PropSymbol&) = default;

 private:
  std::string name_;
};

using SymbolSet = std::set<PropSymbol>;

/// Immutable propositional formula. Copies share structure.
class Formula {
 public:
  enum class Kind : std::uint8_t {
    Falsum,
    Verum,
    Atom,
    Not,
    Or,
    And,
    Implies,
    Iff
  };

  static Formula falsum();
  static Formula verum();
  static Formula atom(PropSymbol symbol);
  static Formula atom(std::string name);
  static Formula negation(Formula operand);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula equivalence(Formula lhs, Formula rhs);

  Kind kind() const noexcept;
  bool is_binary() const noexcept;

  /// Atom only.
  const PropSymbol& symbol() const;
  /// Not only.
  const Formula& operand() const;
  /// Binary connectives only.
  const Formula& lhs() const;
  const Formula& rhs() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

/// Truth assignment. Symbols missing from the map read as 0.
class Valuation {
 public:
  Valuation() = default;
  Valuation(std::initializer_list<std::pair<const PropSymbol, bool>> init)
      : values_(init) {}

  bool operator()(const PropSymbol& p) const;
  void set(const PropSymbol& p, bool value) { values_[p] = value; }
  const std::map<PropSymbol, bool>& assignments() const noexcept {
    return values_;
  }

  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  std::map<PropSymbol, bool> values_;
};

/// Atoms occurring in `phi`. Constants contribute nothing.
SymbolSet symbols(const Formula& phi);

/// Rewrites `phi` into the core connectives {falsum, atom, implies} using
/// the standard abbreviations:
///   ~a = a -> false, true = ~false, a | b = ~a -> b,
///   a & b = ~(~a | ~b), a <-> b = (a -> b) & (b -> a).
Formula desugar(const Formula& phi);

/// Truth value of `phi` under `v` as 0 or 1. Implication is computed as
/// (1 - [a]) + [b] and disjunction as [a] + [b], both saturating at 1.
int eval(const Formula& phi, const Valuation& v);

inline bool satisfies(const Valuation& v, const Formula& phi) {
  return eval(phi, v) == 1;
}

/// ASCII rendering accepted back by parse_formula. Parentheses are only
/// emitted where precedence or associativity requires them.
std::string to_string(const Formula& phi);

/// Number of nodes in the tree.
std::size_t size(const Formula& phi);

}  // namespace hornsat
