#include "hornsat/normalform.hpp"

#include <algorithm>

namespace hornsat {

const PropSymbol& Atom::prop() const {
  if (!symbol_) throw Error("prop() called on falsum");
  return *symbol_;
}

Formula Atom::to_formula() const {
  return symbol_ ? Formula::atom(*symbol_) : Formula::falsum();
}

CnfBudgetExceeded::CnfBudgetExceeded(std::size_t budget)
    : Error("CNF conversion exceeds the clause budget of " + std::to_string(budget)),
      budget_(budget) {}

namespace {

// Clauses here are already normalized; an empty clause list means "valid".
using ClauseList = std::vector<Clause>;

// Applies the clause-level simplifications. Returns nullopt when the clause
// holds the verum literal and must be dropped.
std::optional<Clause> normalize(const Clause& c) {
  Clause out;
  bool saw_bottom = false;
  for (const Literal& l : c.literals) {
    if (l.is_top()) return std::nullopt;
    if (l.is_bottom()) {
      saw_bottom = true;
      continue;
    }
    if (std::find(out.literals.begin(), out.literals.end(), l) == out.literals.end()) {
      out.literals.push_back(l);
    }
  }
  if (out.literals.empty() && saw_bottom) out.literals.push_back(Literal::bottom());
  return out;
}

ClauseList unit(Literal l) {
  if (l.is_top()) return {};
  return {Clause{{std::move(l)}}};
}

class Converter {
 public:
  explicit Converter(std::size_t budget) : budget_(budget) {}

  // CNF of phi when positive, of ~phi otherwise.
  ClauseList convert(const Formula& phi, bool positive) {
    using K = Formula::Kind;
    switch (phi.kind()) {
      case K::Falsum:
        return unit(positive ? Literal::bottom() : Literal::top());
      case K::Verum:
        return unit(positive ? Literal::top() : Literal::bottom());
      case K::Atom:
        return unit(Literal{Atom::symbol(phi.symbol()), positive});
      case K::Not:
        return convert(phi.operand(), !positive);
      case K::And:
        return positive ? both(convert(phi.lhs(), true), convert(phi.rhs(), true))
                        : either(convert(phi.lhs(), false), convert(phi.rhs(), false));
      case K::Or:
        return positive ? either(convert(phi.lhs(), true), convert(phi.rhs(), true))
                        : both(convert(phi.lhs(), false), convert(phi.rhs(), false));
      case K::Implies:
        // a -> b is ~a | b; its negation is a & ~b.
        return positive ? either(convert(phi.lhs(), false), convert(phi.rhs(), true))
                        : both(convert(phi.lhs(), true), convert(phi.rhs(), false));
      case K::Iff: {
        // (a -> b) & (b -> a); its negation is (a & ~b) | (b & ~a).
        const Formula& a = phi.lhs();
        const Formula& b = phi.rhs();
        if (positive) {
          return both(either(convert(a, false), convert(b, true)),
                      either(convert(b, false), convert(a, true)));
        }
        return either(both(convert(a, true), convert(b, false)),
                      both(convert(b, true), convert(a, false)));
      }
    }
    return {};
  }

 private:
  ClauseList both(ClauseList a, ClauseList b) {
    check(a.size() + b.size());
    a.insert(a.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
    return a;
  }

  ClauseList either(const ClauseList& a, const ClauseList& b) {
    check(a.size() * b.size());
    ClauseList out;
    out.reserve(a.size() * b.size());
    for (const Clause& ca : a) {
      for (const Clause& cb : b) {
        Clause merged = ca;
        merged.literals.insert(merged.literals.end(), cb.literals.begin(), cb.literals.end());
        if (auto n = normalize(merged)) out.push_back(std::move(*n));
      }
    }
    return out;
  }

  void check(std::size_t clauses) const {
    if (clauses > budget_) throw CnfBudgetExceeded(budget_);
  }

  std::size_t budget_;
};

template <class Items, class Fn>
Formula fold(const Items& items, Formula empty, Fn combine) {
  if (items.empty()) return empty;
  Formula acc = to_formula(items.front());
  for (std::size_t i = 1; i < items.size(); ++i) acc = combine(acc, to_formula(items[i]));
  return acc;
}

}  // namespace

CnfFormula to_cnf(const Formula& phi, std::size_t clause_budget) {
  CnfFormula out{Converter(clause_budget).convert(phi, true)};
  if (out.clauses.empty()) out.clauses.push_back(Clause{{Literal::top()}});
  return out;
}

Formula to_formula(const Literal& l) {
  if (l.is_top()) return Formula::verum();
  Formula a = l.atom.to_formula();
  return l.positive ? a : Formula::negation(a);
}

Formula to_formula(const Clause& c) { return fold(c.literals, Formula::falsum(), Formula::disjunction); }

Formula to_formula(const CnfFormula& f) { return fold(f.clauses, Formula::verum(), Formula::conjunction); }

int eval(const Literal& l, const Valuation& v) {
  const int atom_value = l.atom.is_bottom() ? 0 : (v(l.atom.prop()) ? 1 : 0);
  return l.positive ? atom_value : 1 - atom_value;
}

int eval(const Clause& c, const Valuation& v) {
  return std::any_of(c.literals.begin(), c.literals.end(),
                     [&](const Literal& l) { return eval(l, v) == 1; })
             ? 1
             : 0;
}

int eval(const CnfFormula& f, const Valuation& v) {
  return std::all_of(f.clauses.begin(), f.clauses.end(),
                     [&](const Clause& c) { return eval(c, v) == 1; })
             ? 1
             : 0;
}

SymbolSet symbols(const CnfFormula& f) {
  SymbolSet out;
  for (const Clause& c : f.clauses) {
    for (const Literal& l : c.literals) {
      if (!l.atom.is_bottom()) out.insert(l.atom.prop());
    }
  }
  return out;
}

bool clause_is_valid(const Clause& c) {
  const auto& lits = c.literals;
  for (std::size_t i = 0; i < lits.size(); ++i) {
    if (lits[i].is_top()) return true;
    for (std::size_t j = i + 1; j < lits.size(); ++j) {
      if (lits[i].complements(lits[j])) return true;
    }
  }
  return false;
}

QuickClass cnf_quick_classify(const CnfFormula& f) {
  const auto only_bottom = [](const Clause& c) {
    return std::all_of(c.literals.begin(), c.literals.end(),
                       [](const Literal& l) { return l.is_bottom(); });
  };
  if (std::any_of(f.clauses.begin(), f.clauses.end(), only_bottom)) {
    return QuickClass::Contradictory;
  }
  if (std::all_of(f.clauses.begin(), f.clauses.end(), clause_is_valid)) {
    return QuickClass::Valid;
  }
  return QuickClass::Unknown;
}

std::string to_string(const Atom& a) { return a.is_bottom() ? "bot" : a.prop().name(); }

std::string to_string(const Literal& l) {
  if (l.is_top()) return "top";
  return l.positive ? to_string(l.atom) : "~" + to_string(l.atom);
}

std::string to_string(const Clause& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.literals.size(); ++i) {
    if (i > 0) out += " | ";
    out += to_string(c.literals[i]);
  }
  return out + ")";
}

std::string to_string(QuickClass c) {
  switch (c) {
    case QuickClass::Valid:
      return "Valid";
    case QuickClass::Contradictory:
      return "Contradictory";
    case QuickClass::Unknown:
      break;
  }
  return "Unknown";
}

}  // namespace hornsat
