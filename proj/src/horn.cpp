#include "hornsat/horn.hpp"

#include <algorithm>

namespace hornsat {

Antecedent Antecedent::conj(std::vector<Atom> atoms) {
  if (atoms.empty()) throw Error("a conjunctive antecedent needs at least one atom");
  Antecedent a;
  for (Atom& atom : atoms) {
    if (std::find(a.atoms_.begin(), a.atoms_.end(), atom) == a.atoms_.end()) {
      a.atoms_.push_back(std::move(atom));
    }
  }
  return a;
}

Formula Antecedent::to_formula() const {
  if (is_top()) return Formula::verum();
  Formula acc = atoms_.front().to_formula();
  for (std::size_t i = 1; i < atoms_.size(); ++i) {
    acc = Formula::conjunction(acc, atoms_[i].to_formula());
  }
  return acc;
}

Formula HornImplication::to_formula() const {
  return Formula::implication(antecedent.to_formula(), consequent.to_formula());
}

Formula HornFormula::to_formula() const {
  if (implications.empty()) return Formula::verum();
  Formula acc = implications.front().to_formula();
  for (std::size_t i = 1; i < implications.size(); ++i) {
    acc = Formula::conjunction(acc, implications[i].to_formula());
  }
  return acc;
}

NotHorn::NotHorn(std::size_t clause_index)
    : Error("clause " + std::to_string(clause_index) +
            " has more than one positive literal; the formula is not Horn"),
      index_(clause_index) {}

bool is_basic_horn(const Clause& c) {
  // Clauses have set semantics, so a repeated positive literal counts once.
  const Literal* first = nullptr;
  for (const Literal& l : c.literals) {
    if (!l.positive) continue;
    if (first != nullptr && !(*first == l)) return false;
    first = &l;
  }
  return true;
}

HornImplication basic_to_implication(const Clause& c) {
  if (c.literals.empty()) throw Error("cannot rewrite an empty clause");
  if (!is_basic_horn(c)) throw Error("clause " + to_string(c) + " is not basic Horn");
  std::vector<Atom> negatives;
  std::optional<Atom> positive;
  for (const Literal& l : c.literals) {
    if (l.is_top()) throw Error("clause " + to_string(c) + " is valid; drop it before rewriting");
    if (l.positive) {
      positive = l.atom;
    } else {
      negatives.push_back(l.atom);
    }
  }
  Atom consequent = positive.value_or(Atom::bottom());
  if (negatives.empty()) return {Antecedent::top(), std::move(consequent)};
  return {Antecedent::conj(std::move(negatives)), std::move(consequent)};
}

HornFormula horn_from_cnf(const CnfFormula& f) {
  HornFormula out;
  for (std::size_t i = 0; i < f.clauses.size(); ++i) {
    const Clause& c = f.clauses[i];
    const bool has_top = std::any_of(c.literals.begin(), c.literals.end(),
                                     [](const Literal& l) { return l.is_top(); });
    if (has_top) continue;
    if (!is_basic_horn(c)) throw NotHorn(i);
    out.implications.push_back(basic_to_implication(c));
  }
  return out;
}

HornFormula horn_from_formula(const Formula& phi, std::size_t clause_budget) {
  return horn_from_cnf(to_cnf(phi, clause_budget));
}

SymbolSet symbols(const HornFormula& f) {
  SymbolSet out;
  const auto add = [&](const Atom& a) {
    if (!a.is_bottom()) out.insert(a.prop());
  };
  for (const HornImplication& h : f.implications) {
    for (const Atom& a : h.antecedent.atoms()) add(a);
    add(h.consequent);
  }
  return out;
}

std::string to_string(const Antecedent& a) {
  if (a.is_top()) return "top";
  std::string out;
  for (std::size_t i = 0; i < a.atoms().size(); ++i) {
    if (i > 0) out += " & ";
    out += to_string(a.atoms()[i]);
  }
  return out;
}

std::string to_string(const HornImplication& h) {
  return to_string(h.antecedent) + " -> " + to_string(h.consequent);
}

}  // namespace hornsat
