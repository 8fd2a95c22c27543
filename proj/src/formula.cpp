#include "hornsat/formula.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace hornsat {

PropSymbol::PropSymbol(std::string name) : name_(std::move(name)) {
  if (!is_valid_name(name_)) {
    throw Error("invalid propositional symbol name '" + name_ + "'");
  }
}

bool PropSymbol::is_valid_name(std::string_view name) noexcept {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) {
    return false;
  }
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

struct Formula::Node {
  Kind kind;
  std::optional<PropSymbol> symbol;
  std::optional<Formula> lhs;
  std::optional<Formula> rhs;
};

Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Formula Formula::falsum() {
  static const Formula f(std::make_shared<const Node>(Node{Kind::Falsum, {}, {}, {}}));
  return f;
}

Formula Formula::verum() {
  static const Formula t(std::make_shared<const Node>(Node{Kind::Verum, {}, {}, {}}));
  return t;
}

Formula Formula::atom(PropSymbol symbol) {
  return Formula(std::make_shared<const Node>(Node{Kind::Atom, std::move(symbol), {}, {}}));
}

Formula Formula::atom(std::string name) { return atom(PropSymbol(std::move(name))); }

Formula Formula::negation(Formula operand) {
  return Formula(std::make_shared<const Node>(Node{Kind::Not, {}, std::move(operand), {}}));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Node{Kind::Or, {}, std::move(lhs), std::move(rhs)}));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Node{Kind::And, {}, std::move(lhs), std::move(rhs)}));
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::Implies, {}, std::move(lhs), std::move(rhs)}));
}

Formula Formula::equivalence(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Node{Kind::Iff, {}, std::move(lhs), std::move(rhs)}));
}

Formula::Kind Formula::kind() const noexcept { return node_->kind; }

bool Formula::is_binary() const noexcept {
  switch (node_->kind) {
    case Kind::Or:
    case Kind::And:
    case Kind::Implies:
    case Kind::Iff:
      return true;
    default:
      return false;
  }
}

const PropSymbol& Formula::symbol() const {
  if (node_->kind != Kind::Atom) throw Error("symbol() called on a non-atomic formula");
  return *node_->symbol;
}

const Formula& Formula::operand() const {
  if (node_->kind != Kind::Not) throw Error("operand() called on a non-negation");
  return *node_->lhs;
}

const Formula& Formula::lhs() const {
  if (!is_binary()) throw Error("lhs() called on a non-binary formula");
  return *node_->lhs;
}

const Formula& Formula::rhs() const {
  if (!is_binary()) throw Error("rhs() called on a non-binary formula");
  return *node_->rhs;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::Falsum:
    case Formula::Kind::Verum:
      return true;
    case Formula::Kind::Atom:
      return a.symbol() == b.symbol();
    case Formula::Kind::Not:
      return a.operand() == b.operand();
    default:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

bool Valuation::operator()(const PropSymbol& p) const {
  auto it = values_.find(p);
  return it != values_.end() && it->second;
}

namespace {

void collect_symbols(const Formula& phi, SymbolSet& out) {
  switch (phi.kind()) {
    case Formula::Kind::Falsum:
    case Formula::Kind::Verum:
      return;
    case Formula::Kind::Atom:
      out.insert(phi.symbol());
      return;
    case Formula::Kind::Not:
      collect_symbols(phi.operand(), out);
      return;
    default:
      collect_symbols(phi.lhs(), out);
      collect_symbols(phi.rhs(), out);
  }
}

Formula core_not(Formula f) { return Formula::implication(std::move(f), Formula::falsum()); }

Formula core_or(Formula a, Formula b) {
  return Formula::implication(core_not(std::move(a)), std::move(b));
}

Formula core_and(Formula a, Formula b) {
  return core_not(core_or(core_not(std::move(a)), core_not(std::move(b))));
}

int saturate(int x) { return x > 1 ? 1 : x; }

// Binding strength used when rendering; higher binds tighter.
int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Iff:
      return 1;
    case Formula::Kind::Implies:
      return 2;
    case Formula::Kind::Or:
      return 3;
    case Formula::Kind::And:
      return 4;
    case Formula::Kind::Not:
      return 5;
    default:
      return 6;
  }
}

bool right_associative(Formula::Kind k) {
  return k == Formula::Kind::Implies || k == Formula::Kind::Iff;
}

const char* infix(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Iff:
      return " <-> ";
    case Formula::Kind::Implies:
      return " -> ";
    case Formula::Kind::Or:
      return " | ";
    default:
      return " & ";
  }
}

void render(const Formula& phi, std::string& out);

void render_child(const Formula& child, bool parenthesize, std::string& out) {
  if (parenthesize) out += '(';
  render(child, out);
  if (parenthesize) out += ')';
}

void render(const Formula& phi, std::string& out) {
  const auto k = phi.kind();
  switch (k) {
    case Formula::Kind::Falsum:
      out += "bot";
      return;
    case Formula::Kind::Verum:
      out += "top";
      return;
    case Formula::Kind::Atom:
      out += phi.symbol().name();
      return;
    case Formula::Kind::Not:
      out += '~';
      render_child(phi.operand(), precedence(phi.operand().kind()) < precedence(k), out);
      return;
    default:
      break;
  }
  const int level = precedence(k);
  const int lhs_level = precedence(phi.lhs().kind());
  const int rhs_level = precedence(phi.rhs().kind());
  const bool right = right_associative(k);
  render_child(phi.lhs(), lhs_level < level || (lhs_level == level && right), out);
  out += infix(k);
  render_child(phi.rhs(), rhs_level < level || (rhs_level == level && !right), out);
}

}  // namespace

SymbolSet symbols(const Formula& phi) {
  SymbolSet out;
  collect_symbols(phi, out);
  return out;
}

Formula desugar(const Formula& phi) {
  switch (phi.kind()) {
    case Formula::Kind::Falsum:
    case Formula::Kind::Atom:
      return phi;
    case Formula::Kind::Verum:
      return core_not(Formula::falsum());
    case Formula::Kind::Not:
      return core_not(desugar(phi.operand()));
    case Formula::Kind::Or:
      return core_or(desugar(phi.lhs()), desugar(phi.rhs()));
    case Formula::Kind::And:
      return core_and(desugar(phi.lhs()), desugar(phi.rhs()));
    case Formula::Kind::Implies:
      return Formula::implication(desugar(phi.lhs()), desugar(phi.rhs()));
    case Formula::Kind::Iff: {
      Formula a = desugar(phi.lhs());
      Formula b = desugar(phi.rhs());
      return core_and(Formula::implication(a, b), Formula::implication(b, a));
    }
  }
  return phi;
}

int eval(const Formula& phi, const Valuation& v) {
  switch (phi.kind()) {
    case Formula::Kind::Falsum:
      return 0;
    case Formula::Kind::Verum:
      return 1;
    case Formula::Kind::Atom:
      return v(phi.symbol()) ? 1 : 0;
    case Formula::Kind::Not:
      return 1 - eval(phi.operand(), v);
    case Formula::Kind::Or:
      return saturate(eval(phi.lhs(), v) + eval(phi.rhs(), v));
    case Formula::Kind::And:
      return eval(phi.lhs(), v) * eval(phi.rhs(), v);
    case Formula::Kind::Implies:
      return saturate((1 - eval(phi.lhs(), v)) + eval(phi.rhs(), v));
    case Formula::Kind::Iff:
      return eval(phi.lhs(), v) == eval(phi.rhs(), v) ? 1 : 0;
  }
  return 0;
}

std::string to_string(const Formula& phi) {
  std::string out;
  render(phi, out);
  return out;
}

std::size_t size(const Formula& phi) {
  switch (phi.kind()) {
    case Formula::Kind::Falsum:
    case Formula::Kind::Verum:
    case Formula::Kind::Atom:
      return 1;
    case Formula::Kind::Not:
      return 1 + size(phi.operand());
    default:
      return 1 + size(phi.lhs()) + size(phi.rhs());
  }
}

}  // namespace hornsat
