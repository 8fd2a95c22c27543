#include "hornsat/solver.hpp"

#include <algorithm>

namespace hornsat {

LiteralSet LiteralSet::initial() {
  LiteralSet s;
  s.insert_top();
  return s;
}

bool LiteralSet::contains(const Atom& a) const {
  return a.is_bottom() ? bottom_ : contains(a.prop());
}

void LiteralSet::insert(const Atom& a) {
  if (a.is_bottom()) {
    bottom_ = true;
  } else {
    symbols_.insert(a.prop());
  }
}

std::size_t LiteralSet::size() const noexcept {
  return symbols_.size() + (top_ ? 1 : 0) + (bottom_ ? 1 : 0);
}

bool LiteralSet::is_subset_of(const LiteralSet& other) const {
  if (top_ && !other.top_) return false;
  if (bottom_ && !other.bottom_) return false;
  return std::includes(other.symbols_.begin(), other.symbols_.end(), symbols_.begin(),
                       symbols_.end());
}

LiteralSet LiteralSet::united(const LiteralSet& other) const {
  LiteralSet out = *this;
  out.top_ = top_ || other.top_;
  out.bottom_ = bottom_ || other.bottom_;
  out.symbols_.insert(other.symbols_.begin(), other.symbols_.end());
  return out;
}

std::vector<std::string> LiteralSet::sorted_names() const {
  std::vector<std::string> names;
  names.reserve(size());
  if (top_) names.emplace_back("top");
  if (bottom_) names.emplace_back("bot");
  for (const PropSymbol& p : symbols_) names.push_back(p.name());
  std::sort(names.begin(), names.end());
  return names;
}

std::string to_string(const LiteralSet& s) {
  std::string out = "{";
  const auto names = s.sorted_names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i > 0) out += ", ";
    out += names[i];
  }
  return out + "}";
}

LiteralSet antecedent_atoms(const Antecedent& a) {
  LiteralSet s;
  if (a.is_top()) {
    s.insert_top();
    return s;
  }
  for (const Atom& atom : a.atoms()) s.insert(atom);
  return s;
}

namespace {

bool fires(const HornImplication& h, const LiteralSet& c) {
  if (h.antecedent.is_top()) return c.contains_top();
  return std::all_of(h.antecedent.atoms().begin(), h.antecedent.atoms().end(),
                     [&](const Atom& a) { return c.contains(a); });
}

void require_top(const LiteralSet& c) {
  if (!c.contains_top()) throw Error("the start set must contain top");
}

}  // namespace

std::optional<Firing> step(const HornFormula& remaining, const LiteralSet& c) {
  require_top(c);
  const auto& imps = remaining.implications;
  for (std::size_t i = 0; i < imps.size(); ++i) {
    if (!fires(imps[i], c)) continue;
    Firing f{i, remaining, c};
    f.remaining.implications.erase(f.remaining.implications.begin() +
                                   static_cast<std::ptrdiff_t>(i));
    f.set.insert(imps[i].consequent);
    return f;
  }
  return std::nullopt;
}

RunResult saturate(const HornFormula& phi, const LiteralSet& start, bool early_stop) {
  require_top(start);
  RunResult result{start, {}, false};
  LiteralSet& set = result.final_set;

  // Original positions of the implications not yet fired, in source order.
  std::vector<std::size_t> pending(phi.size());
  for (std::size_t i = 0; i < pending.size(); ++i) pending[i] = i;

  while (true) {
    auto it = std::find_if(pending.begin(), pending.end(),
                           [&](std::size_t i) { return fires(phi[i], set); });
    if (it == pending.end()) break;
    const std::size_t index = *it;
    pending.erase(it);

    TraceStep s;
    s.fired_index = index;
    s.consequent_added = phi[index].consequent;
    s.set_before = set;
    set.insert(phi[index].consequent);
    s.set_after = set;
    s.remaining_after = pending.size();
    result.trace.push_back(std::move(s));

    if (early_stop && set.contains_bottom()) {
      result.halted_early = true;
      break;
    }
  }

  TraceStep terminal;
  terminal.set_before = set;
  terminal.set_after = set;
  terminal.remaining_after = pending.size();
  result.trace.push_back(std::move(terminal));
  return result;
}

SolveOutcome decide(const HornFormula& phi, const SolveOptions& options) {
  RunResult run = saturate(phi, LiteralSet::initial(), options.early_stop);
  SolveOutcome out;
  out.h = run.final_set.contains_bottom() ? 0 : 1;
  out.steps = run.trace.size();
  out.final_set = std::move(run.final_set);
  out.trace = std::move(run.trace);
  out.halted_early = run.halted_early;
  return out;
}

std::string Precheck::reason() const {
  std::string out;
  if (no_bottom_consequent) out = "no implication concludes bot";
  if (no_top_antecedent) {
    if (!out.empty()) out += "; ";
    out += "no antecedent is top";
  }
  return out;
}

Precheck precheck(const HornFormula& phi) {
  const auto& imps = phi.implications;
  Precheck p;
  p.no_bottom_consequent = std::none_of(imps.begin(), imps.end(), [](const HornImplication& h) {
    return h.consequent.is_bottom();
  });
  p.no_top_antecedent = std::none_of(imps.begin(), imps.end(), [](const HornImplication& h) {
    return h.antecedent.is_top();
  });
  return p;
}

Valuation extract_model(const HornFormula& phi, const LiteralSet& final_set) {
  if (final_set.contains_bottom()) {
    throw Error("cannot extract a model from a set that contains bot");
  }
  Valuation v;
  for (const PropSymbol& p : symbols(phi)) v.set(p, false);
  for (const PropSymbol& p : final_set.symbols()) v.set(p, true);
  return v;
}

}  // namespace hornsat
