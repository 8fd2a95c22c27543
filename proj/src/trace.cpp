#include "hornsat/trace.hpp"

#include <sstream>

#include "json.hpp"

namespace hornsat {

using nlohmann::json;

Valuation least_model_over(const HornFormula& horn, const LiteralSet& final_set,
                           const SymbolSet& universe) {
  Valuation v = extract_model(horn, final_set);
  for (const PropSymbol& p : universe) {
    if (!final_set.contains(p)) v.set(p, false);
  }
  return v;
}

TraceDocument make_trace_document(const std::string& input_formula, const HornFormula& horn,
                                  const SolveOutcome& outcome, const SymbolSet& universe,
                                  std::optional<std::string> shortcut) {
  TraceDocument doc;
  doc.input_formula = input_formula;
  for (const HornImplication& h : horn.implications) doc.horn_form.push_back(to_string(h));
  doc.steps = outcome.trace;
  doc.final_set = outcome.final_set;
  doc.satisfiable = outcome.satisfiable();
  doc.halted_early = outcome.halted_early;
  if (doc.satisfiable) doc.model = least_model_over(horn, outcome.final_set, universe);
  doc.shortcut = std::move(shortcut);
  return doc;
}

std::string format_model(const Valuation& v) {
  std::string out;
  for (const auto& [symbol, value] : v.assignments()) {
    if (!out.empty()) out += ' ';
    out += symbol.name() + (value ? "=1" : "=0");
  }
  return out;
}

std::string to_json(const TraceDocument& doc) {
  json steps = json::array();
  for (const TraceStep& s : doc.steps) {
    json j;
    j["fired_index"] = s.fired_index ? json(*s.fired_index) : json(nullptr);
    j["consequent_added"] =
        s.consequent_added ? json(to_string(*s.consequent_added)) : json(nullptr);
    j["set_before"] = s.set_before.sorted_names();
    j["set_after"] = s.set_after.sorted_names();
    j["remaining_after"] = s.remaining_after;
    steps.push_back(std::move(j));
  }

  json root;
  root["input_formula"] = doc.input_formula;
  root["horn_form"] = doc.horn_form;
  root["steps"] = std::move(steps);
  root["step_count"] = doc.steps.size();
  root["final_set"] = doc.final_set.sorted_names();
  root["verdict"] = doc.satisfiable ? "SAT" : "UNSAT";
  if (doc.model) {
    json model = json::object();
    for (const auto& [symbol, value] : doc.model->assignments()) {
      model[symbol.name()] = value ? 1 : 0;
    }
    root["model"] = std::move(model);
  } else {
    root["model"] = nullptr;
  }
  root["shortcut"] = doc.shortcut ? json(*doc.shortcut) : json(nullptr);
  return root.dump();
}

std::string to_text(const TraceDocument& doc) {
  std::ostringstream os;
  os << "input: " << doc.input_formula << '\n';
  os << "horn form:\n";
  for (std::size_t i = 0; i < doc.horn_form.size(); ++i) {
    os << "  [" << i << "] " << doc.horn_form[i] << '\n';
  }
  if (doc.horn_form.empty()) os << "  (trivially true)\n";
  os << "trace:\n";
  for (std::size_t k = 0; k < doc.steps.size(); ++k) {
    const TraceStep& s = doc.steps[k];
    os << "  " << (k + 1) << ". ";
    if (s.is_terminal()) {
      os << (doc.halted_early ? "stop, bot derived" : "fixpoint");
    } else {
      os << "fire [" << *s.fired_index << "] " << doc.horn_form.at(*s.fired_index);
    }
    os << "  " << to_string(s.set_after) << '\n';
  }
  os << "final set: " << to_string(doc.final_set) << '\n';
  os << "steps: " << doc.steps.size() << '\n';
  if (doc.shortcut) os << "shortcut: " << *doc.shortcut << '\n';
  os << "verdict: " << (doc.satisfiable ? "SAT" : "UNSAT") << '\n';
  if (doc.model) os << "model: " << format_model(*doc.model) << '\n';
  return os.str();
}

}  // namespace hornsat
