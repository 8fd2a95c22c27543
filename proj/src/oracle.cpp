#include "hornsat/oracle.hpp"

namespace hornsat::oracle {

SymbolCapExceeded::SymbolCapExceeded(std::size_t symbols, std::size_t cap)
    : Error("truth table over " + std::to_string(symbols) + " symbols exceeds the cap of " +
            std::to_string(cap)) {}

bool for_each_valuation(const SymbolSet& syms,
                        const std::function<bool(const Valuation&)>& visit, std::size_t cap) {
  const std::size_t n = syms.size();
  if (n > cap || n >= 64) throw SymbolCapExceeded(n, cap);
  const std::vector<PropSymbol> order(syms.begin(), syms.end());
  const std::uint64_t rows = std::uint64_t{1} << n;
  Valuation v;
  for (std::uint64_t row = 0; row < rows; ++row) {
    for (std::size_t i = 0; i < n; ++i) {
      v.set(order[i], ((row >> (n - 1 - i)) & 1U) != 0);
    }
    if (!visit(v)) return false;
  }
  return true;
}

std::vector<Valuation> enumerate_valuations(const SymbolSet& syms, std::size_t cap) {
  std::vector<Valuation> out;
  for_each_valuation(
      syms,
      [&](const Valuation& v) {
        out.push_back(v);
        return true;
      },
      cap);
  return out;
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::Valid:
      return "Valid";
    case Classification::Satisfiable:
      return "Satisfiable";
    case Classification::Contradictory:
      break;
  }
  return "Contradictory";
}

Classification classify(const Formula& phi, std::size_t cap) {
  bool some_true = false;
  bool some_false = false;
  for_each_valuation(
      symbols(phi),
      [&](const Valuation& v) {
        (satisfies(v, phi) ? some_true : some_false) = true;
        return !(some_true && some_false);
      },
      cap);
  if (!some_false) return Classification::Valid;
  return some_true ? Classification::Satisfiable : Classification::Contradictory;
}

bool semantic_consequence(std::span<const Formula> premises, const Formula& phi,
                          std::size_t cap) {
  SymbolSet syms = symbols(phi);
  for (const Formula& f : premises) syms.merge(symbols(f));
  return for_each_valuation(
      syms,
      [&](const Valuation& v) {
        for (const Formula& f : premises) {
          if (!satisfies(v, f)) return true;
        }
        return satisfies(v, phi);
      },
      cap);
}

bool equiv(const Formula& phi, const Formula& psi, std::size_t cap) {
  SymbolSet syms = symbols(phi);
  syms.merge(symbols(psi));
  return for_each_valuation(
      syms, [&](const Valuation& v) { return eval(phi, v) == eval(psi, v); }, cap);
}

std::vector<Valuation> models(const Formula& phi, std::size_t cap) {
  std::vector<Valuation> out;
  for_each_valuation(
      symbols(phi),
      [&](const Valuation& v) {
        if (satisfies(v, phi)) out.push_back(v);
        return true;
      },
      cap);
  return out;
}

}  // namespace hornsat::oracle
