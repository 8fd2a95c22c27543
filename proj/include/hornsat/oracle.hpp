#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hornsat/formula.hpp"

namespace hornsat::oracle {

// Brute-force truth tables. Deliberately naive: this is the ground truth the
// solver is checked against.

inline constexpr std::size_t kDefaultSymbolCap = 20;

class SymbolCapExceeded : public Error {
 public:
  SymbolCapExceeded(std::size_t symbols, std::size_t cap);
};

/// Calls `visit` for each of the 2^|syms| valuations, counting in binary over
/// the symbols in sorted order with the first symbol as the most significant
/// bit. Stops early when `visit` returns false. Returns false iff stopped.
bool for_each_valuation(const SymbolSet& syms,
                        const std::function<bool(const Valuation&)>& visit,
                        std::size_t cap = kDefaultSymbolCap);

std::vector<Valuation> enumerate_valuations(const SymbolSet& syms,
                                            std::size_t cap = kDefaultSymbolCap);

enum class Classification { Valid, Satisfiable, Contradictory };

std::string to_string(Classification c);

/// Valid if every valuation satisfies phi, Contradictory if none does,
/// Satisfiable otherwise.
Classification classify(const Formula& phi, std::size_t cap = kDefaultSymbolCap);

bool semantic_consequence(std::span<const Formula> premises, const Formula& phi,
                          std::size_t cap = kDefaultSymbolCap);

bool equiv(const Formula& phi, const Formula& psi, std::size_t cap = kDefaultSymbolCap);

/// Satisfying valuations over symbols(phi), in enumeration order.
std::vector<Valuation> models(const Formula& phi, std::size_t cap = kDefaultSymbolCap);

}  // namespace hornsat::oracle
