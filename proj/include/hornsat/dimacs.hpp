#pragma once

#include <cstddef>
#include <string_view>

#include "hornsat/normalform.hpp"

namespace hornsat {

class DimacsError : public Error {
 public:
  DimacsError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Reads DIMACS CNF. Variable k becomes the symbol "x<k>"; a bare "0" is the
/// empty clause and becomes (bot). Lines starting with 'c' are comments. The
/// clause count in the header is informational and not enforced.
CnfFormula parse_dimacs(std::string_view text);

}  // namespace hornsat
