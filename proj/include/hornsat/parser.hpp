#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hornsat/formula.hpp"

namespace hornsat {

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string found,
             std::vector<std::string> expected);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& found() const noexcept { return found_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string found_;
  std::vector<std::string> expected_;
};

/// Parses the textual formula syntax.
///
///   constants   false bot ⊥ | true top ⊤
///   negation    ~ ! ¬
///   and         & /\ ∧
///   or          | \/ ∨
///   implies     -> →
///   iff         <-> ↔
///
/// Binding strength from tightest: negation, and, or, implies, iff. Implies
/// and iff group to the right, and/or to the left. Lines and columns in
/// errors are 1-based; columns count code points.
Formula parse_formula(std::string_view text);

}  // namespace hornsat
