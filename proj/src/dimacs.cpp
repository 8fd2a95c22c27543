#include "hornsat/dimacs.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <string>
#include <vector>

namespace hornsat {

DimacsError::DimacsError(std::size_t line, const std::string& what)
    : Error("dimacs line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

bool parse_int(std::string_view s, long long& value) {
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), last, value);
  return ec == std::errc() && ptr == last;
}

}  // namespace

CnfFormula parse_dimacs(std::string_view text) {
  CnfFormula out;
  bool have_header = false;
  long long vars = 0;
  Clause open;
  bool clause_open = false;
  std::size_t line_no = 0;
  std::size_t open_line = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    const auto fields = split_ws(line);
    if (fields.empty() || fields.front().front() == 'c') continue;

    if (fields.front() == "p") {
      long long clauses = 0;
      if (have_header) throw DimacsError(line_no, "duplicate header");
      if (fields.size() != 4 || fields[1] != "cnf" || !parse_int(fields[2], vars) ||
          !parse_int(fields[3], clauses) || vars < 0 || clauses < 0) {
        throw DimacsError(line_no, "malformed header, expected 'p cnf <vars> <clauses>'");
      }
      have_header = true;
      continue;
    }
    if (!have_header) throw DimacsError(line_no, "clause data before the 'p cnf' header");

    for (std::string_view field : fields) {
      long long lit = 0;
      if (!parse_int(field, lit)) {
        throw DimacsError(line_no, "expected an integer literal, found '" + std::string(field) + "'");
      }
      if (lit == 0) {
        if (open.literals.empty()) open.literals.push_back(Literal::bottom());
        out.clauses.push_back(std::move(open));
        open = Clause{};
        clause_open = false;
        continue;
      }
      const long long var = lit < 0 ? -lit : lit;
      if (var > vars) {
        throw DimacsError(line_no, "literal " + std::to_string(lit) + " exceeds the declared " +
                                       std::to_string(vars) + " variables");
      }
      if (!clause_open) open_line = line_no;
      clause_open = true;
      open.literals.push_back(Literal{Atom::symbol(PropSymbol("x" + std::to_string(var))), lit > 0});
    }
  }

  if (!have_header) throw DimacsError(line_no, "missing 'p cnf' header");
  if (clause_open) throw DimacsError(open_line, "clause is not terminated by 0");
  return out;
}

}  // namespace hornsat
