#include "sproots/cnf.hpp"

#include <charconv>
#include <sstream>

namespace sproots {

void Cnf::validate() const {
  if (num_vars < 1) throw DomainError("CNF needs at least one variable");
  for (std::size_t k = 0; k < clauses.size(); ++k) {
    const Clause& c = clauses[k];
    if (c.empty() || c.size() > kMaxClauseWidth)
      throw DomainError("clause " + std::to_string(k + 1) + " has width " +
                        std::to_string(c.size()) + "; expected 1..3");
    for (const Literal& l : c)
      if (l.var < 1 || l.var > num_vars)
        throw DomainError("variable " + std::to_string(l.var) + " outside 1.." +
                          std::to_string(num_vars));
  }
}

bool satisfies(const Clause& clause, std::uint64_t assignment) {
  for (const Literal& l : clause) {
    const bool value = ((assignment >> (l.var - 1)) & 1u) != 0;
    if (value != l.negated) return true;
  }
  return false;
}

bool satisfies(const Cnf& cnf, std::uint64_t assignment) {
  for (const Clause& c : cnf.clauses)
    if (!satisfies(c, assignment)) return false;
  return true;
}

DummyPair PaddedCnf::dummy_pair(unsigned k) const {
  if (k >= s) throw DomainError("dummy pair index out of range");
  return {base.num_vars + 2 * k + 1, base.num_vars + 2 * k + 2};
}

bool PaddedCnf::satisfies(std::uint64_t assignment) const {
  for (unsigned k = 0; k < s; ++k) {
    const DummyPair p = dummy_pair(k);
    if (((assignment >> (p.first - 1)) & 1u) == 0) return false;
    if (((assignment >> (p.second - 1)) & 1u) == 0) return false;
  }
  return sproots::satisfies(base, assignment);
}

PaddedCnf pad(const Cnf& cnf) {
  const std::size_t m = cnf.clauses.size();
  const unsigned s = m > cnf.num_vars ? static_cast<unsigned>(m - cnf.num_vars) : 0;
  return {cnf, s};
}

// ---------------------------------------------------------------------------

ParseError::ParseError(Kind kind, std::size_t line, const std::string& message)
    : Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      kind_(kind),
      line_(line) {}

namespace {

using Kind = ParseError::Kind;

bool parse_int(std::string_view token, long long& out) {
  const char* first = token.data();
  const char* last = first + token.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

}  // namespace

Cnf parse_dimacs(std::string_view text) {
  Cnf cnf;
  bool have_header = false;
  std::size_t declared_clauses = 0;
  Clause current;
  std::size_t current_line = 0;
  std::size_t line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front() == "c" || tokens.front().starts_with("c")) continue;
    if (tokens.front() == "%") break;

    if (tokens.front() == "p") {
      if (have_header) throw ParseError(Kind::kHeader, line_no, "duplicate problem line");
      long long v = 0;
      long long c = 0;
      if (tokens.size() != 4 || tokens[1] != "cnf" || !parse_int(tokens[2], v) ||
          !parse_int(tokens[3], c))
        throw ParseError(Kind::kHeader, line_no, "expected 'p cnf <vars> <clauses>'");
      if (v < 1 || v > 1'000'000 || c < 0 || c > 100'000'000)
        throw ParseError(Kind::kHeader, line_no,
                         "header counts out of range (need vars >= 1, clauses >= 0)");
      cnf.num_vars = static_cast<unsigned>(v);
      declared_clauses = static_cast<std::size_t>(c);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(Kind::kHeader, line_no, "clause before problem line");

    for (std::string_view token : tokens) {
      long long lit = 0;
      if (!parse_int(token, lit))
        throw ParseError(Kind::kSyntax, line_no, "invalid literal '" + std::string(token) + "'");
      if (lit == 0) {
        if (current.empty()) throw ParseError(Kind::kClauseWidth, line_no, "empty clause");
        if (cnf.clauses.size() == declared_clauses)
          throw ParseError(Kind::kClauseCount, line_no,
                           "more clauses than the " + std::to_string(declared_clauses) +
                               " declared");
        cnf.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      const long long var = lit < 0 ? -lit : lit;
      if (var > static_cast<long long>(cnf.num_vars))
        throw ParseError(Kind::kLiteralRange, line_no,
                         "literal " + std::string(token) + " outside 1.." +
                             std::to_string(cnf.num_vars));
      if (current.empty()) current_line = line_no;
      current.push_back({static_cast<unsigned>(var), lit < 0});
      if (current.size() > kMaxClauseWidth)
        throw ParseError(Kind::kClauseWidth, current_line,
                         "clause has more than " + std::to_string(kMaxClauseWidth) +
                             " literals; only 3-CNF is supported");
    }
  }

  if (!have_header) throw ParseError(Kind::kHeader, 0, "missing 'p cnf' problem line");
  if (!current.empty())
    throw ParseError(Kind::kSyntax, current_line, "last clause is not terminated by 0");
  if (cnf.clauses.size() != declared_clauses)
    throw ParseError(Kind::kClauseCount, 0,
                     "header declares " + std::to_string(declared_clauses) + " clauses, found " +
                         std::to_string(cnf.clauses.size()));
  return cnf;
}

std::string to_dimacs(const Cnf& cnf) {
  std::ostringstream out;
  out << "p cnf " << cnf.num_vars << ' ' << cnf.clauses.size() << '\n';
  for (const Clause& c : cnf.clauses) {
    for (const Literal& l : c) out << (l.negated ? "-" : "") << l.var << ' ';
    out << "0\n";
  }
  return out.str();
}

}  // namespace sproots
