#pragma once

// CNF formulas, DIMACS input, and padding with constrained dummy pairs.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sproots/errors.hpp"

namespace sproots {

struct Literal {
  unsigned var;  // 1-based
  bool negated;

  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::vector<Literal>;

inline constexpr std::size_t kMaxClauseWidth = 3;

struct Cnf {
  unsigned num_vars = 0;
  std::vector<Clause> clauses;

  /// Throws DomainError unless num_vars >= 1, every literal is in range and
  /// every clause has 1..3 literals.
  void validate() const;

  friend bool operator==(const Cnf&, const Cnf&) = default;
};

/// Does the assignment (bit v-1 = value of variable v) satisfy the clause?
bool satisfies(const Clause& clause, std::uint64_t assignment);
bool satisfies(const Cnf& cnf, std::uint64_t assignment);

/// Two dummy variables constrained to be both true.
struct DummyPair {
  unsigned first;
  unsigned second;
};

/// base plus s dummy pairs y_{2k-1}, y_{2k} (variables v+2k-1, v+2k for
/// k = 1..s), each constrained by y_{2k-1} AND y_{2k}.
struct PaddedCnf {
  Cnf base;
  unsigned s = 0;

  unsigned total_vars() const { return base.num_vars + 2 * s; }
  std::size_t constraint_count() const { return base.clauses.size() + s; }
  /// 0-based pair index k < s.
  DummyPair dummy_pair(unsigned k) const;
  bool satisfies(std::uint64_t assignment) const;
};

/// s = max(0, m - v).
PaddedCnf pad(const Cnf& cnf);

class ParseError : public Error {
 public:
  enum class Kind { kHeader, kSyntax, kLiteralRange, kClauseWidth, kClauseCount };

  ParseError(Kind kind, std::size_t line, const std::string& message);

  Kind kind() const { return kind_; }
  /// 1-based line of the offending token; 0 when the error concerns the whole input.
  std::size_t line() const { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

/// Reads a DIMACS CNF: optional "c" comment lines, one "p cnf V C" header,
/// then C zero-terminated clauses that may span lines. A "%" line ends the
/// input (SATLIB convention).
Cnf parse_dimacs(std::string_view text);

std::string to_dimacs(const Cnf& cnf);

}  // namespace sproots
