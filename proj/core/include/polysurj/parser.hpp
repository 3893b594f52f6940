#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polysurj/multipoly.hpp"
#include "polysurj/rational.hpp"

namespace polysurj {

/// Syntax or semantic error with a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

/// Extra variable names mapping to zero-based variable indices.
using VariableAliases = std::map<std::string, std::size_t, std::less<>>;

/// Canonical name of variable `index` in a ring of `nvars` variables:
/// x, y, z, w when nvars <= 4, otherwise x1, x2, ...
std::string variable_name(std::size_t index, std::size_t nvars);

/// Parses a polynomial expression. Grammar:
///
///   expr     := term (('+'|'-') term)*
///   term     := factor ('*' factor)*
///   factor   := ('-'|'+') factor | base ('^' uint)?
///   base     := rational | var | '(' expr ')'
///   rational := uint ('/' uint)?
///   var      := 'x' | 'y' | 'z' | 'w' | 'x' uint
///
/// x, y, z, w name variables 1..4 (when they exist); x<k> names variable k.
/// Parenthesized powers are expanded on the spot.
MultiPoly parse_poly(std::string_view text, std::size_t nvars,
                     const VariableAliases& aliases = {});

/// Canonical graded-lex rendering; parse_poly(render(p), p.nvars()) == p.
std::string render(const MultiPoly& p);

/// Every input to the combined-system criteria.
struct ProblemSpec {
  PolyMap map;
  /// Coefficient matrix g_ij; defaults to the identity.
  PolyMatrix gmatrix;
  /// Positive exponents applied to the components; defaults to all ones.
  std::vector<unsigned> alpha;
  /// Fiber target; defaults to the origin.
  std::vector<Rational> target;
  bool assume_det_nonvanishing = false;

  // Which fields were filled in from defaults.
  bool gmatrix_defaulted = true;
  bool alpha_defaulted = true;
  bool target_defaulted = true;

  std::size_t nvars() const { return map.nvars(); }
};

/// Wraps a map with identity matrix, unit exponents, origin target.
ProblemSpec make_problem(PolyMap map);

/// Throws std::invalid_argument when the invariants (shared nvars,
/// alpha >= 1, square gmatrix of size n, target length n) do not hold.
void validate(const ProblemSpec& spec);

/// Parses the line-oriented `key = value` problem format:
///
///   # comment
///   n = 2
///   p1 = x^3 - x
///   p2 = y
///   g11 = 1          (optional; all n*n entries, g<i>_<j> also accepted)
///   alpha = 1,1      (optional)
///   target = 0,1/2   (optional)
///   assume_det_nonvanishing = false
///
/// Throws ParseError with the offending line and column.
ProblemSpec parse_problem_file(std::string_view text);

/// Writes `spec` in the format read by parse_problem_file. Defaulted fields
/// are omitted.
std::string write_problem_file(const ProblemSpec& spec, std::string_view comment = {});

}  // namespace polysurj
