#pragma once

#include "cyclex/algebra/algebra.hpp"

#include <string>
#include <string_view>

namespace cyclex {

/// Parses the line-oriented algebra DSL:
///
///   # comment
///   algebra <name> dim <d>
///   basis <l1> ... <ld>
///   mul <i> <j> = <c>*<k> [+ <c>*<k> ...]     (1-based; omitted products are 0)
///   unit = <c>*<k> [+ ...]
///   augmentation = <k>                          (the functional dual to e_k)
///
/// or a single `preset <expression>` line, where the expression is either a
/// preset call (`truncated_poly(3)`) or a name followed by integer parameters
/// (`truncated_poly 3`). Coefficients are integers or p/q; a bare index means
/// coefficient 1 and a bare 0 is the zero vector.
///
/// Throws ParseError with 1-based line and column, AssociativityError or UnitError.
AlgebraPtr parse_algebra(std::string_view text);

/// Reads and parses a file; ParseError messages are prefixed with the path.
AlgebraPtr parse_algebra_file(const std::string& path);

} // namespace cyclex
