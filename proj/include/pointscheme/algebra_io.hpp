#pragma once

#include <string>
#include <string_view>

#include "pointscheme/bimodule.hpp"

namespace pointscheme {

/// Parses the line-oriented algebra description:
///
///     field Q | field <prime>
///     vertices v1 v2 ...
///     arrow <label>: <src> -> <dst>
///     rel <name>: [<coeff>*]a.b.c (+|-) ...
///
/// `#` starts a comment.  A relation whose words run along several paths is
/// split into one generator per path, named `<name>@<v0>-<v1>-...`.
/// Errors carry the 1-based line number.
AlgebraSpec parse_algebra(std::string_view text, std::string name = "algebra");

/// Inverse of parse_algebra up to comments and whitespace.
std::string print_algebra(const AlgebraSpec& a);

}  // namespace pointscheme
