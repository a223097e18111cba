#pragma once

#include <string_view>

#include "redpow/dsl/ast.hpp"

namespace redpow::dsl {

/// Parses and resolves a program. Every name must refer to an earlier
/// declaration of the right kind: NameError for unknown names, TypeError for
/// a declaration of another kind (or a non-polynomial piecewise body, a
/// non-literal divisor, ...). Syntax errors list the tokens that would have
/// been accepted. All of them are thrown as ParseError.
Program parse(std::string_view source);

} // namespace redpow::dsl
