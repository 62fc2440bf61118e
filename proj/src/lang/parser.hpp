// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "lang/ast.hpp"
#include "lang/lexer.hpp"  // ParseError

namespace sfbmc::lang {

// Parses a .sfi model source. Throws ParseError with line/column on bad input.
ProgramPtr parse_model(const std::string& text);

// Parses a bare expression (used for properties and tests). Throws ParseError.
ExprPtr parse_expression(const std::string& text);

}  // namespace sfbmc::lang
