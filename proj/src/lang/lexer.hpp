// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "lang/ast.hpp"

namespace sfbmc::lang {

struct ParseError : std::runtime_error {
  SourceLoc loc;
  ParseError(const std::string& msg, SourceLoc l)
      : std::runtime_error(msg + " at line " + std::to_string(l.line) + ", col " +
                           std::to_string(l.col)),
        loc(l) {}
};

enum class Tok {
  Ident,
  Int,
  // keywords
  KwProgram, KwEvents, KwVar, KwInt, KwBool, KwOr, KwAnd, KwState,
  KwEntry, KwDuring, KwExit, KwInner, KwOuter, KwJunctions, KwTransitions,
  KwOn, KwEnd, KwSkip, KwTrue, KwFalse, KwIn,
  // punctuation / operators
  LBrace, RBrace, LBracket, RBracket, LParen, RParen,
  Semi, Colon, Comma, Dot, Arrow, Slash, Assign,
  Plus, Minus, Star,
  AndAnd, OrOr, Bang,
  EqEq, NotEq, Lt, Le, Gt, Ge,
  Eq,  // '=' in var initializers
  Eof,
};

struct Token {
  Tok kind;
  std::string text;
  long long int_val = 0;
  SourceLoc loc;
};

// Tokenizes a whole source buffer. Line comments start with //, block
// comments /* ... */ do not nest.
std::vector<Token> lex(const std::string& src);

const char* tok_name(Tok t);

}  // namespace sfbmc::lang
