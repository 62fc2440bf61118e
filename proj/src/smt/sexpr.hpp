// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <string>
#include <vector>

namespace sfbmc::smt {

// Minimal s-expression reader for solver responses (get-value output).
struct SExpr {
  bool is_atom = false;
  std::string atom;
  std::vector<SExpr> items;
};

// Parses one complete s-expression from text; throws std::runtime_error on
// malformed input. `pos` advances past the parsed expression.
SExpr parse_sexpr(const std::string& text, size_t& pos);

// true when `text` holds at least one complete (balanced) s-expression
bool sexpr_complete(const std::string& text);

}  // namespace sfbmc::smt
