// SPDX-License-Identifier: Apache-2.0
#include "smt/sexpr.hpp"

#include <cctype>
#include <stdexcept>

namespace sfbmc::smt {

namespace {

void skip_ws(const std::string& s, size_t& i) {
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
    } else if (s[i] == ';') {
      while (i < s.size() && s[i] != '\n') ++i;
    } else {
      break;
    }
  }
}

}  // namespace

SExpr parse_sexpr(const std::string& text, size_t& pos) {
  skip_ws(text, pos);
  if (pos >= text.size()) throw std::runtime_error("empty s-expression");
  if (text[pos] == '(') {
    ++pos;
    SExpr list;
    for (;;) {
      skip_ws(text, pos);
      if (pos >= text.size()) throw std::runtime_error("unbalanced s-expression");
      if (text[pos] == ')') {
        ++pos;
        return list;
      }
      list.items.push_back(parse_sexpr(text, pos));
    }
  }
  if (text[pos] == '"') {
    size_t start = ++pos;
    while (pos < text.size() && text[pos] != '"') ++pos;
    if (pos >= text.size()) throw std::runtime_error("unterminated string");
    SExpr a;
    a.is_atom = true;
    a.atom = text.substr(start, pos - start);
    ++pos;
    return a;
  }
  if (text[pos] == '|') {
    size_t start = ++pos;
    while (pos < text.size() && text[pos] != '|') ++pos;
    if (pos >= text.size()) throw std::runtime_error("unterminated quoted symbol");
    SExpr a;
    a.is_atom = true;
    a.atom = text.substr(start, pos - start);
    ++pos;
    return a;
  }
  size_t start = pos;
  while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
         text[pos] != '(' && text[pos] != ')')
    ++pos;
  if (pos == start) throw std::runtime_error("malformed s-expression");
  SExpr a;
  a.is_atom = true;
  a.atom = text.substr(start, pos - start);
  return a;
}

bool sexpr_complete(const std::string& text) {
  int depth = 0;
  bool seen = false;
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == ';') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (c == '"' || c == '|') {
      char q = c;
      ++i;
      while (i < text.size() && text[i] != q) ++i;
      seen = true;
      continue;
    }
    if (c == '(') {
      ++depth;
      seen = true;
    } else if (c == ')') {
      --depth;
      if (depth == 0) return true;
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      seen = true;
    }
  }
  return seen && depth == 0;
}

}  // namespace sfbmc::smt
