// SPDX-License-Identifier: Apache-2.0
#include "lang/lexer.hpp"

#include <cctype>
#include <unordered_map>

namespace sfbmc::lang {

namespace {

const std::unordered_map<std::string, Tok>& keywords() {
  static const std::unordered_map<std::string, Tok> kw = {
      {"program", Tok::KwProgram}, {"events", Tok::KwEvents},
      {"var", Tok::KwVar},         {"int", Tok::KwInt},
      {"bool", Tok::KwBool},       {"or", Tok::KwOr},
      {"and", Tok::KwAnd},         {"state", Tok::KwState},
      {"entry", Tok::KwEntry},     {"during", Tok::KwDuring},
      {"exit", Tok::KwExit},       {"inner", Tok::KwInner},
      {"outer", Tok::KwOuter},     {"junctions", Tok::KwJunctions},
      {"transitions", Tok::KwTransitions},
      {"on", Tok::KwOn},           {"end", Tok::KwEnd},
      {"skip", Tok::KwSkip},       {"true", Tok::KwTrue},
      {"false", Tok::KwFalse},     {"in", Tok::KwIn},
  };
  return kw;
}

}  // namespace

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  size_t i = 0;
  int line = 1, col = 1;
  auto loc = [&]() { return SourceLoc{line, col}; };
  auto advance = [&](size_t n = 1) {
    for (size_t k = 0; k < n && i < src.size(); ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  auto peek = [&](size_t off = 0) -> char {
    return i + off < src.size() ? src[i + off] : '\0';
  };
  auto push = [&](Tok k, SourceLoc l, std::string text = {}) {
    out.push_back(Token{k, std::move(text), 0, l});
  };

  while (i < src.size()) {
    char c = peek();
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance();
      continue;
    }
    if (c == '/' && peek(1) == '/') {
      while (i < src.size() && peek() != '\n') advance();
      continue;
    }
    if (c == '/' && peek(1) == '*') {
      SourceLoc start = loc();
      advance(2);
      while (i < src.size() && !(peek() == '*' && peek(1) == '/')) advance();
      if (i >= src.size()) throw ParseError("unterminated block comment", start);
      advance(2);
      continue;
    }
    SourceLoc l = loc();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string word;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
        word += peek();
        advance();
      }
      auto it = keywords().find(word);
      if (it != keywords().end()) {
        push(it->second, l, word);
      } else {
        push(Tok::Ident, l, word);
      }
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        num += peek();
        advance();
      }
      Token t{Tok::Int, num, 0, l};
      try {
        t.int_val = std::stoll(num);
      } catch (const std::out_of_range&) {
        throw ParseError("integer literal out of range", l);
      }
      out.push_back(t);
      continue;
    }
    switch (c) {
      case '{': push(Tok::LBrace, l); advance(); break;
      case '}': push(Tok::RBrace, l); advance(); break;
      case '[': push(Tok::LBracket, l); advance(); break;
      case ']': push(Tok::RBracket, l); advance(); break;
      case '(': push(Tok::LParen, l); advance(); break;
      case ')': push(Tok::RParen, l); advance(); break;
      case ';': push(Tok::Semi, l); advance(); break;
      case ',': push(Tok::Comma, l); advance(); break;
      case '.': push(Tok::Dot, l); advance(); break;
      case '+': push(Tok::Plus, l); advance(); break;
      case '*': push(Tok::Star, l); advance(); break;
      case '/': push(Tok::Slash, l); advance(); break;
      case '-':
        if (peek(1) == '>') { push(Tok::Arrow, l); advance(2); }
        else { push(Tok::Minus, l); advance(); }
        break;
      case ':':
        if (peek(1) == '=') { push(Tok::Assign, l); advance(2); }
        else { push(Tok::Colon, l); advance(); }
        break;
      case '&':
        if (peek(1) == '&') { push(Tok::AndAnd, l); advance(2); }
        else throw ParseError("stray '&'", l);
        break;
      case '|':
        if (peek(1) == '|') { push(Tok::OrOr, l); advance(2); }
        else throw ParseError("stray '|'", l);
        break;
      case '!':
        if (peek(1) == '=') { push(Tok::NotEq, l); advance(2); }
        else { push(Tok::Bang, l); advance(); }
        break;
      case '=':
        if (peek(1) == '=') { push(Tok::EqEq, l); advance(2); }
        else { push(Tok::Eq, l); advance(); }
        break;
      case '<':
        if (peek(1) == '=') { push(Tok::Le, l); advance(2); }
        else { push(Tok::Lt, l); advance(); }
        break;
      case '>':
        if (peek(1) == '=') { push(Tok::Ge, l); advance(2); }
        else { push(Tok::Gt, l); advance(); }
        break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", l);
    }
  }
  out.push_back(Token{Tok::Eof, "", 0, loc()});
  return out;
}

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Int: return "integer";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Semi: return "';'";
    case Tok::Colon: return "':'";
    case Tok::Comma: return "','";
    case Tok::Dot: return "'.'";
    case Tok::Arrow: return "'->'";
    case Tok::Slash: return "'/'";
    case Tok::Assign: return "':='";
    case Tok::Eq: return "'='";
    case Tok::Eof: return "end of input";
    default: return "token";
  }
}

}  // namespace sfbmc::lang
