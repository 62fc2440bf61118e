// SPDX-License-Identifier: Apache-2.0
#include "lang/parser.hpp"

#include "lang/lexer.hpp"

namespace sfbmc::lang {

namespace {

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  ProgramPtr program() {
    auto p = std::make_shared<Program>();
    expect(Tok::KwProgram, "expected 'program'");
    p->name = expect(Tok::Ident, "expected program name").text;
    expect(Tok::Semi, "expected ';'");
    if (accept(Tok::KwEvents)) {
      p->events.push_back(expect(Tok::Ident, "expected event name").text);
      while (accept(Tok::Comma))
        p->events.push_back(expect(Tok::Ident, "expected event name").text);
      expect(Tok::Semi, "expected ';'");
    }
    while (at(Tok::KwVar)) p->vars.push_back(var_decl());
    p->root = composition();
    expect(Tok::Eof, "expected end of input");
    return p;
  }

  ExprPtr bare_expression() {
    auto e = or_expr();
    expect(Tok::Eof, "expected end of expression");
    return e;
  }

 private:
  VarDecl var_decl() {
    VarDecl d;
    d.loc = peek().loc;
    expect(Tok::KwVar, "expected 'var'");
    d.name = expect(Tok::Ident, "expected variable name").text;
    expect(Tok::Colon, "expected ':'");
    if (accept(Tok::KwInt)) {
      d.sort = Sort::Int;
    } else if (accept(Tok::KwBool)) {
      d.sort = Sort::Bool;
    } else {
      throw ParseError("unknown sort (expected 'int' or 'bool')", peek().loc);
    }
    if (accept(Tok::Eq)) {
      if (d.sort == Sort::Int) {
        bool neg = accept(Tok::Minus);
        long long v = expect(Tok::Int, "expected integer initial value").int_val;
        d.init_int = neg ? -v : v;
      } else {
        if (accept(Tok::KwTrue)) d.init_bool = true;
        else if (accept(Tok::KwFalse)) d.init_bool = false;
        else throw ParseError("expected 'true' or 'false'", peek().loc);
      }
    }
    expect(Tok::Semi, "expected ';'");
    return d;
  }

  ComponentPtr composition() {
    auto c = std::make_unique<Component>();
    c->loc = peek().loc;
    if (accept(Tok::KwOr)) {
      c->kind = CompKind::Or;
      if (at(Tok::Ident)) c->label = next().text;
      expect(Tok::LBrace, "expected '{'");
      bool saw_defaults = false;
      while (!at(Tok::RBrace)) {
        if (at(Tok::KwState)) {
          c->states.push_back(state_def());
        } else if (at(Tok::KwTransitions)) {
          if (saw_defaults)
            throw ParseError("duplicate 'transitions' block in or-composition", peek().loc);
          saw_defaults = true;
          next();
          expect(Tok::LBrace, "expected '{'");
          while (!at(Tok::RBrace)) c->defaults.push_back(transition());
          expect(Tok::RBrace, "expected '}'");
        } else {
          throw ParseError("expected 'state' or 'transitions'", peek().loc);
        }
      }
      expect(Tok::RBrace, "expected '}'");
    } else if (accept(Tok::KwAnd)) {
      c->kind = CompKind::And;
      expect(Tok::LBrace, "expected '{'");
      while (!at(Tok::RBrace)) {
        if (!at(Tok::KwState)) throw ParseError("expected 'state'", peek().loc);
        c->states.push_back(state_def());
      }
      expect(Tok::RBrace, "expected '}'");
    } else {
      throw ParseError("expected 'or' or 'and' composition", peek().loc);
    }
    return c;
  }

  StateDefPtr state_def() {
    auto sd = std::make_unique<StateDef>();
    sd->loc = peek().loc;
    expect(Tok::KwState, "expected 'state'");
    sd->name = expect(Tok::Ident, "expected state name").text;
    expect(Tok::LBrace, "expected '{'");
    bool saw_entry = false, saw_during = false, saw_exit = false;
    bool saw_inner = false, saw_outer = false, saw_junctions = false;
    while (!at(Tok::RBrace)) {
      if (at(Tok::KwEntry) || at(Tok::KwDuring) || at(Tok::KwExit)) {
        Tok k = next().kind;
        expect(Tok::Colon, "expected ':'");
        bool* seen = k == Tok::KwEntry ? &saw_entry : k == Tok::KwDuring ? &saw_during : &saw_exit;
        if (*seen) throw ParseError("duplicate action clause", peek().loc);
        *seen = true;
        ActionSeq seq = action_clause();
        if (k == Tok::KwEntry) sd->entry = std::move(seq);
        else if (k == Tok::KwDuring) sd->during = std::move(seq);
        else sd->exit = std::move(seq);
      } else if (at(Tok::KwInner) || at(Tok::KwOuter)) {
        bool inner = next().kind == Tok::KwInner;
        bool* seen = inner ? &saw_inner : &saw_outer;
        if (*seen) throw ParseError("duplicate transition block", peek().loc);
        *seen = true;
        expect(Tok::LBrace, "expected '{'");
        TransitionList list;
        while (!at(Tok::RBrace)) list.push_back(transition());
        expect(Tok::RBrace, "expected '}'");
        (inner ? sd->inner : sd->outer) = std::move(list);
      } else if (at(Tok::KwJunctions)) {
        if (saw_junctions) throw ParseError("duplicate 'junctions' block", peek().loc);
        saw_junctions = true;
        next();
        expect(Tok::LBrace, "expected '{'");
        while (!at(Tok::RBrace)) {
          JunctionDef j;
          j.loc = peek().loc;
          j.id = expect(Tok::Ident, "expected junction id").text;
          expect(Tok::Colon, "expected ':'");
          if (accept(Tok::Semi)) {
            // terminal junction: empty list
          } else {
            while (!at(Tok::RBrace) && !(at(Tok::Ident) && at(Tok::Colon, 1)))
              j.list.push_back(transition());
          }
          sd->junctions.push_back(std::move(j));
        }
        expect(Tok::RBrace, "expected '}'");
      } else if (at(Tok::KwOr) || at(Tok::KwAnd)) {
        if (sd->child) throw ParseError("duplicate child composition", peek().loc);
        sd->child = composition();
      } else {
        throw ParseError("unexpected token in state body", peek().loc);
      }
    }
    expect(Tok::RBrace, "expected '}'");
    return sd;
  }

  // `entry: a; b;` -- assignments separated / terminated by ';'; `entry: ;` is empty.
  ActionSeq action_clause() {
    ActionSeq seq;
    if (accept(Tok::Semi)) return seq;
    for (;;) {
      Assign a = action();
      if (!a.var.empty()) seq.push_back(std::move(a));
      expect(Tok::Semi, "expected ';'");
      bool more = at(Tok::KwSkip) || (at(Tok::Ident) && at(Tok::Assign, 1));
      if (!more) break;
    }
    return seq;
  }

  Assign action() {
    if (accept(Tok::KwSkip)) {
      // `skip` contributes nothing; modelled as an assignment-free marker
      Assign a;
      a.var.clear();
      return a;
    }
    Assign a;
    a.loc = peek().loc;
    a.var = expect(Tok::Ident, "expected variable in assignment").text;
    expect(Tok::Assign, "expected ':='");
    a.rhs = or_expr();
    return a;
  }

  ActionSeq braced_actions() {
    ActionSeq seq;
    expect(Tok::LBrace, "expected '{'");
    while (!at(Tok::RBrace)) {
      seq.push_back(action());
      if (!accept(Tok::Semi)) break;
    }
    expect(Tok::RBrace, "expected '}'");
    // drop `skip` markers
    ActionSeq real;
    for (auto& a : seq)
      if (!a.var.empty()) real.push_back(std::move(a));
    return real;
  }

  Transition transition() {
    Transition t;
    t.loc = peek().loc;
    if (accept(Tok::KwOn)) t.event = expect(Tok::Ident, "expected event name").text;
    if (accept(Tok::LBracket)) {
      t.cond = or_expr();
      expect(Tok::RBracket, "expected ']'");
    }
    if (at(Tok::Slash)) {
      next();
      t.cond_action = braced_actions();
    }
    expect(Tok::Arrow, "expected '->'");
    t.dest = destination();
    if (at(Tok::Slash)) {
      next();
      t.trans_action = braced_actions();
    }
    expect(Tok::Semi, "expected ';'");
    return t;
  }

  Destination destination() {
    Destination d;
    d.loc = peek().loc;
    if (accept(Tok::KwEnd)) {
      d.kind = DestKind::End;
      return d;
    }
    d.text = expect(Tok::Ident, "expected destination").text;
    while (accept(Tok::Dot)) {
      d.text += '.';
      d.text += expect(Tok::Ident, "expected path segment").text;
    }
    d.kind = DestKind::StatePath;  // refined during validation
    return d;
  }

  // Expressions: || < && < ! < comparisons < +,- < * < unary- < primary.
  ExprPtr or_expr() {
    auto e = and_expr();
    while (at(Tok::OrOr)) {
      SourceLoc l = next().loc;
      e = mk_binary(ExprKind::Or, std::move(e), and_expr(), l);
    }
    return e;
  }

  ExprPtr and_expr() {
    auto e = not_expr();
    while (at(Tok::AndAnd)) {
      SourceLoc l = next().loc;
      e = mk_binary(ExprKind::And, std::move(e), not_expr(), l);
    }
    return e;
  }

  ExprPtr not_expr() {
    if (at(Tok::Bang)) {
      SourceLoc l = next().loc;
      return mk_unary(ExprKind::Not, not_expr(), l);
    }
    return rel_expr();
  }

  ExprPtr rel_expr() {
    auto e = add_expr();
    CmpOp op;
    if (at(Tok::EqEq)) op = CmpOp::Eq;
    else if (at(Tok::NotEq)) op = CmpOp::Ne;
    else if (at(Tok::Lt)) op = CmpOp::Lt;
    else if (at(Tok::Le)) op = CmpOp::Le;
    else if (at(Tok::Gt)) op = CmpOp::Gt;
    else if (at(Tok::Ge)) op = CmpOp::Ge;
    else return e;
    SourceLoc l = next().loc;
    return mk_cmp(op, std::move(e), add_expr(), l);
  }

  ExprPtr add_expr() {
    auto e = mul_expr();
    while (at(Tok::Plus) || at(Tok::Minus)) {
      bool plus = at(Tok::Plus);
      SourceLoc l = next().loc;
      e = mk_binary(plus ? ExprKind::Add : ExprKind::Sub, std::move(e), mul_expr(), l);
    }
    return e;
  }

  ExprPtr mul_expr() {
    auto e = unary_expr();
    while (at(Tok::Star)) {
      SourceLoc l = next().loc;
      e = mk_binary(ExprKind::Mul, std::move(e), unary_expr(), l);
    }
    return e;
  }

  ExprPtr unary_expr() {
    if (at(Tok::Minus)) {
      SourceLoc l = next().loc;
      return mk_unary(ExprKind::Neg, unary_expr(), l);
    }
    return primary();
  }

  ExprPtr primary() {
    SourceLoc l = peek().loc;
    if (at(Tok::Int)) return mk_int(next().int_val, l);
    if (accept(Tok::KwTrue)) return mk_bool(true, l);
    if (accept(Tok::KwFalse)) return mk_bool(false, l);
    if (accept(Tok::KwIn)) {
      expect(Tok::LParen, "expected '('");
      std::string path = expect(Tok::Ident, "expected state path").text;
      while (accept(Tok::Dot)) {
        path += '.';
        path += expect(Tok::Ident, "expected path segment").text;
      }
      expect(Tok::RParen, "expected ')'");
      return mk_in_state(std::move(path), l);
    }
    if (at(Tok::Ident)) return mk_var(next().text, l);
    if (accept(Tok::LParen)) {
      auto e = or_expr();
      expect(Tok::RParen, "expected ')'");
      return e;
    }
    throw ParseError("expected expression", l);
  }

  const Token& peek(size_t off = 0) const {
    size_t i = pos_ + off;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  bool at(Tok k, size_t off = 0) const { return peek(off).kind == k; }
  const Token& next() { return toks_[pos_++]; }
  bool accept(Tok k) {
    if (at(k)) {
      ++pos_;
      return true;
    }
    return false;
  }
  Token expect(Tok k, const std::string& msg) {
    if (!at(k)) throw ParseError(msg + " (got " + std::string(tok_name(peek().kind)) + ")", peek().loc);
    return toks_[pos_++];
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
};

}  // namespace

ProgramPtr parse_model(const std::string& text) {
  Parser p(lex(text));
  return p.program();
}

ExprPtr parse_expression(const std::string& text) {
  Parser p(lex(text));
  return p.bare_expression();
}

}  // namespace sfbmc::lang
