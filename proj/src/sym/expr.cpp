// SPDX-License-Identifier: Apache-2.0
#include "sym/expr.hpp"

#include <sstream>

namespace sfbmc::sym {

using exec::Env;
using exec::Value;
using lang::CmpOp;
using lang::Sort;

namespace {

Ptr node(Expr e) { return std::make_shared<Expr>(std::move(e)); }

bool both_int(const Ptr& a, const Ptr& b) { return a->k == K::IntC && b->k == K::IntC; }
bool both_bool(const Ptr& a, const Ptr& b) { return a->k == K::BoolC && b->k == K::BoolC; }

}  // namespace

Ptr sym_true() {
  static const Ptr t = mk_bool(true);
  return t;
}
Ptr sym_false() {
  static const Ptr f = mk_bool(false);
  return f;
}

Ptr mk_int(long long v) {
  Expr e;
  e.k = K::IntC;
  e.ival = v;
  return node(std::move(e));
}

Ptr mk_bool(bool v) {
  Expr e;
  e.k = K::BoolC;
  e.bval = v;
  return node(std::move(e));
}

Ptr mk_sym(int var) {
  Expr e;
  e.k = K::Sym;
  e.var = var;
  return node(std::move(e));
}

namespace {

Ptr binary(K k, Ptr a, Ptr b) {
  Expr e;
  e.k = k;
  e.a = std::move(a);
  e.b = std::move(b);
  return node(std::move(e));
}

Ptr unary(K k, Ptr a) {
  Expr e;
  e.k = k;
  e.a = std::move(a);
  return node(std::move(e));
}

}  // namespace

Ptr mk_add(Ptr a, Ptr b) {
  if (both_int(a, b)) return mk_int(a->ival + b->ival);
  return binary(K::Add, std::move(a), std::move(b));
}

Ptr mk_sub(Ptr a, Ptr b) {
  if (both_int(a, b)) return mk_int(a->ival - b->ival);
  return binary(K::Sub, std::move(a), std::move(b));
}

Ptr mk_mul(Ptr a, Ptr b) {
  if (both_int(a, b)) return mk_int(a->ival * b->ival);
  return binary(K::Mul, std::move(a), std::move(b));
}

Ptr mk_neg(Ptr a) {
  if (a->k == K::IntC) return mk_int(-a->ival);
  return unary(K::Neg, std::move(a));
}

Ptr mk_not(Ptr a) {
  if (a->k == K::BoolC) return mk_bool(!a->bval);
  return unary(K::Not, std::move(a));
}

Ptr mk_and(Ptr a, Ptr b) {
  if (both_bool(a, b)) return mk_bool(a->bval && b->bval);
  return binary(K::And, std::move(a), std::move(b));
}

Ptr mk_or(Ptr a, Ptr b) {
  if (both_bool(a, b)) return mk_bool(a->bval || b->bval);
  return binary(K::Or, std::move(a), std::move(b));
}

Ptr mk_cmp(CmpOp op, Ptr a, Ptr b) {
  if (both_int(a, b)) {
    long long l = a->ival, r = b->ival;
    bool v = false;
    switch (op) {
      case CmpOp::Eq: v = l == r; break;
      case CmpOp::Ne: v = l != r; break;
      case CmpOp::Lt: v = l < r; break;
      case CmpOp::Le: v = l <= r; break;
      case CmpOp::Gt: v = l > r; break;
      case CmpOp::Ge: v = l >= r; break;
    }
    return mk_bool(v);
  }
  Expr e;
  e.k = K::Cmp;
  e.cmp = op;
  e.a = std::move(a);
  e.b = std::move(b);
  return node(std::move(e));
}

bool is_true(const Ptr& e) { return e->k == K::BoolC && e->bval; }
bool is_false(const Ptr& e) { return e->k == K::BoolC && !e->bval; }

bool equal(const Ptr& a, const Ptr& b) {
  if (a == b) return true;
  if (!a || !b || a->k != b->k) return false;
  switch (a->k) {
    case K::IntC: return a->ival == b->ival;
    case K::BoolC: return a->bval == b->bval;
    case K::Sym: return a->var == b->var;
    case K::Neg:
    case K::Not: return equal(a->a, b->a);
    case K::Cmp:
      if (a->cmp != b->cmp) return false;
      [[fallthrough]];
    default: return equal(a->a, b->a) && equal(a->b, b->b);
  }
}

bool is_linear(const Ptr& e) {
  switch (e->k) {
    case K::IntC:
    case K::BoolC:
    case K::Sym: return true;
    case K::Neg:
    case K::Not: return is_linear(e->a);
    case K::Mul: {
      bool lc = e->a->k == K::IntC;
      bool rc = e->b->k == K::IntC;
      return (lc || rc) && is_linear(e->a) && is_linear(e->b);
    }
    default: return is_linear(e->a) && (e->b == nullptr || is_linear(e->b));
  }
}

SymEnv identity_env(const lang::Model& m) {
  SymEnv d;
  d.reserve(m.var_count());
  for (size_t i = 0; i < m.var_count(); ++i) d.push_back(mk_sym(static_cast<int>(i)));
  return d;
}

Ptr subst(const lang::Expr& e, const SymEnv& delta) {
  using lang::ExprKind;
  switch (e.kind) {
    case ExprKind::IntLit: return mk_int(e.int_val);
    case ExprKind::BoolLit: return mk_bool(e.bool_val);
    case ExprKind::Var: return delta[static_cast<size_t>(e.var_index)];
    case ExprKind::InState: throw std::logic_error("in(...) has no symbolic form");
    case ExprKind::Neg: return mk_neg(subst(*e.lhs, delta));
    case ExprKind::Not: return mk_not(subst(*e.lhs, delta));
    case ExprKind::Add: return mk_add(subst(*e.lhs, delta), subst(*e.rhs, delta));
    case ExprKind::Sub: return mk_sub(subst(*e.lhs, delta), subst(*e.rhs, delta));
    case ExprKind::Mul: return mk_mul(subst(*e.lhs, delta), subst(*e.rhs, delta));
    case ExprKind::And: return mk_and(subst(*e.lhs, delta), subst(*e.rhs, delta));
    case ExprKind::Or: return mk_or(subst(*e.lhs, delta), subst(*e.rhs, delta));
    case ExprKind::Cmp: return mk_cmp(e.cmp, subst(*e.lhs, delta), subst(*e.rhs, delta));
  }
  throw std::logic_error("malformed expression");
}

Value eval(const Ptr& e, const Env& base) {
  switch (e->k) {
    case K::IntC: return {Sort::Int, e->ival};
    case K::BoolC: return {Sort::Bool, e->bval ? 1 : 0};
    case K::Sym: return base[static_cast<size_t>(e->var)];
    case K::Neg: return {Sort::Int, -eval(e->a, base).i};
    case K::Not: return {Sort::Bool, eval(e->a, base).i ? 0 : 1};
    case K::Add: return {Sort::Int, eval(e->a, base).i + eval(e->b, base).i};
    case K::Sub: return {Sort::Int, eval(e->a, base).i - eval(e->b, base).i};
    case K::Mul: return {Sort::Int, eval(e->a, base).i * eval(e->b, base).i};
    case K::And: return {Sort::Bool, (eval(e->a, base).i && eval(e->b, base).i) ? 1 : 0};
    case K::Or: return {Sort::Bool, (eval(e->a, base).i || eval(e->b, base).i) ? 1 : 0};
    case K::Cmp: {
      long long l = eval(e->a, base).i, r = eval(e->b, base).i;
      bool v = false;
      switch (e->cmp) {
        case CmpOp::Eq: v = l == r; break;
        case CmpOp::Ne: v = l != r; break;
        case CmpOp::Lt: v = l < r; break;
        case CmpOp::Le: v = l <= r; break;
        case CmpOp::Gt: v = l > r; break;
        case CmpOp::Ge: v = l >= r; break;
      }
      return {Sort::Bool, v ? 1 : 0};
    }
  }
  throw std::logic_error("malformed symbolic expression");
}

namespace {

int prec(K k) {
  switch (k) {
    case K::Or: return 1;
    case K::And: return 2;
    case K::Cmp: return 3;
    case K::Add:
    case K::Sub: return 4;
    case K::Mul: return 5;
    case K::Not:
    case K::Neg: return 6;
    default: return 7;
  }
}

void print(std::ostream& os, const Ptr& e, const lang::Model& m, int parent) {
  int p = prec(e->k);
  bool paren = p < parent;
  if (paren) os << '(';
  switch (e->k) {
    case K::IntC: os << e->ival; break;
    case K::BoolC: os << (e->bval ? "true" : "false"); break;
    case K::Sym: os << m.var(e->var).name; break;
    case K::Neg:
      os << '-';
      print(os, e->a, m, p + 1);
      break;
    case K::Not:
      os << '!';
      print(os, e->a, m, p + 1);
      break;
    case K::Add:
    case K::Sub:
    case K::Mul: {
      print(os, e->a, m, p);
      os << (e->k == K::Add ? " + " : e->k == K::Sub ? " - " : " * ");
      print(os, e->b, m, p + 1);
      break;
    }
    case K::And:
    case K::Or:
      print(os, e->a, m, p);
      os << (e->k == K::And ? " && " : " || ");
      print(os, e->b, m, p + 1);
      break;
    case K::Cmp:
      print(os, e->a, m, p + 1);
      os << ' ' << lang::cmp_text(e->cmp) << ' ';
      print(os, e->b, m, p + 1);
      break;
  }
  if (paren) os << ')';
}

}  // namespace

std::string to_text(const Ptr& e, const lang::Model& m) {
  std::ostringstream os;
  print(os, e, m, 0);
  return os.str();
}

}  // namespace sfbmc::sym
