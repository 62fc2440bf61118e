// SPDX-License-Identifier: Apache-2.0
#include "lang/property.hpp"

#include "lang/parser.hpp"

namespace sfbmc::lang {

namespace {

Sort resolve(Expr* e, const Model& m) {
  switch (e->kind) {
    case ExprKind::IntLit: return Sort::Int;
    case ExprKind::BoolLit: return Sort::Bool;
    case ExprKind::Var: {
      int vi = m.var_by_name(e->name);
      if (vi < 0) throw PropertyError("unknown variable " + e->name);
      e->var_index = vi;
      return m.var(vi).sort;
    }
    case ExprKind::InState: {
      int si = m.state_by_path(e->name);
      if (si < 0) throw PropertyError("unknown state path '" + e->name + "'");
      e->state_index = si;
      return Sort::Bool;
    }
    case ExprKind::Neg:
      if (resolve(e->lhs.get(), m) != Sort::Int)
        throw PropertyError("unary '-' needs an int operand");
      return Sort::Int;
    case ExprKind::Not:
      if (resolve(e->lhs.get(), m) != Sort::Bool)
        throw PropertyError("'!' needs a bool operand");
      return Sort::Bool;
    case ExprKind::Add:
    case ExprKind::Sub:
    case ExprKind::Mul:
      if (resolve(e->lhs.get(), m) != Sort::Int || resolve(e->rhs.get(), m) != Sort::Int)
        throw PropertyError("arithmetic needs int operands");
      return Sort::Int;
    case ExprKind::And:
    case ExprKind::Or:
      if (resolve(e->lhs.get(), m) != Sort::Bool || resolve(e->rhs.get(), m) != Sort::Bool)
        throw PropertyError("'&&'/'||' need bool operands");
      return Sort::Bool;
    case ExprKind::Cmp:
      if (resolve(e->lhs.get(), m) != Sort::Int || resolve(e->rhs.get(), m) != Sort::Int)
        throw PropertyError("comparisons need int operands");
      return Sort::Bool;
  }
  throw PropertyError("malformed property");
}

}  // namespace

InvariantProperty parse_property(const std::string& text, const Model& model) {
  InvariantProperty prop;
  prop.source = text;
  prop.predicate = parse_expression(text);
  if (resolve(prop.predicate.get(), model) != Sort::Bool)
    throw PropertyError("property must be a bool predicate");
  return prop;
}

}  // namespace sfbmc::lang
