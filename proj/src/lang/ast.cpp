// SPDX-License-Identifier: Apache-2.0
#include "lang/ast.hpp"

#include <sstream>

namespace sfbmc::lang {

const char* sort_name(Sort s) { return s == Sort::Int ? "int" : "bool"; }

const char* cmp_text(CmpOp op) {
  switch (op) {
    case CmpOp::Eq: return "==";
    case CmpOp::Ne: return "!=";
    case CmpOp::Lt: return "<";
    case CmpOp::Le: return "<=";
    case CmpOp::Gt: return ">";
    case CmpOp::Ge: return ">=";
  }
  return "?";
}

ExprPtr mk_int(long long v, SourceLoc loc) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::IntLit;
  e->int_val = v;
  e->loc = loc;
  return e;
}

ExprPtr mk_bool(bool v, SourceLoc loc) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::BoolLit;
  e->bool_val = v;
  e->loc = loc;
  return e;
}

ExprPtr mk_var(std::string name, SourceLoc loc) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Var;
  e->name = std::move(name);
  e->loc = loc;
  return e;
}

ExprPtr mk_in_state(std::string path, SourceLoc loc) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::InState;
  e->name = std::move(path);
  e->loc = loc;
  return e;
}

ExprPtr mk_unary(ExprKind k, ExprPtr sub, SourceLoc loc) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->lhs = std::move(sub);
  e->loc = loc;
  return e;
}

ExprPtr mk_binary(ExprKind k, ExprPtr l, ExprPtr r, SourceLoc loc) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->lhs = std::move(l);
  e->rhs = std::move(r);
  e->loc = loc;
  return e;
}

ExprPtr mk_cmp(CmpOp op, ExprPtr l, ExprPtr r, SourceLoc loc) {
  auto e = mk_binary(ExprKind::Cmp, std::move(l), std::move(r), loc);
  e->cmp = op;
  return e;
}

bool expr_equal(const Expr* a, const Expr* b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case ExprKind::IntLit: return a->int_val == b->int_val;
    case ExprKind::BoolLit: return a->bool_val == b->bool_val;
    case ExprKind::Var:
    case ExprKind::InState: return a->name == b->name;
    case ExprKind::Neg:
    case ExprKind::Not: return expr_equal(a->lhs.get(), b->lhs.get());
    case ExprKind::Cmp:
      if (a->cmp != b->cmp) return false;
      [[fallthrough]];
    default:
      return expr_equal(a->lhs.get(), b->lhs.get()) &&
             expr_equal(a->rhs.get(), b->rhs.get());
  }
}

namespace {

int precedence(ExprKind k) {
  switch (k) {
    case ExprKind::Or: return 1;
    case ExprKind::And: return 2;
    case ExprKind::Cmp: return 3;
    case ExprKind::Add:
    case ExprKind::Sub: return 4;
    case ExprKind::Mul: return 5;
    case ExprKind::Not:
    case ExprKind::Neg: return 6;
    default: return 7;
  }
}

void print_expr(std::ostream& os, const Expr* e, int parent_prec) {
  int prec = precedence(e->kind);
  bool paren = prec < parent_prec;
  if (paren) os << '(';
  switch (e->kind) {
    case ExprKind::IntLit: os << e->int_val; break;
    case ExprKind::BoolLit: os << (e->bool_val ? "true" : "false"); break;
    case ExprKind::Var: os << e->name; break;
    case ExprKind::InState: os << "in(" << e->name << ")"; break;
    case ExprKind::Neg:
      os << "-";
      print_expr(os, e->lhs.get(), prec + 1);
      break;
    case ExprKind::Not:
      os << "!";
      print_expr(os, e->lhs.get(), prec + 1);
      break;
    case ExprKind::Add:
    case ExprKind::Sub:
    case ExprKind::Mul: {
      const char* op = e->kind == ExprKind::Add ? " + " : e->kind == ExprKind::Sub ? " - " : " * ";
      print_expr(os, e->lhs.get(), prec);
      os << op;
      print_expr(os, e->rhs.get(), prec + 1);
      break;
    }
    case ExprKind::And:
    case ExprKind::Or: {
      print_expr(os, e->lhs.get(), prec);
      os << (e->kind == ExprKind::And ? " && " : " || ");
      print_expr(os, e->rhs.get(), prec + 1);
      break;
    }
    case ExprKind::Cmp:
      print_expr(os, e->lhs.get(), prec + 1);
      os << ' ' << cmp_text(e->cmp) << ' ';
      print_expr(os, e->rhs.get(), prec + 1);
      break;
  }
  if (paren) os << ')';
}

bool actions_equal(const ActionSeq& a, const ActionSeq& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].var != b[i].var || !expr_equal(a[i].rhs.get(), b[i].rhs.get())) return false;
  }
  return true;
}

bool transitions_equal(const TransitionList& a, const TransitionList& b);

bool transition_equal(const Transition& a, const Transition& b) {
  if (a.event != b.event) return false;
  if ((a.cond == nullptr) != (b.cond == nullptr)) return false;
  if (a.cond && !expr_equal(a.cond.get(), b.cond.get())) return false;
  if (!actions_equal(a.cond_action, b.cond_action)) return false;
  if (a.dest.text != b.dest.text) return false;
  return actions_equal(a.trans_action, b.trans_action);
}

bool transitions_equal(const TransitionList& a, const TransitionList& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!transition_equal(a[i], b[i])) return false;
  return true;
}

bool component_equal(const Component* a, const Component* b);

bool statedef_equal(const StateDef& a, const StateDef& b) {
  if (a.name != b.name) return false;
  if (!actions_equal(a.entry, b.entry) || !actions_equal(a.during, b.during) ||
      !actions_equal(a.exit, b.exit))
    return false;
  if (!transitions_equal(a.inner, b.inner) || !transitions_equal(a.outer, b.outer)) return false;
  if (a.junctions.size() != b.junctions.size()) return false;
  for (size_t i = 0; i < a.junctions.size(); ++i) {
    if (a.junctions[i].id != b.junctions[i].id ||
        !transitions_equal(a.junctions[i].list, b.junctions[i].list))
      return false;
  }
  if ((a.child == nullptr) != (b.child == nullptr)) return false;
  if (a.child && !component_equal(a.child.get(), b.child.get())) return false;
  return true;
}

bool component_equal(const Component* a, const Component* b) {
  if (a->kind != b->kind || a->label != b->label) return false;
  if (a->states.size() != b->states.size()) return false;
  for (size_t i = 0; i < a->states.size(); ++i)
    if (!statedef_equal(*a->states[i], *b->states[i])) return false;
  return transitions_equal(a->defaults, b->defaults);
}

}  // namespace

std::string expr_text(const Expr* e) {
  std::ostringstream os;
  print_expr(os, e, 0);
  return os.str();
}

bool program_equal(const Program& a, const Program& b) {
  if (a.name != b.name || a.events != b.events) return false;
  if (a.vars.size() != b.vars.size()) return false;
  for (size_t i = 0; i < a.vars.size(); ++i) {
    const auto& x = a.vars[i];
    const auto& y = b.vars[i];
    if (x.name != y.name || x.sort != y.sort || x.init_int != y.init_int ||
        x.init_bool != y.init_bool)
      return false;
  }
  return component_equal(a.root.get(), b.root.get());
}

}  // namespace sfbmc::lang
