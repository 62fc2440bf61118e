// SPDX-License-Identifier: Apache-2.0
#include "smt/encode.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace sfbmc::smt {

using lang::Sort;
using sts::ProgramTransition;

std::string data_name(const std::string& var, int step) {
  return var + "__" + std::to_string(step);
}
std::string temp_name(const std::string& var, int step, int sub) {
  return var + "__" + std::to_string(step) + "_" + std::to_string(sub);
}
std::string ctrl_name(const std::string& path, int step) {
  return "st." + path + "__" + std::to_string(step);
}
std::string event_name(const std::string& ev, int step) {
  return "ev." + ev + "__" + std::to_string(step);
}
std::string activation_name(int step) { return "act." + std::to_string(step); }

namespace {

void render_sym(std::ostream& os, const sym::Ptr& e, const std::vector<std::string>& names) {
  using sym::K;
  switch (e->k) {
    case K::IntC:
      if (e->ival < 0) os << "(- " << -e->ival << ')';
      else os << e->ival;
      return;
    case K::BoolC: os << (e->bval ? "true" : "false"); return;
    case K::Sym: os << names[static_cast<size_t>(e->var)]; return;
    case K::Neg:
      os << "(- ";
      render_sym(os, e->a, names);
      os << ')';
      return;
    case K::Not:
      os << "(not ";
      render_sym(os, e->a, names);
      os << ')';
      return;
    case K::Add:
    case K::Sub:
    case K::Mul: {
      os << '(' << (e->k == K::Add ? "+" : e->k == K::Sub ? "-" : "*") << ' ';
      render_sym(os, e->a, names);
      os << ' ';
      render_sym(os, e->b, names);
      os << ')';
      return;
    }
    case K::And:
    case K::Or: {
      os << '(' << (e->k == K::And ? "and" : "or") << ' ';
      render_sym(os, e->a, names);
      os << ' ';
      render_sym(os, e->b, names);
      os << ')';
      return;
    }
    case K::Cmp: {
      const char* op = nullptr;
      bool negate = false;
      switch (e->cmp) {
        case lang::CmpOp::Eq: op = "="; break;
        case lang::CmpOp::Ne: op = "="; negate = true; break;
        case lang::CmpOp::Lt: op = "<"; break;
        case lang::CmpOp::Le: op = "<="; break;
        case lang::CmpOp::Gt: op = ">"; break;
        case lang::CmpOp::Ge: op = ">="; break;
      }
      if (negate) os << "(not ";
      os << '(' << op << ' ';
      render_sym(os, e->a, names);
      os << ' ';
      render_sym(os, e->b, names);
      os << ')';
      if (negate) os << ')';
      return;
    }
  }
}

const char* sort_text(Sort s) { return s == Sort::Int ? "Int" : "Bool"; }

}  // namespace

std::string render_sym_term(const sym::Ptr& e, const lang::Model& m, int step) {
  std::vector<std::string> names;
  names.reserve(m.var_count());
  for (size_t v = 0; v < m.var_count(); ++v)
    names.push_back(data_name(m.var(static_cast<int>(v)).name, step));
  std::ostringstream os;
  render_sym(os, e, names);
  return os.str();
}

BmcEncoder::BmcEncoder(const sts::Sts& sts, const lang::InvariantProperty& prop)
    : sts_(sts), m_(sts.m()), prop_(prop), init_(sts::resolve_init(sts)) {
  bool linear = true;
  for (const auto& t : sts_.transitions) {
    if (t.event >= 0) step_transitions_.push_back(t.index);
    for (const auto& g : t.guard) linear = linear && sym::is_linear(g);
    for (const auto& u : t.update) linear = linear && sym::is_linear(u);
  }
  logic_ = linear ? "QF_LIA" : "QF_NIA";
}

std::string BmcEncoder::render_guard(const sym::Ptr& e, int step) const {
  std::vector<std::string> names;
  names.reserve(m_.var_count());
  for (size_t v = 0; v < m_.var_count(); ++v)
    names.push_back(data_name(m_.var(static_cast<int>(v)).name, step));
  std::ostringstream os;
  render_sym(os, e, names);
  return os.str();
}

std::string BmcEncoder::render_lang(const lang::Expr& e,
                                    const std::vector<std::string>& names) const {
  using lang::ExprKind;
  std::ostringstream os;
  switch (e.kind) {
    case ExprKind::IntLit:
      if (e.int_val < 0) os << "(- " << -e.int_val << ')';
      else os << e.int_val;
      break;
    case ExprKind::BoolLit: os << (e.bool_val ? "true" : "false"); break;
    case ExprKind::Var: os << names[static_cast<size_t>(e.var_index)]; break;
    case ExprKind::InState: throw std::logic_error("in(...) inside an action");
    case ExprKind::Neg: os << "(- " << render_lang(*e.lhs, names) << ')'; break;
    case ExprKind::Not: os << "(not " << render_lang(*e.lhs, names) << ')'; break;
    case ExprKind::Add:
      os << "(+ " << render_lang(*e.lhs, names) << ' ' << render_lang(*e.rhs, names) << ')';
      break;
    case ExprKind::Sub:
      os << "(- " << render_lang(*e.lhs, names) << ' ' << render_lang(*e.rhs, names) << ')';
      break;
    case ExprKind::Mul:
      os << "(* " << render_lang(*e.lhs, names) << ' ' << render_lang(*e.rhs, names) << ')';
      break;
    case ExprKind::And:
      os << "(and " << render_lang(*e.lhs, names) << ' ' << render_lang(*e.rhs, names) << ')';
      break;
    case ExprKind::Or:
      os << "(or " << render_lang(*e.lhs, names) << ' ' << render_lang(*e.rhs, names) << ')';
      break;
    case ExprKind::Cmp: {
      std::string l = render_lang(*e.lhs, names), r = render_lang(*e.rhs, names);
      switch (e.cmp) {
        case lang::CmpOp::Eq: os << "(= " << l << ' ' << r << ')'; break;
        case lang::CmpOp::Ne: os << "(not (= " << l << ' ' << r << "))"; break;
        case lang::CmpOp::Lt: os << "(< " << l << ' ' << r << ')'; break;
        case lang::CmpOp::Le: os << "(<= " << l << ' ' << r << ')'; break;
        case lang::CmpOp::Gt: os << "(> " << l << ' ' << r << ')'; break;
        case lang::CmpOp::Ge: os << "(>= " << l << ' ' << r << ')'; break;
      }
      break;
    }
  }
  return os.str();
}

std::string BmcEncoder::preamble() const {
  std::ostringstream os;
  os << "(set-logic " << logic_ << ")\n";
  os << "; step 0: post-initialization configuration\n";
  for (size_t v = 0; v < m_.var_count(); ++v) {
    const auto& d = m_.var(static_cast<int>(v));
    os << "(declare-const " << data_name(d.name, 0) << ' ' << sort_text(d.sort) << ")\n";
  }
  for (const auto& st : m_.states)
    os << "(declare-const " << ctrl_name(st.path, 0) << " Bool)\n";
  for (size_t v = 0; v < m_.var_count(); ++v) {
    const auto& d = m_.var(static_cast<int>(v));
    const auto& val = init_.env[v];
    os << "(assert (= " << data_name(d.name, 0) << ' ';
    if (d.sort == Sort::Bool) os << (val.i ? "true" : "false");
    else if (val.i < 0) os << "(- " << -val.i << ')';
    else os << val.i;
    os << "))\n";
  }
  const auto& active = sts_.cps[static_cast<size_t>(init_.cp)].active;
  for (size_t si = 0; si < m_.states.size(); ++si) {
    bool on = std::binary_search(active.begin(), active.end(), static_cast<int>(si));
    os << "(assert " << (on ? "" : "(not ") << ctrl_name(m_.states[si].path, 0)
       << (on ? "" : ")") << ")\n";
  }
  return os.str();
}

void BmcEncoder::transition_clause(std::string& out, const ProgramTransition& t, int src_step,
                                   int& temp_counter, std::vector<std::string>& decls) const {
  int dst_step = src_step + 1;
  std::ostringstream ante;
  ante << "(and";
  const auto& src_active = sts_.cps[static_cast<size_t>(t.src)].active;
  for (size_t si = 0; si < m_.states.size(); ++si) {
    bool on = std::binary_search(src_active.begin(), src_active.end(), static_cast<int>(si));
    ante << ' ' << (on ? "" : "(not ") << ctrl_name(m_.states[si].path, src_step)
         << (on ? "" : ")");
  }
  ante << ' ' << event_name(m_.event_name(t.event), src_step);
  for (const auto& g : t.guard) ante << ' ' << render_guard(g, src_step);
  ante << ')';

  // consequent: destination control point, SSA chain, final equalities
  std::ostringstream cons;
  cons << "(and";
  const auto& dst_active = sts_.cps[static_cast<size_t>(t.dst)].active;
  for (size_t si = 0; si < m_.states.size(); ++si) {
    bool on = std::binary_search(dst_active.begin(), dst_active.end(), static_cast<int>(si));
    cons << ' ' << (on ? "" : "(not ") << ctrl_name(m_.states[si].path, dst_step)
         << (on ? "" : ")");
  }
  std::vector<std::string> cur;
  cur.reserve(m_.var_count());
  for (size_t v = 0; v < m_.var_count(); ++v)
    cur.push_back(data_name(m_.var(static_cast<int>(v)).name, src_step));
  for (const auto& entry : t.log) {
    const auto& d = m_.var(entry.var);
    std::string fresh = temp_name(d.name, src_step, ++temp_counter);
    decls.push_back("(declare-const " + fresh + ' ' + sort_text(d.sort) + ")");
    cons << " (= " << fresh << ' ' << render_lang(*entry.src->rhs, cur) << ')';
    cur[static_cast<size_t>(entry.var)] = fresh;
  }
  for (size_t v = 0; v < m_.var_count(); ++v) {
    cons << " (= " << data_name(m_.var(static_cast<int>(v)).name, dst_step) << ' ' << cur[v]
         << ')';
  }
  cons << ')';
  out += "(assert (=> " + ante.str() + ' ' + cons.str() + "))\n";
}

std::string BmcEncoder::step_chunk(int i) const {
  int src = i - 1;
  std::ostringstream os;
  os << "; step " << src << " -> " << i << "\n";
  std::ostringstream decl;
  for (size_t v = 0; v < m_.var_count(); ++v) {
    const auto& d = m_.var(static_cast<int>(v));
    decl << "(declare-const " << data_name(d.name, i) << ' ' << sort_text(d.sort) << ")\n";
  }
  for (const auto& st : m_.states)
    decl << "(declare-const " << ctrl_name(st.path, i) << " Bool)\n";
  for (size_t e = 0; e < m_.event_count(); ++e)
    decl << "(declare-const " << event_name(m_.event_name(static_cast<int>(e)), src)
         << " Bool)\n";

  std::string clauses;
  std::vector<std::string> temp_decls;
  int temp_counter = 0;
  for (int ti : step_transitions_)
    transition_clause(clauses, sts_.transitions[static_cast<size_t>(ti)], src, temp_counter,
                      temp_decls);

  os << decl.str();
  for (const auto& d : temp_decls) os << d << '\n';
  // exactly one event per step
  if (m_.event_count() == 0) {
    os << "(assert false)\n";
  } else {
    os << "(assert (or";
    for (size_t e = 0; e < m_.event_count(); ++e)
      os << ' ' << event_name(m_.event_name(static_cast<int>(e)), src);
    os << "))\n";
    for (size_t a = 0; a < m_.event_count(); ++a)
      for (size_t b = a + 1; b < m_.event_count(); ++b)
        os << "(assert (not (and " << event_name(m_.event_name(static_cast<int>(a)), src) << ' '
           << event_name(m_.event_name(static_cast<int>(b)), src) << ")))\n";
  }
  os << clauses;
  return os.str();
}

std::string BmcEncoder::not_prop_at(int i) const {
  std::vector<std::string> names;
  names.reserve(m_.var_count());
  for (size_t v = 0; v < m_.var_count(); ++v)
    names.push_back(data_name(m_.var(static_cast<int>(v)).name, i));
  // φ̂ maps in(path) atoms to the step's control booleans
  std::function<std::string(const lang::Expr&)> r = [&](const lang::Expr& e) -> std::string {
    if (e.kind == lang::ExprKind::InState)
      return ctrl_name(m_.states[static_cast<size_t>(e.state_index)].path, i);
    if (e.kind == lang::ExprKind::Not) return "(not " + r(*e.lhs) + ")";
    if (e.kind == lang::ExprKind::And) return "(and " + r(*e.lhs) + " " + r(*e.rhs) + ")";
    if (e.kind == lang::ExprKind::Or) return "(or " + r(*e.lhs) + " " + r(*e.rhs) + ")";
    return render_lang(e, names);
  };
  return "(not " + r(*prop_.predicate) + ")";
}

std::string BmcEncoder::property_probe(int i) const {
  return "(assert " + not_prop_at(i) + ")\n";
}

std::string BmcEncoder::property_disjunction(int k) const {
  std::ostringstream os;
  if (k == 0) return property_probe(0);
  os << "(assert (or";
  for (int i = 0; i <= k; ++i) os << ' ' << not_prop_at(i);
  os << "))\n";
  return os.str();
}

std::string BmcEncoder::property_activation(int i) const {
  std::string lit = activation_name(i);
  return "(declare-const " + lit + " Bool)\n(assert (=> " + lit + ' ' + not_prop_at(i) +
         "))\n";
}

std::string BmcEncoder::property_activation_disjunction(int k) const {
  std::string lit = activation_name(k);
  std::ostringstream os;
  os << "(declare-const " << lit << " Bool)\n(assert (=> " << lit;
  if (k == 0) {
    os << ' ' << not_prop_at(0);
  } else {
    os << " (or";
    for (int i = 0; i <= k; ++i) os << ' ' << not_prop_at(i);
    os << ')';
  }
  os << "))\n";
  return os.str();
}

std::vector<std::string> BmcEncoder::value_names(int k) const {
  std::vector<std::string> names;
  for (int i = 0; i <= k; ++i) {
    for (size_t v = 0; v < m_.var_count(); ++v)
      names.push_back(data_name(m_.var(static_cast<int>(v)).name, i));
    for (const auto& st : m_.states) names.push_back(ctrl_name(st.path, i));
    if (i < k)
      for (size_t e = 0; e < m_.event_count(); ++e)
        names.push_back(event_name(m_.event_name(static_cast<int>(e)), i));
  }
  return names;
}

SmtScript BmcEncoder::full_script(int k) const {
  SmtScript s;
  s.logic = logic_;
  s.depth = k;
  std::ostringstream os;
  os << preamble();
  for (int i = 1; i <= k; ++i) os << step_chunk(i);
  os << property_disjunction(k);
  os << "(check-sat)\n";
  s.text = os.str();
  return s;
}

SmtScript encode_bmc_query(const sts::Sts& sts, const lang::InvariantProperty& prop, int k) {
  BmcEncoder enc(sts, prop);
  return enc.full_script(k);
}

}  // namespace sfbmc::smt
