// SPDX-License-Identifier: Apache-2.0
#include "exec/interp.hpp"

#include <algorithm>

namespace sfbmc::exec {

using lang::ActionSeq;
using lang::CompInfo;
using lang::CompKind;
using lang::DestKind;
using lang::Expr;
using lang::ExprKind;
using lang::StateInfo;
using lang::Transition;
using lang::TransitionList;

Value eval_expr(const Expr& e, const Env& env) {
  switch (e.kind) {
    case ExprKind::IntLit: return {Sort::Int, e.int_val};
    case ExprKind::BoolLit: return {Sort::Bool, e.bool_val ? 1 : 0};
    case ExprKind::Var: return env[static_cast<size_t>(e.var_index)];
    case ExprKind::InState: throw ExecError("in(...) outside property evaluation");
    case ExprKind::Neg: return {Sort::Int, -eval_expr(*e.lhs, env).i};
    case ExprKind::Not: return {Sort::Bool, eval_expr(*e.lhs, env).i ? 0 : 1};
    case ExprKind::Add: return {Sort::Int, eval_expr(*e.lhs, env).i + eval_expr(*e.rhs, env).i};
    case ExprKind::Sub: return {Sort::Int, eval_expr(*e.lhs, env).i - eval_expr(*e.rhs, env).i};
    case ExprKind::Mul: return {Sort::Int, eval_expr(*e.lhs, env).i * eval_expr(*e.rhs, env).i};
    case ExprKind::And:
      return {Sort::Bool, (eval_expr(*e.lhs, env).i && eval_expr(*e.rhs, env).i) ? 1 : 0};
    case ExprKind::Or:
      return {Sort::Bool, (eval_expr(*e.lhs, env).i || eval_expr(*e.rhs, env).i) ? 1 : 0};
    case ExprKind::Cmp: {
      long long l = eval_expr(*e.lhs, env).i;
      long long r = eval_expr(*e.rhs, env).i;
      bool v = false;
      switch (e.cmp) {
        case lang::CmpOp::Eq: v = l == r; break;
        case lang::CmpOp::Ne: v = l != r; break;
        case lang::CmpOp::Lt: v = l < r; break;
        case lang::CmpOp::Le: v = l <= r; break;
        case lang::CmpOp::Gt: v = l > r; break;
        case lang::CmpOp::Ge: v = l >= r; break;
      }
      return {Sort::Bool, v ? 1 : 0};
    }
  }
  throw ExecError("malformed expression");
}

bool eval_cond(const Expr& c, const Env& env) { return eval_expr(c, env).i != 0; }

Env exec_action(const ActionSeq& a, const Env& env) {
  Env out = env;
  for (const auto& as : a)
    out[static_cast<size_t>(as.var_index)] = eval_expr(*as.rhs, out);
  return out;
}

bool eval_property(const Expr& p, const Env& env, const std::vector<int>& active) {
  switch (p.kind) {
    case ExprKind::InState:
      return std::binary_search(active.begin(), active.end(), p.state_index);
    case ExprKind::Not: return !eval_property(*p.lhs, env, active);
    case ExprKind::And:
      return eval_property(*p.lhs, env, active) && eval_property(*p.rhs, env, active);
    case ExprKind::Or:
      return eval_property(*p.lhs, env, active) || eval_property(*p.rhs, env, active);
    default: return eval_expr(p, env).i != 0;
  }
}

namespace {

// Result of processing a transition list: Fire always carries a resolved
// state destination; junction hops are resolved within the list walk.
struct ListResult {
  enum K { Fire, No, End } k = No;
  int dest_state = -1;
  std::vector<const ActionSeq*> pending;  // transition actions, in firing order
};

struct Machine {
  const Model& m;
  std::optional<int> event;
  Env& env;
  Activity& act;
  int fuel;
  std::vector<int>* written;

  void spend() {
    if (--fuel < 0) throw ExecError("step divergence guard tripped");
  }

  void run_actions(const ActionSeq& a) {
    for (const auto& as : a) {
      env[static_cast<size_t>(as.var_index)] = eval_expr(*as.rhs, env);
      if (written) written->push_back(as.var_index);
    }
  }

  bool enabled(const Transition& t) const {
    if (!t.event.has_value()) return true;
    if (!event.has_value()) return true;  // the empty event enables everything
    return t.event_index == *event;
  }

  // --- transition lists ----------------------------------------------------

  ListResult process_list(const TransitionList& list, int scope_state) {
    (void)scope_state;  // junction references were resolved against it at validation
    spend();
    if (list.empty()) return {ListResult::End, -1, {}};
    for (const auto& t : list) {
      spend();
      if (!enabled(t)) continue;  // [t-NOT-ENABLED], fall through
      bool fire = !t.cond || eval_cond(*t.cond, env);
      if (!fire) continue;  // [t-NO-FIRE], fall through
      run_actions(t.cond_action);
      switch (t.dest.kind) {
        case DestKind::StatePath:
          return {ListResult::Fire, t.dest.state_index, {&t.trans_action}};
        case DestKind::End: {
          // implicit terminal junction: its empty list ends the walk
          return {ListResult::End, -1, {}};
        }
        case DestKind::Junction: {
          const auto& j = m.junctions[static_cast<size_t>(t.dest.junction_index)];
          ListResult jr = process_list(*j.list, j.scope_state);
          if (jr.k == ListResult::Fire) {
            jr.pending.insert(jr.pending.begin(), &t.trans_action);
            return jr;  // actions compose ta1;ta2
          }
          if (jr.k == ListResult::End) return jr;
          // junction list said No: backtrack, resume with the rest of this list
          break;
        }
      }
    }
    return {ListResult::No, -1, {}};
  }

  // --- init / exit ---------------------------------------------------------

  void enter_state(int si, int target /*-1 = defaults*/) {
    spend();
    const StateInfo& st = m.states[static_cast<size_t>(si)];
    run_actions(st.def->entry);
    if (st.child_comp >= 0) init_comp(st.child_comp, target == si ? -1 : target);
  }

  void init_comp(int ci, int target /*descendant state index or -1*/) {
    spend();
    const CompInfo& c = m.comps[static_cast<size_t>(ci)];
    if (c.states.empty()) return;  // [OR-INIT-NO-STATE]
    if (c.kind == CompKind::Or) {
      if (target >= 0) {
        int child = member_on_path(c, target);
        act.slot[static_cast<size_t>(ci)] =
            static_cast<int8_t>(m.states[static_cast<size_t>(child)].ordinal + 1);
        enter_state(child, target);
      } else {
        ListResult r = process_list(c.def->defaults, c.owner_state);
        if (r.k != ListResult::Fire)
          throw ExecError("initialization failed: no default transition fired in '" +
                          (c.path.empty() ? std::string("<root>") : c.path) + "'");
        int child = member_on_path(c, r.dest_state);
        act.slot[static_cast<size_t>(ci)] =
            static_cast<int8_t>(m.states[static_cast<size_t>(child)].ordinal + 1);
        enter_state(child, r.dest_state);
        for (const ActionSeq* a : r.pending) run_actions(*a);  // ta after entry
      }
    } else {
      act.slot[static_cast<size_t>(ci)] = 1;
      for (int si : c.states) {
        bool on_path = target >= 0 && m.state_is_ancestor(si, target);
        enter_state(si, on_path ? target : -1);
      }
    }
  }

  int member_on_path(const CompInfo& c, int target) const {
    for (int si : c.states)
      if (si == target || m.state_is_ancestor(si, target)) return si;
    throw ExecError("destination not inside composition");
  }

  void exit_state(int si) {
    spend();
    const StateInfo& st = m.states[static_cast<size_t>(si)];
    if (st.child_comp >= 0) exit_comp(st.child_comp);
    run_actions(st.def->exit);
  }

  void exit_comp(int ci) {
    spend();
    const CompInfo& c = m.comps[static_cast<size_t>(ci)];
    int8_t& slot = act.slot[static_cast<size_t>(ci)];
    if (c.kind == CompKind::Or) {
      if (slot > 0) exit_state(c.states[static_cast<size_t>(slot - 1)]);
      slot = 0;
    } else {
      if (slot > 0)
        for (auto it = c.states.rbegin(); it != c.states.rend(); ++it) exit_state(*it);
      slot = 0;
    }
  }

  // --- stepping ------------------------------------------------------------

  struct Tv {
    enum K { Fire, No } k = No;
    int dest_state = -1;
    std::vector<const ActionSeq*> pending;
  };

  Tv step_state(int si) {
    spend();
    const StateInfo& st = m.states[static_cast<size_t>(si)];
    const auto* sd = st.def;

    ListResult ro = process_list(sd->outer, si);
    if (ro.k == ListResult::Fire) {  // [SD-FIRE]
      for (const ActionSeq* a : ro.pending) run_actions(*a);
      if (st.child_comp >= 0) exit_comp(st.child_comp);
      run_actions(sd->exit);
      return {Tv::Fire, ro.dest_state, {}};
    }

    run_actions(sd->during);
    ListResult ri = process_list(sd->inner, si);
    if (ri.k == ListResult::Fire) {
      const std::string& dp = m.states[static_cast<size_t>(ri.dest_state)].path;
      bool inside = dp.size() > st.path.size() &&
                    dp.compare(0, st.path.size(), st.path) == 0 && dp[st.path.size()] == '.';
      if (inside) {  // pending fire consumed by the child composition [OR-EXT-FIRE]
        for (const ActionSeq* a : ri.pending) run_actions(*a);
        int ci = st.child_comp;
        exit_comp_active_child(ci);
        init_comp(ci, ri.dest_state);
        return {Tv::No, -1, {}};
      }
      // leaves the state [OR-EXT-FIRE-OUT] + [SD-INT-FIRE]
      for (const ActionSeq* a : ri.pending) run_actions(*a);
      if (st.child_comp >= 0) exit_comp(st.child_comp);
      run_actions(sd->exit);
      return {Tv::Fire, ri.dest_state, {}};
    }

    if (st.child_comp >= 0) {
      Tv rc = step_comp(st.child_comp);
      if (rc.k == Tv::Fire) {  // [SD-INT-FIRE]
        for (const ActionSeq* a : rc.pending) run_actions(*a);
        run_actions(sd->exit);
        return {Tv::Fire, rc.dest_state, {}};
      }
    }
    return {Tv::No, -1, {}};  // [SD-NO]
  }

  void exit_comp_active_child(int ci) {
    const CompInfo& c = m.comps[static_cast<size_t>(ci)];
    int8_t& slot = act.slot[static_cast<size_t>(ci)];
    if (c.kind != CompKind::Or) throw ExecError("pending fire into and-composition");
    if (slot > 0) exit_state(c.states[static_cast<size_t>(slot - 1)]);
    slot = 0;
  }

  Tv step_comp(int ci) {
    spend();
    const CompInfo& c = m.comps[static_cast<size_t>(ci)];
    int8_t slot = act.slot[static_cast<size_t>(ci)];
    if (c.kind == CompKind::Or) {
      if (slot == 0) return {Tv::No, -1, {}};  // empty or inactive composition
      int si = c.states[static_cast<size_t>(slot - 1)];
      Tv r = step_state(si);
      if (r.k != Tv::Fire) return {Tv::No, -1, {}};  // [OR-NO]
      const std::string& dp = m.states[static_cast<size_t>(r.dest_state)].path;
      bool inside = lang_inside(c.path, dp);
      if (inside) {  // [OR-INT-FIRE]
        act.slot[static_cast<size_t>(ci)] = 0;
        init_comp(ci, r.dest_state);
        return {Tv::No, -1, {}};
      }
      act.slot[static_cast<size_t>(ci)] = 0;  // [OR-FIRE]
      return r;
    }
    // [AND]: members step in design order; escapes are validated away
    if (slot == 0) return {Tv::No, -1, {}};
    for (int si : c.states) {
      Tv r = step_state(si);
      if (r.k == Tv::Fire) throw ExecError("fire escaped an and-composition");
    }
    return {Tv::No, -1, {}};
  }

  static bool lang_inside(const std::string& comp_path, const std::string& dest_path) {
    if (comp_path.empty()) return !dest_path.empty();
    return dest_path.size() > comp_path.size() &&
           dest_path.compare(0, comp_path.size(), comp_path) == 0 &&
           dest_path[comp_path.size()] == '.';
  }
};

}  // namespace

Interp::Interp(const Model& m, ExecOptions opts) : m_(m), opts_(opts) {}

Env Interp::initial_env() const {
  Env env;
  env.reserve(m_.var_count());
  for (size_t i = 0; i < m_.var_count(); ++i) {
    const auto& v = m_.var(static_cast<int>(i));
    env.push_back(v.sort == Sort::Int ? Value{Sort::Int, v.init_int}
                                      : Value{Sort::Bool, v.init_bool ? 1 : 0});
  }
  return env;
}

Activity Interp::empty_activity() const {
  Activity a;
  a.slot.assign(m_.comps.size(), 0);
  return a;
}

bool Interp::initialized(const Activity& act) const { return act.slot[0] != 0; }

std::vector<int> Interp::active_states(const Activity& act) const {
  std::vector<int> out;
  // walk from the root; a state is active when every enclosing slot selects it
  std::vector<int> stack = {0};
  while (!stack.empty()) {
    int ci = stack.back();
    stack.pop_back();
    const CompInfo& c = m_.comps[static_cast<size_t>(ci)];
    int8_t slot = act.slot[static_cast<size_t>(ci)];
    if (slot == 0) continue;
    if (c.kind == CompKind::Or) {
      int si = c.states[static_cast<size_t>(slot - 1)];
      out.push_back(si);
      int cc = m_.states[static_cast<size_t>(si)].child_comp;
      if (cc >= 0) stack.push_back(cc);
    } else {
      for (int si : c.states) {
        out.push_back(si);
        int cc = m_.states[static_cast<size_t>(si)].child_comp;
        if (cc >= 0) stack.push_back(cc);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Interp::step(std::optional<int> event, Activity& act, Env& env) const {
  std::vector<int> written;
  Machine mach{m_, event, env, act, opts_.max_rule_apps, &written};
  if (!initialized(act)) {
    mach.init_comp(0, -1);
    if (!event.has_value()) return written;
  }
  if (event.has_value()) {
    auto r = mach.step_comp(0);
    if (r.k == Machine::Tv::Fire) throw ExecError("fire escaped the root composition");
  }
  return written;
}

ConcreteTrace Interp::run_trace(const std::vector<int>& events) const {
  return run_trace(events, initial_env());
}

ConcreteTrace Interp::run_trace(const std::vector<int>& events, Env env) const {
  ConcreteTrace trace;
  Activity act = empty_activity();
  step(std::nullopt, act, env);
  trace.push_back({std::nullopt, env, active_states(act)});
  for (int e : events) {
    step(e, act, env);
    trace.push_back({e, env, active_states(act)});
  }
  return trace;
}

}  // namespace sfbmc::exec
