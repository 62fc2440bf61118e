// SPDX-License-Identifier: Apache-2.0
#include <functional>
#include <sstream>

#include "lang/model.hpp"

namespace sfbmc::lang {

namespace {

bool proper_prefix(const std::string& p, const std::string& q) {
  // "" is a proper prefix of any nonempty path; otherwise q must extend p
  // at a segment boundary.
  if (p.empty()) return !q.empty();
  return q.size() > p.size() && q.compare(0, p.size(), p) == 0 && q[p.size()] == '.';
}

}  // namespace

bool Model::state_is_ancestor(int anc, int desc) const {
  for (int s : states[static_cast<size_t>(desc)].ancestry)
    if (s == anc) return true;
  return false;
}

struct ModelBuilder {
  Model& m;
  std::vector<Diagnostic>& diags;

  void error(const std::string& msg, SourceLoc loc) { diags.push_back({msg, loc}); }

  void check_ident(const std::string& name, const char* what, SourceLoc loc) {
    if (name.find("__") != std::string::npos)
      error(std::string(what) + " '" + name + "' must not contain '__' (reserved)", loc);
  }

  void index_decls() {
    const Program& p = *m.program;
    for (size_t i = 0; i < p.events.size(); ++i) {
      check_ident(p.events[i], "event", {});
      if (!m.event_index_.emplace(p.events[i], static_cast<int>(i)).second)
        error("duplicate event '" + p.events[i] + "'", {});
    }
    for (size_t i = 0; i < p.vars.size(); ++i) {
      check_ident(p.vars[i].name, "variable", p.vars[i].loc);
      if (!m.var_index_.emplace(p.vars[i].name, static_cast<int>(i)).second)
        error("duplicate variable '" + p.vars[i].name + "'", p.vars[i].loc);
    }
  }

  // Pass 1: build state/composition/junction tables.
  void build_tree(const Component* comp, int owner_state, const std::string& owner_path) {
    int ci = static_cast<int>(m.comps.size());
    m.comps.push_back({});
    CompInfo& info = m.comps.back();
    info.index = ci;
    info.kind = comp->kind;
    info.path = owner_path;
    info.owner_state = owner_state;
    info.def = comp;
    if (owner_state >= 0) m.states[static_cast<size_t>(owner_state)].child_comp = ci;

    if (comp->states.empty() && owner_state == -1)
      error("root composition must contain at least one state", comp->loc);
    if (comp->kind == CompKind::And && comp->states.empty())
      error("and-composition must contain at least one state", comp->loc);
    if (comp->kind == CompKind::Or && !comp->states.empty() && comp->defaults.empty())
      error("or-composition with states requires a default transition list", comp->loc);

    for (const auto& sd : comp->states) {
      int si = static_cast<int>(m.states.size());
      std::string path = owner_path.empty() ? sd->name : owner_path + "." + sd->name;
      check_ident(sd->name, "state", sd->loc);
      if (!m.path_to_state_.emplace(path, si).second) {
        error("duplicate state name '" + sd->name + "'", sd->loc);
        continue;
      }
      m.states.push_back({});
      StateInfo& st = m.states.back();
      st.index = si;
      st.name = sd->name;
      st.path = path;
      st.comp = ci;
      st.ordinal = static_cast<int>(m.comps[static_cast<size_t>(ci)].states.size());
      st.parent_state = owner_state;
      st.def = sd.get();
      if (owner_state >= 0)
        st.ancestry = m.states[static_cast<size_t>(owner_state)].ancestry;
      st.ancestry.push_back(si);
      m.comps[static_cast<size_t>(ci)].states.push_back(si);

      for (const auto& j : sd->junctions) {
        check_ident(j.id, "junction", j.loc);
        int ji = static_cast<int>(m.junctions.size());
        if (!m.junction_index_.emplace(Model::ScopeKey{si, j.id}, ji).second) {
          error("duplicate junction id '" + j.id + "'", j.loc);
          continue;
        }
        m.junctions.push_back({ji, j.id, si, &j.list});
      }
      if (sd->child) build_tree(sd->child.get(), si, path);
    }
  }

  // --- expression checking -------------------------------------------------

  std::optional<Sort> check_expr(Expr* e, bool allow_in_state) {
    switch (e->kind) {
      case ExprKind::IntLit: return Sort::Int;
      case ExprKind::BoolLit: return Sort::Bool;
      case ExprKind::Var: {
        int vi = m.var_by_name(e->name);
        if (vi < 0) {
          error("undeclared variable " + e->name, e->loc);
          return std::nullopt;
        }
        e->var_index = vi;
        return m.var(vi).sort;
      }
      case ExprKind::InState: {
        if (!allow_in_state) {
          error("in(...) is only allowed in properties", e->loc);
          return std::nullopt;
        }
        int si = m.state_by_path(e->name);
        if (si < 0) {
          error("unknown state path '" + e->name + "'", e->loc);
          return std::nullopt;
        }
        e->state_index = si;
        return Sort::Bool;
      }
      case ExprKind::Neg: {
        auto s = check_expr(e->lhs.get(), allow_in_state);
        if (s && *s != Sort::Int) error("unary '-' needs an int operand", e->loc);
        return Sort::Int;
      }
      case ExprKind::Not: {
        auto s = check_expr(e->lhs.get(), allow_in_state);
        if (s && *s != Sort::Bool) error("'!' needs a bool operand", e->loc);
        return Sort::Bool;
      }
      case ExprKind::Add:
      case ExprKind::Sub:
      case ExprKind::Mul: {
        auto l = check_expr(e->lhs.get(), allow_in_state);
        auto r = check_expr(e->rhs.get(), allow_in_state);
        if ((l && *l != Sort::Int) || (r && *r != Sort::Int))
          error("arithmetic needs int operands", e->loc);
        return Sort::Int;
      }
      case ExprKind::And:
      case ExprKind::Or: {
        auto l = check_expr(e->lhs.get(), allow_in_state);
        auto r = check_expr(e->rhs.get(), allow_in_state);
        if ((l && *l != Sort::Bool) || (r && *r != Sort::Bool))
          error("'&&'/'||' need bool operands", e->loc);
        return Sort::Bool;
      }
      case ExprKind::Cmp: {
        auto l = check_expr(e->lhs.get(), allow_in_state);
        auto r = check_expr(e->rhs.get(), allow_in_state);
        if ((l && *l != Sort::Int) || (r && *r != Sort::Int))
          error("comparisons need int operands", e->loc);
        return Sort::Bool;
      }
    }
    return std::nullopt;
  }

  void check_actions(ActionSeq& seq) {
    for (auto& a : seq) {
      int vi = m.var_by_name(a.var);
      if (vi < 0) {
        error("undeclared variable " + a.var, a.loc);
        continue;
      }
      a.var_index = vi;
      auto s = check_expr(a.rhs.get(), false);
      if (s && *s != m.var(vi).sort)
        error("assignment to '" + a.var + "' has mismatched sort", a.loc);
    }
  }

  // --- destination resolution ----------------------------------------------

  // scope_state: state whose junction list is in effect for this list
  // base_path: paths tried relative to this prefix after absolute lookup
  void resolve_dest(Destination& d, int scope_state, const std::string& base_path) {
    if (d.kind == DestKind::End) return;
    if (d.text.find('.') == std::string::npos && scope_state >= 0) {
      int ji = m.junction_in_scope(scope_state, d.text);
      if (ji >= 0) {
        d.kind = DestKind::Junction;
        d.junction_index = ji;
        return;
      }
    }
    int si = m.state_by_path(d.text);
    if (si < 0 && !base_path.empty()) si = m.state_by_path(base_path + "." + d.text);
    if (si < 0) {
      error("unresolved destination '" + d.text + "'", d.loc);
      return;
    }
    d.kind = DestKind::StatePath;
    d.state_index = si;
  }

  // Checks that the fire raised at `from_comp` toward state dest can be
  // consumed: the climb crosses only or-compositions and stops strictly
  // above the destination path.
  void check_fire_path(int from_comp, int dest_state, SourceLoc loc) {
    const std::string& dest = m.states[static_cast<size_t>(dest_state)].path;
    int ci = from_comp;
    for (;;) {
      const CompInfo& c = m.comps[static_cast<size_t>(ci)];
      if (proper_prefix(c.path, dest)) {
        if (c.kind == CompKind::And) {
          error("transition destination crosses an and-composition boundary", loc);
        }
        return;  // consumed here
      }
      if (c.path == dest) {
        error("destination is an ancestor of its source", loc);
        return;
      }
      if (c.kind == CompKind::And) {
        error("transition escapes an and-composition", loc);
        return;
      }
      if (c.owner_state < 0) {
        error("destination is an ancestor of its source", loc);
        return;
      }
      ci = m.states[static_cast<size_t>(c.owner_state)].comp;
    }
  }

  void check_transition_list(TransitionList& list, int scope_state,
                             const std::string& base_path) {
    for (auto& t : list) {
      if (t.event) {
        int ei = m.event_by_name(*t.event);
        if (ei < 0) error("unknown event '" + *t.event + "'", t.loc);
        t.event_index = ei;
      }
      if (t.cond) {
        auto s = check_expr(t.cond.get(), false);
        if (s && *s != Sort::Bool) error("transition condition must be bool", t.loc);
      }
      check_actions(t.cond_action);
      check_actions(t.trans_action);
      resolve_dest(t.dest, scope_state, base_path);
    }
  }

  void check_state(int si) {
    StateInfo& st = m.states[static_cast<size_t>(si)];
    auto* sd = const_cast<StateDef*>(st.def);
    check_actions(sd->entry);
    check_actions(sd->during);
    check_actions(sd->exit);

    check_transition_list(sd->outer, si, st.path);
    check_transition_list(sd->inner, si, st.path);
    for (auto& j : sd->junctions)
      check_transition_list(const_cast<TransitionList&>(j.list), si, st.path);

    // fire-path legality for state destinations
    int parent_comp = st.comp;
    for (auto& t : sd->outer) {
      if (t.dest.kind == DestKind::StatePath && t.dest.state_index >= 0)
        check_fire_path(parent_comp, t.dest.state_index, t.loc);
    }
    for (auto& t : sd->inner) {
      if (t.dest.kind != DestKind::StatePath || t.dest.state_index < 0) continue;
      int di = t.dest.state_index;
      const std::string& dp = m.states[static_cast<size_t>(di)].path;
      if (proper_prefix(st.path, dp)) {
        // consumed by the state's own child composition, which must be an Or
        if (st.child_comp < 0 ||
            m.comps[static_cast<size_t>(st.child_comp)].kind != CompKind::Or)
          error("inner transition target needs an or-composition child", t.loc);
      } else if (dp == st.path) {
        error("inner transition destination must lie strictly inside the state", t.loc);
      } else {
        // leaves the state: same climb as an outer fire, and the pending fire
        // must be able to flow out of the child composition
        if (st.child_comp >= 0 &&
            m.comps[static_cast<size_t>(st.child_comp)].kind == CompKind::And)
          error("inner transition cannot cross an and-composition child", t.loc);
        check_fire_path(parent_comp, di, t.loc);
      }
    }
    // junction-list fires behave like fires from this state's lists
    for (auto& j : sd->junctions) {
      for (auto& t : j.list) {
        if (t.dest.kind == DestKind::StatePath && t.dest.state_index >= 0)
          check_fire_path(parent_comp, t.dest.state_index, t.loc);
      }
    }
  }

  void check_comp_defaults(int ci) {
    CompInfo& c = m.comps[static_cast<size_t>(ci)];
    if (c.kind != CompKind::Or) return;
    auto* comp = const_cast<Component*>(c.def);
    check_transition_list(comp->defaults, c.owner_state, c.path);
    for (auto& t : comp->defaults) {
      if (t.dest.kind == DestKind::End) {
        error("default transition cannot target 'end'", t.loc);
      } else if (t.dest.kind == DestKind::StatePath && t.dest.state_index >= 0) {
        const std::string& dp = m.states[static_cast<size_t>(t.dest.state_index)].path;
        if (!proper_prefix(c.path, dp))
          error("default transition destination must lie inside the composition", t.loc);
      }
    }
  }

  void check_junction_cycles() {
    // DFS over junction-to-junction edges, one graph per scope
    size_t n = m.junctions.size();
    std::vector<int> mark(n, 0);  // 0 new, 1 on stack, 2 done
    std::function<bool(size_t)> dfs = [&](size_t j) -> bool {
      mark[j] = 1;
      for (const auto& t : *m.junctions[j].list) {
        if (t.dest.kind != DestKind::Junction || t.dest.junction_index < 0) continue;
        size_t k = static_cast<size_t>(t.dest.junction_index);
        if (mark[k] == 1) return true;
        if (mark[k] == 0 && dfs(k)) return true;
      }
      mark[j] = 2;
      return false;
    };
    for (size_t j = 0; j < n; ++j) {
      if (mark[j] == 0 && dfs(j)) {
        error("cyclic junction network involving '" + m.junctions[j].id + "'", {});
        return;
      }
    }
  }
};

ModelPtr validate_model(ProgramPtr program, std::vector<Diagnostic>& diags) {
  auto model = std::make_shared<Model>();
  model->program = std::move(program);
  ModelBuilder b{*model, diags};
  b.index_decls();
  b.build_tree(model->program->root.get(), -1, "");
  for (size_t i = 0; i < model->states.size(); ++i) b.check_state(static_cast<int>(i));
  for (size_t i = 0; i < model->comps.size(); ++i) b.check_comp_defaults(static_cast<int>(i));
  b.check_junction_cycles();
  return model;
}

}  // namespace sfbmc::lang
