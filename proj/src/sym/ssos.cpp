// SPDX-License-Identifier: Apache-2.0
#include "sym/ssos.hpp"

#include <sstream>

namespace sfbmc::sym {

using exec::ExecError;
using lang::ActionSeq;
using lang::CompInfo;
using lang::CompKind;
using lang::DestKind;
using lang::Model;
using lang::StateInfo;
using lang::Transition;
using lang::TransitionList;

namespace {

bool inside(const std::string& comp_path, const std::string& dest_path) {
  if (comp_path.empty()) return !dest_path.empty();
  return dest_path.size() > comp_path.size() &&
         dest_path.compare(0, comp_path.size(), comp_path) == 0 &&
         dest_path[comp_path.size()] == '.';
}

// A branch's mutable execution state, threaded by value through a derivation.
struct Thread {
  Activity act;
  SymEnv delta;
  std::vector<Ptr> appended;
  std::vector<AssignLog> log;
  int fuel;
};

struct Tv {
  TvKind k = TvKind::No;
  int dest_state = -1;
  std::vector<const ActionSeq*> pending;
};

struct JRes {  // judgment result: one branch of (thread, tv, derivation)
  Thread th;
  Tv tv;
  DerivPtr node;
};

struct IRes {  // init/exit result (no tv)
  Thread th;
  DerivPtr node;
};

struct Engine {
  const Model& m;
  const SsosOptions& opts;
  std::optional<int> event;

  std::string ev_text() const { return event ? m.event_name(*event) : "~"; }

  std::string conc(const std::string& subject, const char* what) const {
    if (!opts.build_conclusions) return {};
    std::ostringstream os;
    os << "e=" << ev_text() << " |- " << subject << " -> " << what;
    return os.str();
  }

  void spend(Thread& th) const {
    if (--th.fuel < 0) throw ExecError("step divergence guard tripped");
  }

  void run_actions(Thread& th, const ActionSeq& a) const {
    for (const auto& as : a) {
      Ptr rhs = subst(*as.rhs, th.delta);
      th.delta[static_cast<size_t>(as.var_index)] = rhs;
      th.log.push_back({as.var_index, &as, rhs});
    }
  }

  std::string action_side(const ActionSeq& a, const char* label) const {
    if (!opts.build_conclusions || a.empty()) return {};
    std::ostringstream os;
    os << label << ": ";
    for (size_t i = 0; i < a.size(); ++i) {
      if (i) os << "; ";
      os << a[i].var << " := " << lang::expr_text(a[i].rhs.get());
    }
    return os.str();
  }

  bool enabled(const Transition& t) const {
    if (!t.event.has_value()) return true;
    if (!event.has_value()) return true;
    return t.event_index == *event;
  }

  // --- transitions -----------------------------------------------------------

  // Branches of evaluating one transition: t-FIRE / t-NO-FIRE / t-NOT-ENABLED.
  // Fire results keep the raw destination; the list layer dispatches it.
  struct TRaw {
    Thread th;
    bool fired;
    const Transition* t;
    DerivPtr node;
  };

  std::vector<TRaw> eval_transition(const Transition& t, Thread th) const {
    spend(th);
    std::vector<TRaw> out;
    std::string subj = opts.build_conclusions
                           ? (t.event ? "t(on " + *t.event + ")" : std::string("t"))
                           : std::string();
    if (!enabled(t)) {
      out.push_back({std::move(th), false, &t,
                     mk_deriv(Rule::tNotEnabled, {}, conc(subj, "No"),
                              opts.build_conclusions
                                  ? std::vector<std::string>{"(e0 != e) && (e != ~)"}
                                  : std::vector<std::string>{})});
      return out;
    }
    Ptr g = t.cond ? subst(*t.cond, th.delta) : sym_true();
    // fire branch, conjunct g
    if (!is_false(g)) {
      Thread t1 = th;
      if (!is_true(g)) t1.appended.push_back(g);
      run_actions(t1, t.cond_action);
      std::vector<std::string> sides;
      if (opts.build_conclusions) {
        sides.push_back("pc &= " + to_text(g, m));
        auto ca = action_side(t.cond_action, "ca");
        if (!ca.empty()) sides.push_back(ca);
      }
      out.push_back({std::move(t1), true, &t,
                     mk_deriv(Rule::tFire, {}, conc(subj, "Fire"), std::move(sides))});
    }
    // no-fire branch, conjunct ¬g (inverted under the fault-injection hook)
    Ptr ng = opts.invert_no_fire_conjunct ? g : mk_not(g);
    if (!is_false(ng)) {
      Thread t0 = th;
      if (!is_true(ng)) t0.appended.push_back(ng);
      std::vector<std::string> sides;
      if (opts.build_conclusions) sides.push_back("pc &= " + to_text(ng, m));
      out.push_back({std::move(t0), false, &t,
                     mk_deriv(Rule::tNoFire, {}, conc(subj, "No"), std::move(sides))});
    }
    return out;
  }

  // --- transition lists -------------------------------------------------------

  std::vector<JRes> process_list(const TransitionList& list, Thread th) const {
    spend(th);
    if (list.empty()) {
      return {{std::move(th), {TvKind::End, -1, {}}, mk_deriv(Rule::TEmpty, {}, conc("T0", "End"))}};
    }
    return process_from(list, 0, std::move(th));
  }

  std::vector<JRes> process_from(const TransitionList& list, size_t i, Thread th) const {
    std::vector<JRes> out;
    const Transition& t = list[i];
    bool last = i + 1 == list.size();
    for (TRaw& b : eval_transition(t, th)) {
      if (!b.fired) {
        if (last) {
          out.push_back({std::move(b.th),
                         {TvKind::No, -1, {}},
                         mk_deriv(Rule::TNoLast, {b.node}, conc("t.T0", "No"))});
        } else {
          for (JRes& r : process_from(list, i + 1, std::move(b.th))) {
            const char* w = r.tv.k == TvKind::Fire ? "Fire" : r.tv.k == TvKind::End ? "End" : "No";
            out.push_back({std::move(r.th), std::move(r.tv),
                           mk_deriv(Rule::TNo, {b.node, r.node}, conc("t.T", w))});
          }
        }
        continue;
      }
      // fired: dispatch on destination
      switch (t.dest.kind) {
        case DestKind::StatePath: {
          Tv tv{TvKind::Fire, t.dest.state_index, {&t.trans_action}};
          out.push_back({std::move(b.th), std::move(tv),
                         mk_deriv(Rule::TFire, {b.node},
                                  conc("t.T", ("Fire -> " +
                                               m.states[static_cast<size_t>(t.dest.state_index)].path)
                                                  .c_str()))});
          break;
        }
        case DestKind::End: {
          // firing into a terminal junction: its empty list ends the walk
          DerivPtr empty = mk_deriv(Rule::TEmpty, {}, conc("T0", "End"));
          out.push_back({std::move(b.th),
                         {TvKind::End, -1, {}},
                         mk_deriv(Rule::TEnd, {b.node, empty}, conc("t.T", "End"))});
          break;
        }
        case DestKind::Junction: {
          const auto& j = m.junctions[static_cast<size_t>(t.dest.junction_index)];
          for (JRes& jr : process_list(*j.list, std::move(b.th))) {
            switch (jr.tv.k) {
              case TvKind::Fire: {
                Tv tv = std::move(jr.tv);
                tv.pending.insert(tv.pending.begin(), &t.trans_action);
                out.push_back({std::move(jr.th), std::move(tv),
                               mk_deriv(Rule::TFireJF, {b.node, jr.node}, conc("t.T", "Fire"))});
                break;
              }
              case TvKind::End:
                out.push_back({std::move(jr.th), std::move(jr.tv),
                               mk_deriv(Rule::TEnd, {b.node, jr.node}, conc("t.T", "End"))});
                break;
              case TvKind::No: {
                // backtrack: resume with the remainder of this list
                std::vector<JRes> rest;
                if (last) {
                  rest.push_back({std::move(jr.th),
                                  {TvKind::End, -1, {}},
                                  mk_deriv(Rule::TEmpty, {}, conc("T0", "End"))});
                } else {
                  rest = process_from(list, i + 1, std::move(jr.th));
                }
                for (JRes& r : rest) {
                  const char* w =
                      r.tv.k == TvKind::Fire ? "Fire" : r.tv.k == TvKind::End ? "End" : "No";
                  out.push_back({std::move(r.th), std::move(r.tv),
                                 mk_deriv(Rule::TFireJN, {b.node, jr.node, r.node},
                                          conc("t.T", w))});
                }
                break;
              }
            }
          }
          break;
        }
      }
    }
    return out;
  }

  // --- init (⇑) and exit (⇓) ---------------------------------------------------

  std::vector<IRes> enter_state(int si, int target, Thread th) const {
    spend(th);
    const StateInfo& st = m.states[static_cast<size_t>(si)];
    run_actions(th, st.def->entry);
    std::vector<std::string> sides;
    if (opts.build_conclusions) {
      auto en = action_side(st.def->entry, "en");
      if (!en.empty()) sides.push_back(en);
    }
    std::vector<IRes> out;
    if (st.child_comp >= 0) {
      for (IRes& c : init_comp(st.child_comp, target == si ? -1 : target, std::move(th))) {
        out.push_back({std::move(c.th),
                       mk_deriv(Rule::SdInit, {c.node}, conc(st.path, "entered"), sides)});
      }
    } else {
      DerivPtr leaf = mk_deriv(Rule::OrInitNoState, {}, conc(st.path + ".C", "entered"));
      out.push_back({std::move(th), mk_deriv(Rule::SdInit, {leaf}, conc(st.path, "entered"), sides)});
    }
    return out;
  }

  std::vector<IRes> init_comp(int ci, int target, Thread th) const {
    spend(th);
    const CompInfo& c = m.comps[static_cast<size_t>(ci)];
    std::string label = c.path.empty() ? "<root>" : c.path;
    if (c.states.empty())
      return {{std::move(th), mk_deriv(Rule::OrInitNoState, {}, conc(label, "entered"))}};
    if (c.kind == CompKind::Or) {
      if (target >= 0) {
        int child = member_on_path(c, target);
        th.act.slot[static_cast<size_t>(ci)] =
            static_cast<int8_t>(m.states[static_cast<size_t>(child)].ordinal + 1);
        std::vector<IRes> out;
        for (IRes& r : enter_state(child, target, std::move(th))) {
          out.push_back(
              {std::move(r.th), mk_deriv(Rule::OrInit, {r.node}, conc(label, "entered"))});
        }
        return out;
      }
      // defaults must fire; stuck branches are dropped
      std::vector<IRes> out;
      for (JRes& r : process_list(c.def->defaults, std::move(th))) {
        if (r.tv.k != TvKind::Fire) continue;
        int child = member_on_path(c, r.tv.dest_state);
        r.th.act.slot[static_cast<size_t>(ci)] =
            static_cast<int8_t>(m.states[static_cast<size_t>(child)].ordinal + 1);
        auto pend = std::move(r.tv.pending);
        for (IRes& e : enter_state(child, r.tv.dest_state, std::move(r.th))) {
          Thread th2 = std::move(e.th);
          for (const ActionSeq* a : pend) run_actions(th2, *a);  // ta after entry
          out.push_back({std::move(th2),
                         mk_deriv(Rule::OrInitEmptyP, {r.node, e.node}, conc(label, "entered"))});
        }
      }
      return out;
    }
    // and-composition: all members enter, design order
    th.act.slot[static_cast<size_t>(ci)] = 1;
    std::vector<IRes> acc = {{std::move(th), nullptr}};
    std::vector<std::vector<DerivPtr>> kid_sets = {{}};
    for (int si : c.states) {
      std::vector<IRes> next;
      std::vector<std::vector<DerivPtr>> next_kids;
      for (size_t bi = 0; bi < acc.size(); ++bi) {
        bool on_path = target >= 0 && m.state_is_ancestor(si, target);
        for (IRes& r : enter_state(si, on_path ? target : -1, std::move(acc[bi].th))) {
          auto kids = kid_sets[bi];
          kids.push_back(r.node);
          next.push_back({std::move(r.th), nullptr});
          next_kids.push_back(std::move(kids));
        }
      }
      acc = std::move(next);
      kid_sets = std::move(next_kids);
    }
    std::vector<IRes> out;
    for (size_t bi = 0; bi < acc.size(); ++bi) {
      out.push_back({std::move(acc[bi].th),
                     mk_deriv(Rule::AndInit, std::move(kid_sets[bi]), conc(label, "entered"))});
    }
    return out;
  }

  int member_on_path(const CompInfo& c, int target) const {
    for (int si : c.states)
      if (si == target || m.state_is_ancestor(si, target)) return si;
    throw ExecError("destination not inside composition");
  }

  IRes exit_state(int si, Thread th) const {
    spend(th);
    const StateInfo& st = m.states[static_cast<size_t>(si)];
    DerivPtr child_node;
    if (st.child_comp >= 0) {
      IRes r = exit_comp(st.child_comp, std::move(th));
      th = std::move(r.th);
      child_node = r.node;
    } else {
      child_node = mk_deriv(Rule::OrInitNoState, {}, conc(st.path + ".C", "exited"));
    }
    run_actions(th, st.def->exit);
    std::vector<std::string> sides;
    if (opts.build_conclusions) {
      auto ex = action_side(st.def->exit, "ex");
      if (!ex.empty()) sides.push_back(ex);
    }
    return {std::move(th), mk_deriv(Rule::SdExit, {child_node}, conc(st.path, "exited"), sides)};
  }

  IRes exit_comp(int ci, Thread th) const {
    spend(th);
    const CompInfo& c = m.comps[static_cast<size_t>(ci)];
    std::string label = c.path.empty() ? "<root>" : c.path;
    int8_t slot = th.act.slot[static_cast<size_t>(ci)];
    if (c.kind == CompKind::Or) {
      if (slot == 0)
        return {std::move(th), mk_deriv(Rule::OrInitNoState, {}, conc(label, "exited"))};
      th.act.slot[static_cast<size_t>(ci)] = 0;
      IRes r = exit_state(c.states[static_cast<size_t>(slot - 1)], std::move(th));
      return {std::move(r.th), mk_deriv(Rule::OrExit, {r.node}, conc(label, "exited"))};
    }
    if (slot == 0)
      return {std::move(th), mk_deriv(Rule::OrInitNoState, {}, conc(label, "exited"))};
    th.act.slot[static_cast<size_t>(ci)] = 0;
    std::vector<DerivPtr> kids;
    for (auto it = c.states.rbegin(); it != c.states.rend(); ++it) {
      IRes r = exit_state(*it, std::move(th));
      th = std::move(r.th);
      kids.push_back(r.node);
    }
    return {std::move(th), mk_deriv(Rule::AndExit, std::move(kids), conc(label, "exited"))};
  }

  // --- stepping ---------------------------------------------------------------

  std::vector<JRes> step_state(int si, Thread th) const {
    spend(th);
    const StateInfo& st = m.states[static_cast<size_t>(si)];
    const auto* sd = st.def;
    std::vector<JRes> out;

    for (JRes& ro : process_list(sd->outer, th)) {
      if (ro.tv.k == TvKind::Fire) {  // [SD-FIRE]
        Thread t2 = std::move(ro.th);
        for (const ActionSeq* a : ro.tv.pending) run_actions(t2, *a);
        DerivPtr exit_node;
        if (st.child_comp >= 0) {
          IRes r = exit_comp(st.child_comp, std::move(t2));
          t2 = std::move(r.th);
          exit_node = r.node;
        } else {
          exit_node = mk_deriv(Rule::OrInitNoState, {}, conc(st.path + ".C", "exited"));
        }
        run_actions(t2, sd->exit);
        const std::string& dp = m.states[static_cast<size_t>(ro.tv.dest_state)].path;
        out.push_back({std::move(t2),
                       {TvKind::Fire, ro.tv.dest_state, {}},
                       mk_deriv(Rule::SdFire, {ro.node, exit_node},
                                conc(st.path, ("Fire -> " + dp).c_str()))});
        continue;
      }

      Thread t2 = std::move(ro.th);
      run_actions(t2, sd->during);
      std::vector<std::string> du_sides;
      if (opts.build_conclusions) {
        auto du = action_side(sd->during, "du");
        if (!du.empty()) du_sides.push_back(du);
      }

      for (JRes& ri : process_list(sd->inner, t2)) {
        if (ri.tv.k == TvKind::Fire) {
          const std::string& dp = m.states[static_cast<size_t>(ri.tv.dest_state)].path;
          if (inside(st.path, dp)) {
            // inner fire consumed by the child composition [OR-EXT-FIRE]
            Thread t3 = std::move(ri.th);
            for (const ActionSeq* a : ri.tv.pending) run_actions(t3, *a);
            int ci = st.child_comp;
            int8_t slot = t3.act.slot[static_cast<size_t>(ci)];
            DerivPtr exit_node;
            if (slot > 0) {
              int active = m.comps[static_cast<size_t>(ci)].states[static_cast<size_t>(slot - 1)];
              t3.act.slot[static_cast<size_t>(ci)] = 0;
              IRes r = exit_state(active, std::move(t3));
              t3 = std::move(r.th);
              exit_node = r.node;
            } else {
              exit_node = mk_deriv(Rule::OrInitNoState, {}, conc(st.path + ".C", "exited"));
            }
            for (IRes& ini : init_comp(ci, ri.tv.dest_state, std::move(t3))) {
              DerivPtr c_node = mk_deriv(Rule::OrExtFire, {exit_node, ini.node},
                                         conc(st.path + ".C", "No"));
              out.push_back({std::move(ini.th),
                             {TvKind::No, -1, {}},
                             mk_deriv(Rule::SdNo, {ro.node, ri.node, c_node},
                                      conc(st.path, "No"), du_sides)});
            }
          } else {
            // inner fire leaves the state [OR-EXT-FIRE-OUT] + [SD-INT-FIRE]
            Thread t3 = std::move(ri.th);
            for (const ActionSeq* a : ri.tv.pending) run_actions(t3, *a);
            DerivPtr exit_node;
            if (st.child_comp >= 0) {
              IRes r = exit_comp(st.child_comp, std::move(t3));
              t3 = std::move(r.th);
              exit_node = r.node;
            } else {
              exit_node = mk_deriv(Rule::OrInitNoState, {}, conc(st.path + ".C", "exited"));
            }
            run_actions(t3, sd->exit);
            DerivPtr c_node = mk_deriv(Rule::OrExtFireOut, {exit_node},
                                       conc(st.path + ".C", ("Fire -> " + dp).c_str()));
            out.push_back({std::move(t3),
                           {TvKind::Fire, ri.tv.dest_state, {}},
                           mk_deriv(Rule::SdIntFire, {ro.node, ri.node, c_node},
                                    conc(st.path, ("Fire -> " + dp).c_str()), du_sides)});
          }
          continue;
        }

        // inner produced No/End: the child composition steps
        if (st.child_comp >= 0) {
          for (JRes& rc : step_comp(st.child_comp, ri.th)) {
            if (rc.tv.k == TvKind::Fire) {  // [SD-INT-FIRE]
              Thread t4 = std::move(rc.th);
              for (const ActionSeq* a : rc.tv.pending) run_actions(t4, *a);
              run_actions(t4, sd->exit);
              const std::string& dp = m.states[static_cast<size_t>(rc.tv.dest_state)].path;
              out.push_back({std::move(t4),
                             {TvKind::Fire, rc.tv.dest_state, {}},
                             mk_deriv(Rule::SdIntFire, {ro.node, ri.node, rc.node},
                                      conc(st.path, ("Fire -> " + dp).c_str()), du_sides)});
            } else {
              out.push_back({std::move(rc.th),
                             {TvKind::No, -1, {}},
                             mk_deriv(Rule::SdNo, {ro.node, ri.node, rc.node},
                                      conc(st.path, "No"), du_sides)});
            }
          }
        } else {
          DerivPtr c_node = mk_deriv(Rule::OrInitNoState, {}, conc(st.path + ".C", "No"));
          out.push_back({std::move(ri.th),
                         {TvKind::No, -1, {}},
                         mk_deriv(Rule::SdNo, {ro.node, ri.node, c_node},
                                  conc(st.path, "No"), du_sides)});
        }
      }
    }
    return out;
  }

  std::vector<JRes> step_comp(int ci, Thread th) const {
    spend(th);
    const CompInfo& c = m.comps[static_cast<size_t>(ci)];
    std::string label = c.path.empty() ? "<root>" : c.path;
    int8_t slot = th.act.slot[static_cast<size_t>(ci)];
    std::vector<JRes> out;
    if (c.kind == CompKind::Or) {
      if (slot == 0) {
        return {{std::move(th),
                 {TvKind::No, -1, {}},
                 mk_deriv(Rule::OrInitNoState, {}, conc(label, "No"))}};
      }
      int si = c.states[static_cast<size_t>(slot - 1)];
      for (JRes& r : step_state(si, th)) {
        if (r.tv.k != TvKind::Fire) {
          out.push_back({std::move(r.th), std::move(r.tv),
                         mk_deriv(Rule::OrNo, {r.node}, conc(label, "No"))});
          continue;
        }
        const std::string& dp = m.states[static_cast<size_t>(r.tv.dest_state)].path;
        if (inside(c.path, dp)) {  // [OR-INT-FIRE]
          r.th.act.slot[static_cast<size_t>(ci)] = 0;
          for (IRes& ini : init_comp(ci, r.tv.dest_state, std::move(r.th))) {
            out.push_back({std::move(ini.th),
                           {TvKind::No, -1, {}},
                           mk_deriv(Rule::OrIntFire, {r.node, ini.node}, conc(label, "No"))});
          }
        } else {  // [OR-FIRE]
          r.th.act.slot[static_cast<size_t>(ci)] = 0;
          out.push_back({std::move(r.th), std::move(r.tv),
                         mk_deriv(Rule::OrFire, {r.node},
                                  conc(label, ("Fire -> " + dp).c_str()))});
        }
      }
      return out;
    }
    // [AND]: members step sequentially in design order
    if (slot == 0) {
      return {{std::move(th),
               {TvKind::No, -1, {}},
               mk_deriv(Rule::OrInitNoState, {}, conc(label, "No"))}};
    }
    struct Partial {
      Thread th;
      std::vector<DerivPtr> kids;
    };
    std::vector<Partial> acc;
    acc.push_back({std::move(th), {}});
    for (int si : c.states) {
      std::vector<Partial> next;
      for (Partial& p : acc) {
        for (JRes& r : step_state(si, std::move(p.th))) {
          if (r.tv.k == TvKind::Fire) throw ExecError("fire escaped an and-composition");
          auto kids = p.kids;
          kids.push_back(r.node);
          next.push_back({std::move(r.th), std::move(kids)});
        }
      }
      acc = std::move(next);
    }
    for (Partial& p : acc) {
      out.push_back({std::move(p.th),
                     {TvKind::No, -1, {}},
                     mk_deriv(Rule::AndStep, std::move(p.kids), conc(label, "No"))});
    }
    return out;
  }
};

}  // namespace

SsosEngine::SsosEngine(const Model& m, SsosOptions opts) : m_(m), opts_(opts) {}

SymConfig SsosEngine::initial_config() const {
  SymConfig sc;
  sc.act.slot.assign(m_.comps.size(), 0);
  sc.delta = identity_env(m_);
  return sc;
}

std::vector<Successor> SsosEngine::step(std::optional<int> event, const SymConfig& sc) const {
  Engine eng{m_, opts_, event};
  Thread th{sc.act, sc.delta, {}, {}, opts_.max_rule_apps};
  std::vector<Successor> out;

  bool uninit = sc.act.slot.empty() || sc.act.slot[0] == 0;
  if (uninit) {
    for (IRes& ini : eng.init_comp(0, -1, th)) {
      if (!event.has_value()) {
        out.push_back({std::move(ini.th.act), std::move(ini.th.delta),
                       std::move(ini.th.appended), std::move(ini.th.log), TvKind::No,
                       ini.node, nullptr});
        continue;
      }
      for (JRes& r : eng.step_comp(0, std::move(ini.th))) {
        if (r.tv.k == TvKind::Fire) throw ExecError("fire escaped the root composition");
        out.push_back({std::move(r.th.act), std::move(r.th.delta), std::move(r.th.appended),
                       std::move(r.th.log), r.tv.k, r.node, ini.node});
      }
    }
    return out;
  }
  if (!event.has_value()) {
    // already initialized: nothing to do for the init pseudo-event
    out.push_back({sc.act, sc.delta, {}, {}, TvKind::No, nullptr, nullptr});
    return out;
  }
  for (JRes& r : eng.step_comp(0, std::move(th))) {
    if (r.tv.k == TvKind::Fire) throw ExecError("fire escaped the root composition");
    out.push_back({std::move(r.th.act), std::move(r.th.delta), std::move(r.th.appended),
                   std::move(r.th.log), r.tv.k, r.node, nullptr});
  }
  return out;
}

std::vector<Ptr> extend_pc(const std::vector<Ptr>& pc, const std::vector<Ptr>& appended) {
  std::vector<Ptr> out = pc;
  out.insert(out.end(), appended.begin(), appended.end());
  return out;
}

Ptr conjoin(const std::vector<Ptr>& conjuncts) {
  if (conjuncts.empty()) return sym_true();
  Ptr acc = conjuncts[0];
  for (size_t i = 1; i < conjuncts.size(); ++i) acc = mk_and(acc, conjuncts[i]);
  return acc;
}

}  // namespace sfbmc::sym
