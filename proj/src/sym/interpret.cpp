// SPDX-License-Identifier: Apache-2.0
#include "sym/interpret.hpp"

#include <sstream>

namespace sfbmc::sym {

using exec::Activity;
using exec::Interp;
using exec::Value;

Env beta_interpret(const SymEnv& delta, const Env& d0) {
  Env out;
  out.reserve(delta.size());
  for (const auto& e : delta) out.push_back(eval(e, d0));
  return out;
}

bool eval_pc(const std::vector<Ptr>& conjuncts, const Env& d0) {
  for (const auto& c : conjuncts)
    if (!eval(c, d0).as_bool()) return false;
  return true;
}

namespace {

std::string env_text(const lang::Model& m, const Env& env) {
  std::ostringstream os;
  for (size_t i = 0; i < env.size(); ++i) {
    if (i) os << ", ";
    os << m.var(static_cast<int>(i)).name << "=";
    if (env[i].sort == lang::Sort::Bool) os << (env[i].i ? "true" : "false");
    else os << env[i].i;
  }
  return os.str();
}

}  // namespace

SimReport check_simulation(const lang::Model& m, const std::vector<int>& events,
                           const Env& d0, const SsosOptions& opts) {
  Interp interp(m);
  SsosEngine engine(m, opts);

  Activity cact;
  cact.slot.assign(m.comps.size(), 0);
  Env cenv = d0;

  SymConfig sc = engine.initial_config();

  auto compare_step = [&](std::optional<int> ev, int step_no) -> SimReport {
    auto succs = engine.step(ev, sc);
    const Successor* chosen = nullptr;
    int hits = 0;
    for (const auto& s : succs) {
      if (eval_pc(s.appended, d0)) {
        ++hits;
        chosen = &s;
      }
    }
    if (hits != 1) {
      SimReport r;
      r.ok = false;
      r.step = step_no;
      r.rule = chosen && chosen->tree ? rule_name(chosen->tree->rule) : "-";
      r.message = "pc-selected successors: " + std::to_string(hits) + " (want exactly 1)";
      return r;
    }
    interp.step(ev, cact, cenv);
    if (!(chosen->act == cact)) {
      SimReport r;
      r.ok = false;
      r.step = step_no;
      r.rule = chosen->tree ? rule_name(chosen->tree->rule) : "-";
      r.message = "activity mismatch";
      return r;
    }
    Env beta = beta_interpret(chosen->delta, d0);
    if (beta != cenv) {
      SimReport r;
      r.ok = false;
      r.step = step_no;
      r.rule = chosen->tree ? rule_name(chosen->tree->rule) : "-";
      r.message = "environment mismatch: beta(Delta)=" + env_text(m, beta) +
                  " concrete=" + env_text(m, cenv);
      return r;
    }
    sc.pc = extend_pc(sc.pc, chosen->appended);
    sc.delta = chosen->delta;
    sc.act = chosen->act;
    return {};
  };

  SimReport r = compare_step(std::nullopt, 0);
  if (!r.ok) return r;
  int n = 1;
  for (int ev : events) {
    r = compare_step(ev, n++);
    if (!r.ok) return r;
  }
  return {};
}

}  // namespace sfbmc::sym
