// SPDX-License-Identifier: Apache-2.0
#include "sts/sts.hpp"

#include <deque>
#include <map>
#include <sstream>

#include "sym/interpret.hpp"

namespace sfbmc::sts {

std::string Sts::cp_text(int cp) const {
  const auto& c = cps[static_cast<size_t>(cp)];
  if (c.active.empty()) return "{}";
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < c.active.size(); ++i) {
    if (i) os << ", ";
    os << m().states[static_cast<size_t>(c.active[i])].path;
  }
  os << '}';
  return os.str();
}

std::vector<int> Sts::transitions_from(int cp, int event) const {
  std::vector<int> out;
  for (const auto& t : transitions)
    if (t.src == cp && t.event == event) out.push_back(t.index);
  return out;
}

Sts derive_transitions(lang::ModelPtr model, const DeriveOptions& opts) {
  Sts sts;
  sts.model = model;
  const lang::Model& m = *model;

  exec::Interp interp(m);
  sts.init_env = interp.initial_env();

  sym::SsosEngine engine(m, opts.ssos);

  std::map<Activity, int> seen;
  auto intern = [&](const Activity& act) {
    auto it = seen.find(act);
    if (it != seen.end()) return it->second;
    int idx = static_cast<int>(sts.cps.size());
    seen.emplace(act, idx);
    sts.cps.push_back({idx, act, interp.active_states(act)});
    return idx;
  };

  Activity empty;
  empty.slot.assign(m.comps.size(), 0);
  intern(empty);

  std::deque<int> frontier = {0};
  std::vector<bool> expanded;
  while (!frontier.empty()) {
    int cp = frontier.front();
    frontier.pop_front();
    if (static_cast<size_t>(cp) < expanded.size() && expanded[static_cast<size_t>(cp)]) continue;
    if (static_cast<size_t>(cp) >= expanded.size()) expanded.resize(static_cast<size_t>(cp) + 1);
    expanded[static_cast<size_t>(cp)] = true;

    std::vector<std::optional<int>> events;
    if (cp == 0) {
      events.push_back(std::nullopt);  // initialization pseudo-event
    } else {
      for (size_t e = 0; e < m.event_count(); ++e) events.push_back(static_cast<int>(e));
    }
    for (auto ev : events) {
      sym::SymConfig sc;
      sc.act = sts.cps[static_cast<size_t>(cp)].act;
      sc.delta = sym::identity_env(m);
      auto succs = engine.step(ev, sc);
      for (auto& s : succs) {
        if (opts.feasible && !opts.feasible(s.appended)) continue;
        int dst = intern(s.act);
        if (!(static_cast<size_t>(dst) < expanded.size() && expanded[static_cast<size_t>(dst)]))
          frontier.push_back(dst);
        ProgramTransition t;
        t.index = static_cast<int>(sts.transitions.size());
        t.src = cp;
        t.dst = dst;
        t.event = ev ? *ev : -1;
        t.guard = std::move(s.appended);
        t.update = std::move(s.delta);
        t.log = std::move(s.log);
        t.tv = s.tv;
        t.cert = s.tree;
        sts.transitions.push_back(std::move(t));
      }
    }
  }
  return sts;
}

ResolvedInit resolve_init(const Sts& sts) {
  ResolvedInit r;
  int hits = 0;
  for (const auto& t : sts.transitions) {
    if (t.src != 0 || t.event != -1) continue;
    if (sym::eval_pc(t.guard, sts.init_env)) {
      ++hits;
      r.transition = t.index;
      r.cp = t.dst;
      r.env = sym::beta_interpret(t.update, sts.init_env);
    }
  }
  if (hits != 1)
    throw StsError("initialization is not deterministic under the declared initial values (" +
                   std::to_string(hits) + " enabled init transitions)");
  return r;
}

}  // namespace sfbmc::sts
