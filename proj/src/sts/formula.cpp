// SPDX-License-Identifier: Apache-2.0
#include "sts/formula.hpp"

#include <algorithm>
#include <sstream>

namespace sfbmc::sts {

std::string phi_or(const Sts& sts, int cp, bool primed) {
  const lang::Model& m = sts.m();
  const auto& active = sts.cps[static_cast<size_t>(cp)].active;
  std::ostringstream os;
  const char* mark = primed ? "'" : "";
  for (size_t si = 0; si < m.states.size(); ++si) {
    if (si) os << " && ";
    bool on = std::binary_search(active.begin(), active.end(), static_cast<int>(si));
    if (!on) os << '!';
    os << m.states[si].path << mark;
  }
  return os.str();
}

TransitionFormula phi_transition(const Sts& sts, const ProgramTransition& t) {
  const lang::Model& m = sts.m();
  TransitionFormula f;
  std::ostringstream ante;
  ante << phi_or(sts, t.src);
  if (t.event >= 0) ante << " && ev:" << m.event_name(t.event);
  for (const auto& g : t.guard) ante << " && " << sym::to_text(g, m);
  f.antecedent = ante.str();

  std::ostringstream cons;
  cons << phi_or(sts, t.dst, true);
  for (size_t v = 0; v < m.var_count(); ++v) {
    cons << " && " << m.var(static_cast<int>(v)).name << "' = "
         << sym::to_text(t.update[v], m);
  }
  f.consequent = cons.str();
  f.text = "(" + f.antecedent + ") => (" + f.consequent + ")";
  return f;
}

std::string init_formula(const Sts& sts) {
  const lang::Model& m = sts.m();
  std::ostringstream os;
  os << phi_or(sts, 0);
  for (size_t v = 0; v < m.var_count(); ++v) {
    const auto& d = m.var(static_cast<int>(v));
    os << " && " << d.name << " == ";
    if (d.sort == lang::Sort::Bool) os << (sts.init_env[v].i ? "true" : "false");
    else os << sts.init_env[v].i;
  }
  return os.str();
}

}  // namespace sfbmc::sts
