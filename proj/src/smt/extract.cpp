// SPDX-License-Identifier: Apache-2.0
#include "smt/extract.hpp"

namespace sfbmc::smt {

Counterexample extract_counterexample(const std::map<std::string, exec::Value>& model,
                                      const sts::Sts& sts,
                                      const lang::InvariantProperty& prop, int k) {
  const lang::Model& m = sts.m();
  auto lookup = [&](const std::string& name) -> exec::Value {
    auto it = model.find(name);
    if (it == model.end()) throw SolverError("model is missing " + name);
    return it->second;
  };

  Counterexample ce;
  ce.depth = k;
  for (int i = 0; i <= k; ++i) {
    CeStep step;
    step.env.reserve(m.var_count());
    for (size_t v = 0; v < m.var_count(); ++v)
      step.env.push_back(lookup(data_name(m.var(static_cast<int>(v)).name, i)));
    for (size_t si = 0; si < m.states.size(); ++si)
      if (lookup(ctrl_name(m.states[si].path, i)).as_bool())
        step.active.push_back(static_cast<int>(si));
    for (const auto& cp : sts.cps) {
      if (cp.active == step.active) {
        step.cp = cp.index;
        break;
      }
    }
    if (step.cp < 0) throw SolverError("model step " + std::to_string(i) +
                                       " does not match any derived control point");
    if (i > 0) {
      int chosen = -1;
      for (size_t e = 0; e < m.event_count(); ++e) {
        if (lookup(event_name(m.event_name(static_cast<int>(e)), i - 1)).as_bool()) {
          if (chosen >= 0) throw SolverError("two events true in one step");
          chosen = static_cast<int>(e);
        }
      }
      if (chosen < 0) throw SolverError("no event true in step " + std::to_string(i - 1));
      step.event = chosen;
    }
    ce.steps.push_back(std::move(step));
  }
  for (int i = 0; i <= k; ++i) {
    if (!exec::eval_property(*prop.predicate, ce.steps[static_cast<size_t>(i)].env,
                             ce.steps[static_cast<size_t>(i)].active)) {
      ce.violated_at = i;
      break;
    }
  }
  if (ce.violated_at < 0)
    throw SolverError("sat model does not violate the property at any step");
  return ce;
}

}  // namespace sfbmc::smt
