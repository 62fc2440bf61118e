// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "lang/model.hpp"

namespace sfbmc::exec {

using lang::Model;
using lang::Sort;

struct Value {
  Sort sort = Sort::Int;
  long long i = 0;  // bools stored 0/1

  bool as_bool() const { return i != 0; }
  bool operator==(const Value& o) const { return sort == o.sort && i == o.i; }
};

using Env = std::vector<Value>;  // indexed by variable index

struct ExecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Activity: per composition, the active member. Or: ordinal+1 of the active
// state (0 = none). And: 1 when active. Doubles as the control-point key.
struct Activity {
  std::vector<int8_t> slot;
  bool operator==(const Activity& o) const { return slot == o.slot; }
  bool operator<(const Activity& o) const { return slot < o.slot; }
};

struct TraceEntry {
  std::optional<int> event;  // none for the post-initialization entry
  Env env;
  std::vector<int> active;  // sorted active state indices
};
using ConcreteTrace = std::vector<TraceEntry>;

struct ExecOptions {
  int max_rule_apps = 100000;  // per-step divergence guard
};

// Pure condition/action evaluation (the action-language judgments).
bool eval_cond(const lang::Expr& c, const Env& env);
Value eval_expr(const lang::Expr& e, const Env& env);
Env exec_action(const lang::ActionSeq& a, const Env& env);

// Property evaluation: like eval_cond but in(<path>) atoms consult the
// active-state set (sorted indices).
bool eval_property(const lang::Expr& p, const Env& env, const std::vector<int>& active);

class Interp {
 public:
  explicit Interp(const Model& m, ExecOptions opts = {});

  Env initial_env() const;
  Activity empty_activity() const;
  bool initialized(const Activity& act) const;
  std::vector<int> active_states(const Activity& act) const;

  // One SOS step. An uninitialized configuration is first initialized (the
  // init rules applied with the empty event); a present event is then
  // processed. Returns the written variable indices of the step.
  std::vector<int> step(std::optional<int> event, Activity& act, Env& env) const;

  ConcreteTrace run_trace(const std::vector<int>& events) const;
  ConcreteTrace run_trace(const std::vector<int>& events, Env initial) const;

  const Model& model() const { return m_; }

 private:
  const Model& m_;
  ExecOptions opts_;
};

}  // namespace sfbmc::exec
