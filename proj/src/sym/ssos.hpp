// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "exec/interp.hpp"
#include "sym/derivation.hpp"
#include "sym/expr.hpp"

namespace sfbmc::sym {

using exec::Activity;

enum class TvKind { Fire, No, End };

// One executed assignment, in execution order. `composed` is the right-hand
// side after substitution through the Δ in effect at execution time, i.e. an
// expression over the step's base symbols.
struct AssignLog {
  int var;
  const lang::Assign* src;
  Ptr composed;
};

struct SymConfig {
  Activity act;
  SymEnv delta;
  std::vector<Ptr> pc;  // ordered conjuncts; empty = ⊤
};

struct Successor {
  Activity act;
  SymEnv delta;
  std::vector<Ptr> appended;  // conjuncts this step added (pc_k^{k+1} pieces)
  std::vector<AssignLog> log;
  TvKind tv = TvKind::No;
  DerivPtr tree;             // derivation of the step (or of the init when pure init)
  DerivPtr init_tree;        // set when an uninitialized config was initialized first
};

struct SsosOptions {
  int max_rule_apps = 100000;
  bool build_conclusions = true;
  // fault-injection hook used by the differential tests: append c instead of
  // ¬c in the no-fire rule
  bool invert_no_fire_conjunct = false;
};

class SsosEngine {
 public:
  explicit SsosEngine(const lang::Model& m, SsosOptions opts = {});

  SymConfig initial_config() const;  // uninitialized root, Δ0 = g, pc0 = ⊤

  // All feasible successors of one step. An uninitialized configuration is
  // initialized first (with the given event threaded through the init rules);
  // event == nullopt performs initialization only.
  std::vector<Successor> step(std::optional<int> event, const SymConfig& sc) const;

  const lang::Model& model() const { return m_; }

 private:
  const lang::Model& m_;
  SsosOptions opts_;
};

// pc' of a successor: base pc with the appended conjuncts.
std::vector<Ptr> extend_pc(const std::vector<Ptr>& pc, const std::vector<Ptr>& appended);

// conjunction of a conjunct list (⊤ when empty)
Ptr conjoin(const std::vector<Ptr>& conjuncts);

}  // namespace sfbmc::sym
