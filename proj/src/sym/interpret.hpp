// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "sym/ssos.hpp"

namespace sfbmc::sym {

using exec::Env;

// β: interprets a symbolic environment in a concrete one (symbols read from
// D0 via the inverse bijection).
Env beta_interpret(const SymEnv& delta, const Env& d0);

// ℬ on a conjunct list: the boolean value of the path condition under D0.
bool eval_pc(const std::vector<Ptr>& conjuncts, const Env& d0);

struct SimReport {
  bool ok = true;
  int step = -1;            // first diverging step (0 = initialization)
  std::string rule;         // top rule of the selected symbolic derivation
  std::string message;
};

// Differential check of the two simulation directions: runs the concrete
// interpreter and the symbolic engine side by side from (p, events, d0).
// At every step exactly one symbolic successor's appended conjunct must hold
// under d0, and its activity and β-interpreted Δ must match the concrete
// configuration.
SimReport check_simulation(const lang::Model& m, const std::vector<int>& events,
                           const Env& d0, const SsosOptions& opts = {});

}  // namespace sfbmc::sym
