// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <string>

#include "sym/ssos.hpp"

namespace sfbmc::sts {

using exec::Activity;
using exec::Env;

// A program control point: an internal configuration of the top-level
// composition, i.e. the set of active states. Index 0 is the uninitialized
// point (no active states).
struct ControlPoint {
  int index = -1;
  Activity act;
  std::vector<int> active;  // sorted state indices
};

// One derived program-level transition, obtained by symbolic execution from
// the fresh configuration (src activity, Δ = g, pc = ⊤).
struct ProgramTransition {
  int index = -1;
  int src = -1;
  int dst = -1;
  int event = -1;  // -1 = initialization pseudo-event
  std::vector<sym::Ptr> guard;        // appended conjuncts, in append order
  sym::SymEnv update;                 // Δ' over the step's base symbols
  std::vector<sym::AssignLog> log;    // executed assignments, in order
  sym::TvKind tv = sym::TvKind::No;
  sym::DerivPtr cert;
};

struct Sts {
  lang::ModelPtr model;
  std::vector<ControlPoint> cps;
  std::vector<ProgramTransition> transitions;
  Env init_env;  // declared initial values (Φ_Δ0)

  const lang::Model& m() const { return *model; }
  std::string cp_text(int cp) const;
  std::vector<int> transitions_from(int cp, int event) const;  // indices, derivation order
};

struct StsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DeriveOptions {
  sym::SsosOptions ssos;
  // when set, transitions whose guard conjunction it rejects are dropped
  std::function<bool(const std::vector<sym::Ptr>&)> feasible;
};

// BFS over reachable control points; one ProgramTransition per SSOS branch.
Sts derive_transitions(lang::ModelPtr model, const DeriveOptions& opts = {});

// The resolved initialization step: guards of init transitions are constant
// under the declared initial values, exactly one must be enabled.
struct ResolvedInit {
  int transition = -1;
  int cp = -1;    // post-init control point
  Env env;        // post-init data values
};
ResolvedInit resolve_init(const Sts& sts);

}  // namespace sfbmc::sts
