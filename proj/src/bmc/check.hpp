// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "smt/extract.hpp"
#include "smt/session.hpp"

namespace sfbmc::bmc {

using smt::Counterexample;

struct Verdict {
  enum K { Violated, BoundedSafe, Unknown } k = Unknown;
  int depth = -1;  // violation depth / kMax / depth where Unknown hit
  Counterexample ce;
  std::string reason;
};

enum class SolveMode { Incremental, PushPop, Regenerate };

struct BmcOptions {
  int kmax = 50;
  double timeout_s = 60.0;  // per check-sat
  std::vector<std::string> solver_cmd;
  SolveMode mode = SolveMode::Incremental;
  bool full_disjunction = false;
  std::string emit_smt_dir;  // write one script per depth when set
};

struct DepthReport {
  int k = 0;
  char verdict = '?';  // 's' sat, 'u' unsat, '?' unknown
  double seconds = 0;
};

struct RunReport {
  std::vector<DepthReport> depths;
  double total_seconds = 0;
  int transitions = 0;
  int control_points = 0;
  std::string mode;
  std::string solver;
};

struct BmcError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Incremental bounded invariant check: unroll one transition-relation
// instance per depth, probe the negated property, extract + replay-validate
// counterexamples. Replay failure is a hard error (an encoding bug), reported
// with the offending script path.
std::pair<Verdict, RunReport> bmc_check(const sts::Sts& sts,
                                        const lang::InvariantProperty& prop,
                                        const BmcOptions& opts);

// Replays a counterexample on the concrete interpreter; returns false and a
// first-divergence diff when the trace does not reproduce.
bool replay_validate(const Counterexample& ce, const lang::Model& m,
                     const lang::InvariantProperty& prop, std::string* diff = nullptr);

}  // namespace sfbmc::bmc
