// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>

#include "smt/encode.hpp"
#include "smt/session.hpp"

namespace sfbmc::smt {

struct CeStep {
  int event = -1;  // -1 for step 0 (initialization)
  exec::Env env;
  int cp = -1;
  std::vector<int> active;
};

struct Counterexample {
  int depth = 0;
  std::vector<CeStep> steps;  // depth + 1 entries
  int violated_at = -1;       // earliest violating step
};

// Decodes a sat model into a counterexample trace: per-step valuations,
// active control point, triggering events, and the earliest violating step.
Counterexample extract_counterexample(const std::map<std::string, exec::Value>& model,
                                      const sts::Sts& sts,
                                      const lang::InvariantProperty& prop, int k);

}  // namespace sfbmc::smt
