// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "sts/sts.hpp"

namespace sfbmc::sts {

// Characteristic formula of a control point: every control boolean appears,
// active states positive, the rest negated. States in declaration order.
std::string phi_or(const Sts& sts, int cp, bool primed = false);

// Implication form of one derived transition:
//   Φ_Or(src) ∧ ev ∧ guard  ⇒  Φ_Or'(dst) ∧ ⋀ v' = Δ'(v)
struct TransitionFormula {
  std::string antecedent;
  std::string consequent;
  std::string text;  // "antecedent => consequent"
};
TransitionFormula phi_transition(const Sts& sts, const ProgramTransition& t);

// Initialization predicate: Φ_Or(∅) ∧ ⋀ v = initial value.
std::string init_formula(const Sts& sts);

}  // namespace sfbmc::sts
