// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <string>
#include <vector>

namespace sfbmc::sym {

// The 27 rule identifiers of the symbolic semantics, grouped as: transitions,
// transition lists, state definitions, and-compositions, or-compositions.
enum class Rule {
  tFire,
  tNotEnabled,
  tNoFire,
  TEmpty,
  TFire,
  TNoLast,
  TNo,
  TFireJF,
  TEnd,
  TFireJN,
  SdNo,
  SdIntFire,
  SdFire,
  SdInit,
  SdExit,
  AndStep,
  AndInit,
  AndExit,
  OrExtFire,
  OrExtFireOut,
  OrNo,
  OrIntFire,
  OrFire,
  OrInitNoState,
  OrInitEmptyP,
  OrInit,
  OrExit,
};

constexpr int kRuleCount = 27;

const char* rule_name(Rule r);

// premise arity: fixed (min == max) or variadic (max < 0)
struct Arity {
  int min;
  int max;  // -1 = unbounded
};
Arity rule_arity(Rule r);

struct Deriv;
using DerivPtr = std::shared_ptr<const Deriv>;

struct Deriv {
  Rule rule;
  std::vector<DerivPtr> kids;
  std::string conclusion;          // compact judgment summary
  std::vector<std::string> sides;  // side conditions / action and condition axioms
};

DerivPtr mk_deriv(Rule r, std::vector<DerivPtr> kids, std::string conclusion,
                  std::vector<std::string> sides = {});

// true when every node names a known rule with a matching child count
bool well_formed(const DerivPtr& d);

// children first, conclusion last
std::string render_text(const DerivPtr& d);

}  // namespace sfbmc::sym
