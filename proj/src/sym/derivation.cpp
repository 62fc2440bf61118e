// SPDX-License-Identifier: Apache-2.0
#include "sym/derivation.hpp"

#include <sstream>

namespace sfbmc::sym {

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::tFire: return "t-FIRE";
    case Rule::tNotEnabled: return "t-NOT-ENABLED";
    case Rule::tNoFire: return "t-NO-FIRE";
    case Rule::TEmpty: return "T-EMPTY";
    case Rule::TFire: return "T-FIRE";
    case Rule::TNoLast: return "T-NO-LAST";
    case Rule::TNo: return "T-NO";
    case Rule::TFireJF: return "T-FIRE-J-F";
    case Rule::TEnd: return "T-END";
    case Rule::TFireJN: return "T-FIRE-J-N";
    case Rule::SdNo: return "SD-NO";
    case Rule::SdIntFire: return "SD-INT-FIRE";
    case Rule::SdFire: return "SD-FIRE";
    case Rule::SdInit: return "SD-INIT";
    case Rule::SdExit: return "SD-EXIT";
    case Rule::AndStep: return "AND";
    case Rule::AndInit: return "AND-INIT";
    case Rule::AndExit: return "AND-EXIT";
    case Rule::OrExtFire: return "OR-EXT-FIRE";
    case Rule::OrExtFireOut: return "OR-EXT-FIRE-OUT";
    case Rule::OrNo: return "OR-NO";
    case Rule::OrIntFire: return "OR-INT-FIRE";
    case Rule::OrFire: return "OR-FIRE";
    case Rule::OrInitNoState: return "OR-INIT-NO-STATE";
    case Rule::OrInitEmptyP: return "OR-INIT-EMPTY-P";
    case Rule::OrInit: return "OR-INIT";
    case Rule::OrExit: return "OR-EXIT";
  }
  return "?";
}

Arity rule_arity(Rule r) {
  switch (r) {
    case Rule::tFire:
    case Rule::tNotEnabled:
    case Rule::tNoFire:
    case Rule::TEmpty:
    case Rule::OrInitNoState: return {0, 0};
    case Rule::TFire:
    case Rule::TNoLast:
    case Rule::SdInit:
    case Rule::SdExit:
    case Rule::OrExtFireOut:
    case Rule::OrNo:
    case Rule::OrFire:
    case Rule::OrInit:
    case Rule::OrExit: return {1, 1};
    case Rule::TNo:
    case Rule::TFireJF:
    case Rule::TEnd:
    case Rule::SdFire:
    case Rule::OrExtFire:
    case Rule::OrIntFire:
    case Rule::OrInitEmptyP: return {2, 2};
    case Rule::TFireJN:
    case Rule::SdNo:
    case Rule::SdIntFire: return {3, 3};
    case Rule::AndStep:
    case Rule::AndInit:
    case Rule::AndExit: return {1, -1};
  }
  return {0, -1};
}

DerivPtr mk_deriv(Rule r, std::vector<DerivPtr> kids, std::string conclusion,
                  std::vector<std::string> sides) {
  auto d = std::make_shared<Deriv>();
  d->rule = r;
  d->kids = std::move(kids);
  d->conclusion = std::move(conclusion);
  d->sides = std::move(sides);
  return d;
}

bool well_formed(const DerivPtr& d) {
  if (!d) return false;
  Arity a = rule_arity(d->rule);
  int n = static_cast<int>(d->kids.size());
  if (n < a.min || (a.max >= 0 && n > a.max)) return false;
  for (const auto& k : d->kids)
    if (!well_formed(k)) return false;
  return true;
}

namespace {

void render(std::ostringstream& os, const DerivPtr& d, int depth) {
  for (const auto& k : d->kids) render(os, k, depth + 1);
  for (int i = 0; i < depth; ++i) os << "  ";
  os << '[' << rule_name(d->rule) << "] " << d->conclusion;
  if (!d->sides.empty()) {
    os << "   {";
    for (size_t i = 0; i < d->sides.size(); ++i) {
      if (i) os << "; ";
      os << d->sides[i];
    }
    os << '}';
  }
  os << '\n';
}

}  // namespace

std::string render_text(const DerivPtr& d) {
  std::ostringstream os;
  render(os, d, 0);
  return os.str();
}

}  // namespace sfbmc::sym
