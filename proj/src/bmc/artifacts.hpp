// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <json.hpp>

#include "bmc/check.hpp"
#include "sts/formula.hpp"

namespace sfbmc::bmc {

using nlohmann::json;

json sts_to_json(const sts::Sts& sts);
json derivation_to_json(const sym::DerivPtr& d);
json counterexample_to_json(const Counterexample& ce, const lang::Model& m);
json report_to_json(const RunReport& report);

// one JSON file per derived program transition
void emit_derivations(const sts::Sts& sts, const std::string& dir);
void emit_sts_file(const sts::Sts& sts, const std::string& path);

// counterexample trace rendered for humans
std::string counterexample_text(const Counterexample& ce, const lang::Model& m);

}  // namespace sfbmc::bmc
