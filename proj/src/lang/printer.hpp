// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "lang/ast.hpp"

namespace sfbmc::lang {

// Renders a program back to .sfi source. parse_model(print_model(p)) is
// structurally identical to p.
std::string print_model(const Program& p);

}  // namespace sfbmc::lang
