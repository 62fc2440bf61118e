// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "lang/model.hpp"

namespace sfbmc::lang {

// An invariant predicate over configurations: a bool condition over the
// program's data variables extended with in(<state path>) activity atoms.
struct InvariantProperty {
  ExprPtr predicate;
  std::string source;
};

// Parses and resolves a property against a validated model. Throws ParseError
// on syntax errors and PropertyError on unknown variables / state paths.
struct PropertyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

InvariantProperty parse_property(const std::string& text, const Model& model);

}  // namespace sfbmc::lang
