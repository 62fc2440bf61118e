// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

namespace sfbmc::smt {

// Resolves the solver command line, in order: explicit override (whitespace
// split), $SFBMC_SOLVER, `z3 -in` when z3 is on PATH, then the bundled WASM
// z3 via `node tools/z3smt.js` ($SFBMC_Z3JS overrides the script location).
// Throws SolverError when nothing is available.
std::vector<std::string> resolve_solver_command(const std::string& override_cmdline = {});

std::vector<std::string> split_command(const std::string& cmdline);

// Backend-specific session prelude. For z3 (native or the bundled wasm build)
// this selects the legacy simplex core, which is dramatically faster on
// incremental integer BMC stacks; empty for unrecognized solvers.
std::string default_solver_prelude(const std::vector<std::string>& argv);

}  // namespace sfbmc::smt
