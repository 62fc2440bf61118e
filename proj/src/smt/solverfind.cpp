// SPDX-License-Identifier: Apache-2.0
#include "smt/solverfind.hpp"

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "smt/session.hpp"

#ifndef SFBMC_DEFAULT_Z3JS
#define SFBMC_DEFAULT_Z3JS ""
#endif

namespace sfbmc::smt {

namespace {

bool on_path(const std::string& exe) {
  const char* path = std::getenv("PATH");
  if (!path) return false;
  std::stringstream ss(path);
  std::string dir;
  while (std::getline(ss, dir, ':')) {
    if (dir.empty()) continue;
    std::filesystem::path p = std::filesystem::path(dir) / exe;
    if (::access(p.c_str(), X_OK) == 0) return true;
  }
  return false;
}

}  // namespace

std::vector<std::string> split_command(const std::string& cmdline) {
  std::vector<std::string> out;
  std::stringstream ss(cmdline);
  std::string word;
  while (ss >> word) out.push_back(word);
  return out;
}

std::string default_solver_prelude(const std::vector<std::string>& argv) {
  for (const auto& a : argv) {
    std::string base = std::filesystem::path(a).filename().string();
    if (base == "z3" || base == "z3.exe" || base == "z3smt.js")
      return "(set-option :smt.arith.solver 2)\n";
  }
  return {};
}

std::vector<std::string> resolve_solver_command(const std::string& override_cmdline) {
  if (!override_cmdline.empty()) return split_command(override_cmdline);
  if (const char* env = std::getenv("SFBMC_SOLVER"); env && *env) return split_command(env);
  if (on_path("z3")) return {"z3", "-in"};
  std::string wrapper;
  if (const char* js = std::getenv("SFBMC_Z3JS"); js && *js) wrapper = js;
  else wrapper = SFBMC_DEFAULT_Z3JS;
  if (!wrapper.empty() && std::filesystem::exists(wrapper) && on_path("node"))
    return {"node", wrapper};
  throw SolverError(
      "no SMT solver found: install z3, set SFBMC_SOLVER, or provide the bundled "
      "wasm solver (node + tools/z3smt.js)");
}

}  // namespace sfbmc::smt
