// SPDX-License-Identifier: Apache-2.0
//
// sfbmc: bounded invariant checking for textual Stateflow-style programs.
// Subcommands: check (incremental BMC), simulate (concrete traces), derive
// (symbolic transition-system derivation).

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bmc/artifacts.hpp"
#include "lang/parser.hpp"
#include "lang/printer.hpp"
#include "smt/solverfind.hpp"
#include "sts/partition.hpp"

using namespace sfbmc;

namespace {

constexpr int kExitSafe = 0;
constexpr int kExitViolated = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnknown = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

lang::ModelPtr load_model(const std::string& path) {
  auto program = lang::parse_model(read_file(path));
  std::vector<lang::Diagnostic> diags;
  auto model = lang::validate_model(std::move(program), diags);
  if (!diags.empty()) {
    for (const auto& d : diags) {
      std::cerr << path;
      if (d.loc.line) std::cerr << ':' << d.loc.line << ':' << d.loc.col;
      std::cerr << ": error: " << d.message << '\n';
    }
    throw std::runtime_error(std::to_string(diags.size()) + " validation error(s)");
  }
  return model;
}

int run_simulate(const std::string& model_path, const std::string& events_path) {
  auto model = load_model(model_path);
  exec::Interp interp(*model);
  std::vector<int> events;
  std::ifstream in(events_path);
  if (!in) throw std::runtime_error("cannot open " + events_path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    std::string name = line.substr(start);
    if (name[0] == '#') continue;
    int e = model->event_by_name(name);
    if (e < 0) throw std::runtime_error(events_path + ":" + std::to_string(lineno) +
                                        ": unknown event '" + name + "'");
    events.push_back(e);
  }
  auto trace = interp.run_trace(events);
  for (size_t i = 0; i < trace.size(); ++i) {
    nlohmann::json j;
    j["step"] = i;
    j["event"] = trace[i].event ? nlohmann::json(model->event_name(*trace[i].event))
                                : nlohmann::json(nullptr);
    nlohmann::json active = nlohmann::json::array();
    for (int si : trace[i].active) active.push_back(model->states[static_cast<size_t>(si)].path);
    j["activeStates"] = active;
    nlohmann::json vars;
    for (size_t v = 0; v < trace[i].env.size(); ++v) {
      const auto& d = model->var(static_cast<int>(v));
      vars[d.name] = d.sort == lang::Sort::Bool ? nlohmann::json(trace[i].env[v].i != 0)
                                                : nlohmann::json(trace[i].env[v].i);
    }
    j["vars"] = vars;
    std::cout << j.dump() << '\n';
  }
  return kExitSafe;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bounded invariant checking over symbolic executions of "
               "Stateflow-style imperative programs"};
  app.require_subcommand(1);

  std::string model_path, prop_text, prop_file, events_file;
  std::string solver, emit_smt, emit_sts, emit_derivs;
  int kmax = 50;
  double timeout = 60.0;
  bool json_out = false, prune = false, no_incremental = false, push_pop = false;
  bool full_disjunction = false;

  auto* check = app.add_subcommand("check", "run incremental BMC for an invariant property");
  check->add_option("model", model_path, "model file (.sfi)")->required();
  check->add_option("--prop", prop_text, "invariant property expression");
  check->add_option("--prop-file", prop_file, "file holding the property expression");
  check->add_option("--kmax", kmax, "maximum unrolling depth");
  check->add_option("--solver", solver, "solver command line (SMT-LIB v2 on stdin)");
  check->add_option("--timeout", timeout, "per-check-sat timeout, seconds");
  check->add_option("--emit-smt", emit_smt, "write one SMT-LIB script per depth");
  check->add_option("--emit-sts", emit_sts, "write the derived transition system (JSON)");
  check->add_option("--emit-derivations", emit_derivs, "write derivation trees (JSON per transition)");
  check->add_flag("--json", json_out, "machine-readable output");
  check->add_flag("--prune-infeasible", prune, "drop solver-unsat guards during derivation");
  check->add_flag("--no-incremental", no_incremental, "regenerate the full script per depth");
  check->add_flag("--push-pop", push_pop, "probe properties with push/pop instead of assumptions");
  check->add_flag("--full-disjunction", full_disjunction,
                  "assert the whole negated-property disjunction at every depth");

  auto* simulate = app.add_subcommand("simulate", "run the concrete interpreter over an event script");
  simulate->add_option("model", model_path, "model file (.sfi)")->required();
  simulate->add_option("--events", events_file, "event script, one event name per line")->required();
  simulate->add_flag("--json", json_out, "(trace output is JSON lines already)");

  auto* derive = app.add_subcommand("derive", "derive the symbolic transition system");
  derive->add_option("model", model_path, "model file (.sfi)")->required();
  derive->add_option("--emit-sts", emit_sts, "write the transition system (JSON)");
  derive->add_option("--emit-derivations", emit_derivs, "write derivation trees");
  derive->add_option("--solver", solver, "solver command line (for --prune-infeasible)");
  derive->add_flag("--json", json_out, "machine-readable output");
  derive->add_flag("--prune-infeasible", prune, "drop solver-unsat guards during derivation");

  CLI11_PARSE(app, argc, argv);

  try {
    if (simulate->parsed()) return run_simulate(model_path, events_file);

    auto model = load_model(model_path);

    sts::DeriveOptions dopts;
    std::unique_ptr<smt::SolverSession> prune_session;
    if (prune) {
      prune_session =
          std::make_unique<smt::SolverSession>(smt::resolve_solver_command(solver));
      std::ostringstream pre;
      pre << "(set-logic ALL)\n";
      for (size_t v = 0; v < model->var_count(); ++v) {
        const auto& d = model->var(static_cast<int>(v));
        pre << "(declare-const " << smt::data_name(d.name, 0) << ' '
            << (d.sort == lang::Sort::Int ? "Int" : "Bool") << ")\n";
      }
      prune_session->send(pre.str());
      const lang::Model* mp = model.get();
      smt::SolverSession* sp = prune_session.get();
      dopts.feasible = [sp, mp, timeout](const std::vector<sym::Ptr>& guard) {
        if (guard.empty()) return true;
        sp->push();
        sp->send("(assert " + smt::render_sym_term(sym::conjoin(guard), *mp, 0) + ")\n");
        auto v = sp->check_sat(timeout);
        sp->pop();
        return v.k != smt::SolverVerdict::Unsat;
      };
    }

    auto sts = sts::derive_transitions(model, dopts);
    if (!emit_sts.empty()) bmc::emit_sts_file(sts, emit_sts);
    if (!emit_derivs.empty()) bmc::emit_derivations(sts, emit_derivs);

    if (derive->parsed()) {
      if (json_out) {
        std::cout << bmc::sts_to_json(sts).dump(2) << '\n';
      } else {
        std::cout << "control points: " << sts.cps.size() << '\n';
        for (const auto& cp : sts.cps)
          std::cout << "  cp" << cp.index << "  " << sts.cp_text(cp.index) << '\n';
        std::cout << "transitions: " << sts.transitions.size() << '\n';
      }
      return kExitSafe;
    }

    // check
    if (prop_text.empty() && !prop_file.empty()) prop_text = read_file(prop_file);
    if (prop_text.empty()) {
      std::cerr << "error: a property is required (--prop or --prop-file)\n";
      return kExitUsage;
    }
    auto prop = lang::parse_property(prop_text, *model);

    bmc::BmcOptions bopts;
    bopts.kmax = kmax;
    bopts.timeout_s = timeout;
    bopts.solver_cmd = smt::resolve_solver_command(solver);
    bopts.mode = no_incremental ? bmc::SolveMode::Regenerate
                 : push_pop     ? bmc::SolveMode::PushPop
                                : bmc::SolveMode::Incremental;
    bopts.full_disjunction = full_disjunction;
    bopts.emit_smt_dir = emit_smt;

    auto [verdict, report] = bmc::bmc_check(sts, prop, bopts);

    if (json_out) {
      nlohmann::json j;
      j["property"] = prop.source;
      j["verdict"] = verdict.k == bmc::Verdict::Violated    ? "violated"
                     : verdict.k == bmc::Verdict::BoundedSafe ? "bounded-safe"
                                                              : "unknown";
      j["depth"] = verdict.depth;
      if (verdict.k == bmc::Verdict::Violated)
        j["counterexample"] = bmc::counterexample_to_json(verdict.ce, *model);
      if (!verdict.reason.empty()) j["reason"] = verdict.reason;
      j["report"] = bmc::report_to_json(report);
      std::cout << j.dump(2) << '\n';
    } else {
      if (verdict.k == bmc::Verdict::Violated) {
        std::cout << "VIOLATED at depth " << verdict.depth << " (property: " << prop.source
                  << ")\n";
        std::cout << bmc::counterexample_text(verdict.ce, *model);
      } else if (verdict.k == bmc::Verdict::BoundedSafe) {
        std::cout << "BOUNDED-SAFE up to k = " << verdict.depth << " (property: " << prop.source
                  << ")\n";
      } else {
        std::cout << "UNKNOWN at depth " << verdict.depth << ": " << verdict.reason << '\n';
      }
      std::cout << "mode=" << report.mode << " solver='" << report.solver
                << "' transitions=" << report.transitions << " total="
                << report.total_seconds << "s\n";
    }
    return verdict.k == bmc::Verdict::Violated      ? kExitViolated
           : verdict.k == bmc::Verdict::BoundedSafe ? kExitSafe
                                                    : kExitUnknown;
  } catch (const lang::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const lang::PropertyError& e) {
    std::cerr << "property error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const smt::SolverError& e) {
    std::cerr << "solver error: " << e.what() << '\n';
    return kExitUnknown;
  } catch (const bmc::BmcError& e) {
    std::cerr << "bmc error: " << e.what() << '\n';
    return kExitUnknown;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
