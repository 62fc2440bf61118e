// SPDX-License-Identifier: Apache-2.0
#include "bmc/check.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "smt/solverfind.hpp"

namespace sfbmc::bmc {

using smt::BmcEncoder;
using smt::SolverVerdict;

namespace {

double now_s() {
  using namespace std::chrono;
  return duration<double>(steady_clock::now().time_since_epoch()).count();
}

std::string value_text(const lang::Model& m, int var, const exec::Value& v) {
  if (m.var(var).sort == lang::Sort::Bool) return v.i ? "true" : "false";
  return std::to_string(v.i);
}

std::string emit_script(const std::string& dir, const smt::SmtScript& script) {
  std::filesystem::create_directories(dir);
  std::string path = dir + "/bmc_k" + std::to_string(script.depth) + ".smt2";
  std::ofstream out(path);
  out << script.text;
  return path;
}

}  // namespace

bool replay_validate(const Counterexample& ce, const lang::Model& m,
                     const lang::InvariantProperty& prop, std::string* diff) {
  exec::Interp interp(m);
  std::vector<int> events;
  for (size_t i = 1; i < ce.steps.size(); ++i) events.push_back(ce.steps[i].event);
  exec::ConcreteTrace trace;
  try {
    trace = interp.run_trace(events);
  } catch (const exec::ExecError& e) {
    if (diff) *diff = std::string("replay failed: ") + e.what();
    return false;
  }
  if (trace.size() != ce.steps.size()) {
    if (diff) *diff = "trace length mismatch";
    return false;
  }
  for (size_t i = 0; i < trace.size(); ++i) {
    if (trace[i].active != ce.steps[i].active) {
      if (diff) *diff = "step " + std::to_string(i) + ": active-state mismatch";
      return false;
    }
    for (size_t v = 0; v < trace[i].env.size(); ++v) {
      if (!(trace[i].env[v] == ce.steps[i].env[v])) {
        if (diff)
          *diff = "step " + std::to_string(i) + ": " + m.var(static_cast<int>(v)).name +
                  " = " + value_text(m, static_cast<int>(v), trace[i].env[v]) +
                  " (concrete) vs " + value_text(m, static_cast<int>(v), ce.steps[i].env[v]) +
                  " (model)";
        return false;
      }
    }
  }
  // the violation must reproduce at the reported step and at no earlier one
  for (size_t i = 0; i < trace.size(); ++i) {
    bool holds = exec::eval_property(*prop.predicate, trace[i].env, trace[i].active);
    bool expect_violation = static_cast<int>(i) == ce.violated_at;
    if (!holds && static_cast<int>(i) < ce.violated_at) {
      if (diff) *diff = "property violated earlier than reported (step " + std::to_string(i) + ")";
      return false;
    }
    if (expect_violation && holds) {
      if (diff) *diff = "property holds at the reported violation step";
      return false;
    }
  }
  return true;
}

std::pair<Verdict, RunReport> bmc_check(const sts::Sts& sts,
                                        const lang::InvariantProperty& prop,
                                        const BmcOptions& opts) {
  BmcEncoder enc(sts, prop);
  RunReport report;
  report.transitions = static_cast<int>(sts.transitions.size());
  report.control_points = static_cast<int>(sts.cps.size());
  report.mode = opts.mode == SolveMode::Incremental ? "incremental"
                : opts.mode == SolveMode::PushPop   ? "push-pop"
                                                    : "regenerate";
  double t_start = now_s();

  auto finish = [&](Verdict v) {
    report.total_seconds = now_s() - t_start;
    return std::make_pair(std::move(v), report);
  };

  const std::string prelude = smt::default_solver_prelude(opts.solver_cmd);
  std::unique_ptr<smt::SolverSession> session;
  auto ensure_session = [&]() {
    if (!session) {
      session = std::make_unique<smt::SolverSession>(opts.solver_cmd);
      report.solver = session->command_line();
      session->send(prelude);
      session->send(enc.preamble());
    }
  };

  for (int k = 0; k <= opts.kmax; ++k) {
    double t0 = now_s();
    if (!opts.emit_smt_dir.empty()) emit_script(opts.emit_smt_dir, enc.full_script(k));

    SolverVerdict v;
    if (opts.mode == SolveMode::Regenerate) {
      session = std::make_unique<smt::SolverSession>(opts.solver_cmd);
      report.solver = session->command_line();
      std::ostringstream body;
      body << prelude << enc.preamble();
      for (int i = 1; i <= k; ++i) body << enc.step_chunk(i);
      body << (opts.full_disjunction ? enc.property_disjunction(k) : enc.property_probe(k));
      session->send(body.str());
      v = session->check_sat(opts.timeout_s);
    } else {
      ensure_session();
      if (k > 0) session->send(enc.step_chunk(k));
      if (opts.mode == SolveMode::PushPop) {
        session->push();
        session->send(opts.full_disjunction ? enc.property_disjunction(k)
                                            : enc.property_probe(k));
        v = session->check_sat(opts.timeout_s);
        if (v.k == SolverVerdict::Unsat) session->pop();
      } else {
        session->send(opts.full_disjunction ? enc.property_activation_disjunction(k)
                                            : enc.property_activation(k));
        v = session->check_sat_assuming(smt::activation_name(k), opts.timeout_s);
        if (v.k == SolverVerdict::Unsat)
          session->send("(assert (not " + smt::activation_name(k) + "))\n");
      }
    }
    double dt = now_s() - t0;
    report.depths.push_back(
        {k, v.k == SolverVerdict::Sat ? 's' : v.k == SolverVerdict::Unsat ? 'u' : '?', dt});

    if (v.k == SolverVerdict::Unknown) {
      Verdict out;
      out.k = Verdict::Unknown;
      out.depth = k;
      out.reason = v.reason;
      return finish(std::move(out));
    }
    if (v.k == SolverVerdict::Sat) {
      auto values = session->get_values(enc.value_names(k), opts.timeout_s);
      Counterexample ce = smt::extract_counterexample(values, sts, prop, k);
      std::string diff;
      if (!replay_validate(ce, sts.m(), prop, &diff)) {
        std::string dir = opts.emit_smt_dir.empty()
                              ? std::filesystem::temp_directory_path().string()
                              : opts.emit_smt_dir;
        std::string path = emit_script(dir, enc.full_script(k));
        throw BmcError("counterexample failed concrete replay (" + diff +
                       "); offending script: " + path);
      }
      Verdict out;
      out.k = Verdict::Violated;
      out.depth = k;
      out.ce = std::move(ce);
      return finish(std::move(out));
    }
  }
  Verdict out;
  out.k = Verdict::BoundedSafe;
  out.depth = opts.kmax;
  return finish(std::move(out));
}

}  // namespace sfbmc::bmc
