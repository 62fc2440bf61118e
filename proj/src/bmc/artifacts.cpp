// SPDX-License-Identifier: Apache-2.0
#include "bmc/artifacts.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace sfbmc::bmc {

json sts_to_json(const sts::Sts& sts) {
  const lang::Model& m = sts.m();
  json j;
  j["program"] = m.program->name;
  j["alphabet"] = m.program->events;
  json vars = json::array();
  for (size_t v = 0; v < m.var_count(); ++v) {
    const auto& d = m.var(static_cast<int>(v));
    vars.push_back({{"name", d.name},
                    {"sort", lang::sort_name(d.sort)},
                    {"init", d.sort == lang::Sort::Int ? json(d.init_int)
                                                       : json(d.init_bool)}});
  }
  j["dataVars"] = vars;
  json cps = json::array();
  for (const auto& cp : sts.cps) {
    json paths = json::array();
    for (int si : cp.active) paths.push_back(m.states[static_cast<size_t>(si)].path);
    cps.push_back({{"index", cp.index}, {"activeStates", paths}});
  }
  j["controlPoints"] = cps;
  j["init"] = sts::init_formula(sts);
  json ts = json::array();
  for (const auto& t : sts.transitions) {
    json guard = json::array();
    for (const auto& g : t.guard) guard.push_back(sym::to_text(g, m));
    json update;
    for (size_t v = 0; v < m.var_count(); ++v)
      update[m.var(static_cast<int>(v)).name] = sym::to_text(t.update[v], m);
    auto f = sts::phi_transition(sts, t);
    ts.push_back({{"index", t.index},
                  {"src", t.src},
                  {"dst", t.dst},
                  {"event", t.event < 0 ? json(nullptr) : json(m.event_name(t.event))},
                  {"guard", guard},
                  {"update", update},
                  {"tv", t.tv == sym::TvKind::Fire ? "Fire" : t.tv == sym::TvKind::End ? "End" : "No"},
                  {"formula", f.text}});
  }
  j["transitions"] = ts;
  return j;
}

json derivation_to_json(const sym::DerivPtr& d) {
  json j;
  j["rule"] = sym::rule_name(d->rule);
  j["conclusion"] = d->conclusion;
  if (!d->sides.empty()) j["sideConditions"] = d->sides;
  json kids = json::array();
  for (const auto& k : d->kids) kids.push_back(derivation_to_json(k));
  j["premises"] = kids;
  return j;
}

json counterexample_to_json(const Counterexample& ce, const lang::Model& m) {
  json j;
  j["depth"] = ce.depth;
  j["violatedAtStep"] = ce.violated_at;
  json steps = json::array();
  for (size_t i = 0; i < ce.steps.size(); ++i) {
    const auto& s = ce.steps[i];
    json vars;
    for (size_t v = 0; v < s.env.size(); ++v) {
      const auto& d = m.var(static_cast<int>(v));
      vars[d.name] = d.sort == lang::Sort::Bool ? json(s.env[v].i != 0) : json(s.env[v].i);
    }
    json active = json::array();
    for (int si : s.active) active.push_back(m.states[static_cast<size_t>(si)].path);
    steps.push_back({{"step", i},
                     {"event", s.event < 0 ? json(nullptr) : json(m.event_name(s.event))},
                     {"activeStates", active},
                     {"vars", vars}});
  }
  j["steps"] = steps;
  return j;
}

json report_to_json(const RunReport& report) {
  json j;
  j["totalSeconds"] = report.total_seconds;
  j["transitions"] = report.transitions;
  j["controlPoints"] = report.control_points;
  j["mode"] = report.mode;
  j["solver"] = report.solver;
  json per = json::array();
  for (const auto& d : report.depths) {
    per.push_back({{"k", d.k},
                   {"verdict", d.verdict == 's'   ? "sat"
                               : d.verdict == 'u' ? "unsat"
                                                  : "unknown"},
                   {"seconds", d.seconds}});
  }
  j["depths"] = per;
  return j;
}

void emit_derivations(const sts::Sts& sts, const std::string& dir) {
  std::filesystem::create_directories(dir);
  const lang::Model& m = sts.m();
  for (const auto& t : sts.transitions) {
    json j;
    j["transition"] = t.index;
    j["src"] = sts.cp_text(t.src);
    j["dst"] = sts.cp_text(t.dst);
    j["event"] = t.event < 0 ? json(nullptr) : json(m.event_name(t.event));
    json guard = json::array();
    for (const auto& g : t.guard) guard.push_back(sym::to_text(g, m));
    j["guard"] = guard;
    j["derivation"] = derivation_to_json(t.cert);
    j["derivationText"] = sym::render_text(t.cert);
    std::ostringstream name;
    name << dir << "/t" << t.index << "_"
         << (t.event < 0 ? std::string("init") : m.event_name(t.event)) << ".json";
    std::ofstream out(name.str());
    out << j.dump(2) << '\n';
  }
}

void emit_sts_file(const sts::Sts& sts, const std::string& path) {
  auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
  std::ofstream out(path);
  out << sts_to_json(sts).dump(2) << '\n';
}

std::string counterexample_text(const Counterexample& ce, const lang::Model& m) {
  std::ostringstream os;
  for (size_t i = 0; i < ce.steps.size(); ++i) {
    const auto& s = ce.steps[i];
    os << "  step " << i;
    if (s.event >= 0) os << "  --" << m.event_name(s.event) << "-->";
    else os << "  (init)";
    os << "  {";
    for (size_t a = 0; a < s.active.size(); ++a) {
      if (a) os << ", ";
      os << m.states[static_cast<size_t>(s.active[a])].path;
    }
    os << "}  ";
    for (size_t v = 0; v < s.env.size(); ++v) {
      if (v) os << ", ";
      const auto& d = m.var(static_cast<int>(v));
      os << d.name << '=';
      if (d.sort == lang::Sort::Bool) os << (s.env[v].i ? "true" : "false");
      else os << s.env[v].i;
    }
    if (static_cast<int>(i) == ce.violated_at) os << "   <-- violation";
    os << '\n';
  }
  return os.str();
}

}  // namespace sfbmc::bmc
