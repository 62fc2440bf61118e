// SPDX-License-Identifier: Apache-2.0
#include "sts/partition.hpp"

#include <set>
#include <sstream>

#include "smt/encode.hpp"

namespace sfbmc::sts {

PartitionReport check_partition(const Sts& sts, smt::SolverSession& session, double timeout_s) {
  const lang::Model& m = sts.m();
  PartitionReport report;

  bool linear = true;
  for (const auto& t : sts.transitions)
    for (const auto& g : t.guard) linear = linear && sym::is_linear(g);
  std::ostringstream pre;
  pre << "(set-logic " << (linear ? "QF_LIA" : "QF_NIA") << ")\n";
  for (size_t v = 0; v < m.var_count(); ++v) {
    const auto& d = m.var(static_cast<int>(v));
    pre << "(declare-const " << smt::data_name(d.name, 0) << ' '
        << (d.sort == lang::Sort::Int ? "Int" : "Bool") << ")\n";
  }
  session.send(pre.str());

  std::set<std::pair<int, int>> groups;
  for (const auto& t : sts.transitions) groups.insert({t.src, t.event});

  for (auto [cp, event] : groups) {
    std::vector<int> ts = sts.transitions_from(cp, event);
    std::vector<std::string> terms;
    terms.reserve(ts.size());
    for (int ti : ts)
      terms.push_back(
          smt::render_sym_term(sym::conjoin(sts.transitions[static_cast<size_t>(ti)].guard), m, 0));

    for (size_t a = 0; a < ts.size(); ++a) {
      for (size_t b = a + 1; b < ts.size(); ++b) {
        ++report.obligations;
        session.push();
        session.send("(assert (and " + terms[a] + ' ' + terms[b] + "))\n");
        auto v = session.check_sat(timeout_s);
        session.pop();
        if (v.k != smt::SolverVerdict::Unsat) {
          report.ok = false;
          report.issues.push_back({cp, event, false, ts[a], ts[b], v});
        }
      }
    }
    ++report.obligations;
    session.push();
    std::ostringstream cov;
    cov << "(assert (not (or";
    for (const auto& t : terms) cov << ' ' << t;
    cov << ")))\n";
    session.send(cov.str());
    auto v = session.check_sat(timeout_s);
    session.pop();
    if (v.k != smt::SolverVerdict::Unsat) {
      report.ok = false;
      report.issues.push_back({cp, event, true, -1, -1, v});
    }
  }
  return report;
}

}  // namespace sfbmc::sts
