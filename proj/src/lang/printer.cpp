// SPDX-License-Identifier: Apache-2.0
#include "lang/printer.hpp"

#include <sstream>

namespace sfbmc::lang {

namespace {

struct Printer {
  std::ostringstream os;
  int depth = 0;

  void indent() {
    for (int i = 0; i < depth; ++i) os << "  ";
  }

  void actions_inline(const ActionSeq& seq) {
    if (seq.empty()) {
      os << "skip;";
      return;
    }
    for (size_t i = 0; i < seq.size(); ++i) {
      os << seq[i].var << " := " << expr_text(seq[i].rhs.get()) << ";";
      if (i + 1 < seq.size()) os << ' ';
    }
  }

  void braced_actions(const ActionSeq& seq) {
    os << '{';
    for (size_t i = 0; i < seq.size(); ++i) {
      if (i) os << ' ';
      os << seq[i].var << " := " << expr_text(seq[i].rhs.get()) << ';';
    }
    os << '}';
  }

  void transition(const Transition& t) {
    indent();
    if (t.event) os << "on " << *t.event << ' ';
    if (t.cond) os << '[' << expr_text(t.cond.get()) << "] ";
    if (!t.cond_action.empty()) {
      os << "/ ";
      braced_actions(t.cond_action);
      os << ' ';
    }
    os << "-> " << (t.dest.kind == DestKind::End ? std::string("end") : t.dest.text);
    if (!t.trans_action.empty()) {
      os << " / ";
      braced_actions(t.trans_action);
    }
    os << ";\n";
  }

  void state(const StateDef& sd) {
    indent();
    os << "state " << sd.name << " {\n";
    ++depth;
    auto actions_clause = [&](const char* kw, const ActionSeq& seq) {
      if (seq.empty()) return;
      indent();
      os << kw << ": ";
      actions_inline(seq);
      os << '\n';
    };
    actions_clause("entry", sd.entry);
    actions_clause("during", sd.during);
    actions_clause("exit", sd.exit);
    if (!sd.inner.empty()) {
      indent();
      os << "inner {\n";
      ++depth;
      for (const auto& t : sd.inner) transition(t);
      --depth;
      indent();
      os << "}\n";
    }
    if (!sd.outer.empty()) {
      indent();
      os << "outer {\n";
      ++depth;
      for (const auto& t : sd.outer) transition(t);
      --depth;
      indent();
      os << "}\n";
    }
    if (!sd.junctions.empty()) {
      indent();
      os << "junctions {\n";
      ++depth;
      for (const auto& j : sd.junctions) {
        indent();
        os << j.id << ":";
        if (j.list.empty()) {
          os << " ;\n";
        } else {
          os << '\n';
          ++depth;
          for (const auto& t : j.list) transition(t);
          --depth;
        }
      }
      --depth;
      indent();
      os << "}\n";
    }
    if (sd.child) composition(*sd.child);
    --depth;
    indent();
    os << "}\n";
  }

  void composition(const Component& c) {
    indent();
    os << (c.kind == CompKind::Or ? "or" : "and");
    if (!c.label.empty()) os << ' ' << c.label;
    os << " {\n";
    ++depth;
    for (const auto& sd : c.states) state(*sd);
    if (c.kind == CompKind::Or && !c.defaults.empty()) {
      indent();
      os << "transitions {\n";
      ++depth;
      for (const auto& t : c.defaults) transition(t);
      --depth;
      indent();
      os << "}\n";
    }
    --depth;
    indent();
    os << "}\n";
  }
};

}  // namespace

std::string print_model(const Program& p) {
  Printer pr;
  pr.os << "program " << p.name << ";\n";
  if (!p.events.empty()) {
    pr.os << "events ";
    for (size_t i = 0; i < p.events.size(); ++i) {
      if (i) pr.os << ", ";
      pr.os << p.events[i];
    }
    pr.os << ";\n";
  }
  for (const auto& v : p.vars) {
    pr.os << "var " << v.name << ": " << sort_name(v.sort) << " = ";
    if (v.sort == Sort::Int) pr.os << v.init_int;
    else pr.os << (v.init_bool ? "true" : "false");
    pr.os << ";\n";
  }
  pr.composition(*p.root);
  return pr.os.str();
}

}  // namespace sfbmc::lang
