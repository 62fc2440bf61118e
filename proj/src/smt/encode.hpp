// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "lang/property.hpp"
#include "sts/sts.hpp"

namespace sfbmc::smt {

// SSA step-variable naming. Data: <name>__<i> and <name>__<i>_<j>; control
// booleans st.<path>__<i>; event booleans ev.<name>__<i>; property activation
// literals act.<i>. Language identifiers cannot contain '__' or '.', so the
// scheme is injective.
std::string data_name(const std::string& var, int step);
std::string temp_name(const std::string& var, int step, int sub);
std::string ctrl_name(const std::string& path, int step);
std::string event_name(const std::string& ev, int step);
std::string activation_name(int step);

struct SmtScript {
  std::string text;  // standalone: set-logic ... (check-sat)
  std::string logic;
  int depth = 0;
};

// Renders a symbolic expression as an SMT-LIB term with every symbol mapped
// to its step-indexed instance.
std::string render_sym_term(const sym::Ptr& e, const lang::Model& m, int step);

// Incremental/whole-script builder for the bounded invariant query. Step 0 is
// the post-initialization configuration (the init transition is resolved by
// constant evaluation); each later step instantiates the transition relation
// in implication form with SSA-lowered update chains and an exactly-one-event
// constraint.
class BmcEncoder {
 public:
  BmcEncoder(const sts::Sts& sts, const lang::InvariantProperty& prop);

  const std::string& logic() const { return logic_; }
  std::string preamble() const;           // set-logic, step-0 decls, init asserts
  std::string step_chunk(int i) const;    // instance (i-1 -> i), i >= 1
  std::string not_prop_at(int i) const;   // (not φ̂(i)) as a term
  std::string property_probe(int i) const;          // single-step assert
  std::string property_disjunction(int k) const;    // assert of ⋁_{i<=k} ¬φ̂(i)
  std::string property_activation(int i) const;     // activation-literal form
  std::string property_activation_disjunction(int k) const;
  std::vector<std::string> value_names(int k) const;

  // Eq.-5-shaped standalone query at depth k (no incremental machinery).
  SmtScript full_script(int k) const;

 private:
  std::string render_guard(const sym::Ptr& e, int step) const;
  std::string render_lang(const lang::Expr& e,
                          const std::vector<std::string>& names) const;
  void transition_clause(std::string& out, const sts::ProgramTransition& t, int src_step,
                         int& temp_counter, std::vector<std::string>& decls) const;

  const sts::Sts& sts_;
  const lang::Model& m_;
  lang::InvariantProperty prop_;
  sts::ResolvedInit init_;
  std::string logic_;
  std::vector<int> step_transitions_;  // non-init transition indices
};

// The spec-level one-shot operation.
SmtScript encode_bmc_query(const sts::Sts& sts, const lang::InvariantProperty& prop, int k);

}  // namespace sfbmc::smt
