// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "smt/session.hpp"
#include "sts/sts.hpp"

namespace sfbmc::sts {

// Soundness obligations for the implication-form next-state relation: per
// (control point, event) the derived guards must be pairwise unsatisfiable
// and their disjunction valid.
struct PartitionIssue {
  int cp = -1;
  int event = -1;  // -1 = init pseudo-event
  bool coverage = false;  // false = pairwise overlap
  int t1 = -1, t2 = -1;   // offending pair (pairwise case)
  smt::SolverVerdict verdict;
};

struct PartitionReport {
  bool ok = true;
  int obligations = 0;
  std::vector<PartitionIssue> issues;  // includes Unknown verdicts
};

PartitionReport check_partition(const Sts& sts, smt::SolverSession& session,
                                double timeout_s = 60.0);

}  // namespace sfbmc::sts
