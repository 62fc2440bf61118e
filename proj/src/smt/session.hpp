// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "exec/interp.hpp"

namespace sfbmc::smt {

struct SolverVerdict {
  enum K { Sat, Unsat, Unknown } k = Unknown;
  std::string reason;  // Unknown only
};

struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A solver subprocess speaking SMT-LIB v2 over stdin/stdout. One session per
// verification run; not shareable across threads.
class SolverSession {
 public:
  explicit SolverSession(std::vector<std::string> argv);
  ~SolverSession();
  SolverSession(const SolverSession&) = delete;
  SolverSession& operator=(const SolverSession&) = delete;

  void send(const std::string& text);  // no response expected
  SolverVerdict check_sat(double timeout_s);
  SolverVerdict check_sat_assuming(const std::string& literal, double timeout_s);
  void push();
  void pop();

  // issues (get-value ...) queries, chunked; throws SolverError on missing
  // names or malformed model text
  std::map<std::string, exec::Value> get_values(const std::vector<std::string>& names,
                                                double timeout_s);

  bool alive() const { return pid_ > 0 && !dead_; }
  std::string command_line() const;

 private:
  SolverVerdict read_verdict(double timeout_s);
  std::string read_line(double deadline);
  std::string read_sexpr_text(double deadline);
  void kill_solver();

  std::vector<std::string> argv_;
  int pid_ = -1;
  int in_fd_ = -1;   // write end (solver stdin)
  int out_fd_ = -1;  // read end (solver stdout)
  std::string buf_;
  bool dead_ = false;
};

}  // namespace sfbmc::smt
