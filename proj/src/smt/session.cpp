// SPDX-License-Identifier: Apache-2.0
#include "smt/session.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstring>

#include "smt/sexpr.hpp"

namespace sfbmc::smt {

namespace {

double now_s() {
  using namespace std::chrono;
  return duration<double>(steady_clock::now().time_since_epoch()).count();
}

}  // namespace

SolverSession::SolverSession(std::vector<std::string> argv) : argv_(std::move(argv)) {
  if (argv_.empty()) throw SolverError("no solver command configured");
  int to_child[2], from_child[2];
  if (pipe(to_child) != 0 || pipe(from_child) != 0)
    throw SolverError("pipe() failed");
  pid_ = fork();
  if (pid_ < 0) throw SolverError("fork() failed");
  if (pid_ == 0) {
    dup2(to_child[0], STDIN_FILENO);
    dup2(from_child[1], STDOUT_FILENO);
    close(to_child[0]);
    close(to_child[1]);
    close(from_child[0]);
    close(from_child[1]);
    std::vector<char*> args;
    args.reserve(argv_.size() + 1);
    for (auto& a : argv_) args.push_back(const_cast<char*>(a.c_str()));
    args.push_back(nullptr);
    execvp(args[0], args.data());
    _exit(127);
  }
  close(to_child[0]);
  close(from_child[1]);
  in_fd_ = to_child[1];
  out_fd_ = from_child[0];
}

SolverSession::~SolverSession() {
  if (alive()) {
    // polite exit first, then reap
    ssize_t n = ::write(in_fd_, "(exit)\n", 7);
    (void)n;
  }
  if (in_fd_ >= 0) close(in_fd_);
  if (out_fd_ >= 0) close(out_fd_);
  if (pid_ > 0) {
    int status = 0;
    for (int i = 0; i < 50; ++i) {
      if (waitpid(pid_, &status, WNOHANG) != 0) return;
      usleep(20000);
    }
    kill(pid_, SIGKILL);
    waitpid(pid_, &status, 0);
  }
}

std::string SolverSession::command_line() const {
  std::string s;
  for (size_t i = 0; i < argv_.size(); ++i) {
    if (i) s += ' ';
    s += argv_[i];
  }
  return s;
}

void SolverSession::kill_solver() {
  if (pid_ > 0) kill(pid_, SIGKILL);
  dead_ = true;
}

void SolverSession::send(const std::string& text) {
  if (!alive()) throw SolverError("solver session is dead");
  size_t off = 0;
  while (off < text.size()) {
    ssize_t n = ::write(in_fd_, text.data() + off, text.size() - off);
    if (n < 0) {
      if (errno == EINTR) continue;
      dead_ = true;
      throw SolverError("write to solver failed: " + std::string(strerror(errno)));
    }
    off += static_cast<size_t>(n);
  }
}

std::string SolverSession::read_line(double deadline) {
  for (;;) {
    auto nl = buf_.find('\n');
    if (nl != std::string::npos) {
      std::string line = buf_.substr(0, nl);
      buf_.erase(0, nl + 1);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      return line;
    }
    double remain = deadline - now_s();
    if (remain <= 0) {
      kill_solver();
      throw SolverError("timeout");
    }
    pollfd pfd{out_fd_, POLLIN, 0};
    int pr = poll(&pfd, 1, static_cast<int>(remain * 1000) + 1);
    if (pr <= 0) continue;
    char chunk[4096];
    ssize_t n = ::read(out_fd_, chunk, sizeof chunk);
    if (n <= 0) {
      dead_ = true;
      throw SolverError("solver closed its output");
    }
    buf_.append(chunk, static_cast<size_t>(n));
  }
}

std::string SolverSession::read_sexpr_text(double deadline) {
  for (;;) {
    if (sexpr_complete(buf_)) {
      size_t pos = 0;
      SExpr e = parse_sexpr(buf_, pos);
      std::string consumed = buf_.substr(0, pos);
      buf_.erase(0, pos);
      (void)e;
      return consumed;
    }
    double remain = deadline - now_s();
    if (remain <= 0) {
      kill_solver();
      throw SolverError("timeout");
    }
    pollfd pfd{out_fd_, POLLIN, 0};
    int pr = poll(&pfd, 1, static_cast<int>(remain * 1000) + 1);
    if (pr <= 0) continue;
    char chunk[4096];
    ssize_t n = ::read(out_fd_, chunk, sizeof chunk);
    if (n <= 0) {
      dead_ = true;
      throw SolverError("solver closed its output");
    }
    buf_.append(chunk, static_cast<size_t>(n));
  }
}

SolverVerdict SolverSession::read_verdict(double timeout_s) {
  double deadline = now_s() + timeout_s;
  try {
    for (;;) {
      std::string line = read_line(deadline);
      if (line == "sat") return {SolverVerdict::Sat, {}};
      if (line == "unsat") return {SolverVerdict::Unsat, {}};
      if (line == "unknown") return {SolverVerdict::Unknown, "solver reported unknown"};
      if (line.rfind("(error", 0) == 0) return {SolverVerdict::Unknown, line};
      if (line == "unsupported") continue;
      return {SolverVerdict::Unknown, "unexpected solver output: " + line};
    }
  } catch (const SolverError& e) {
    return {SolverVerdict::Unknown, e.what()};
  }
}

SolverVerdict SolverSession::check_sat(double timeout_s) {
  send("(check-sat)\n");
  return read_verdict(timeout_s);
}

SolverVerdict SolverSession::check_sat_assuming(const std::string& literal, double timeout_s) {
  send("(check-sat-assuming (" + literal + "))\n");
  return read_verdict(timeout_s);
}

void SolverSession::push() { send("(push 1)\n"); }
void SolverSession::pop() { send("(pop 1)\n"); }

std::map<std::string, exec::Value> SolverSession::get_values(
    const std::vector<std::string>& names, double timeout_s) {
  std::map<std::string, exec::Value> out;
  double deadline = now_s() + timeout_s;
  constexpr size_t kChunk = 64;
  for (size_t start = 0; start < names.size(); start += kChunk) {
    size_t stop = std::min(names.size(), start + kChunk);
    std::string q = "(get-value (";
    for (size_t i = start; i < stop; ++i) {
      if (i > start) q += ' ';
      q += names[i];
    }
    q += "))\n";
    send(q);
    std::string resp = read_sexpr_text(deadline);
    size_t pos = 0;
    SExpr e = parse_sexpr(resp, pos);
    if (e.is_atom || (e.items.size() == 2 && e.items[0].is_atom && e.items[0].atom == "error"))
      throw SolverError("get-value failed: " + resp);
    for (const auto& pair : e.items) {
      if (pair.is_atom || pair.items.size() != 2 || !pair.items[0].is_atom)
        throw SolverError("malformed model entry");
      const std::string& name = pair.items[0].atom;
      const SExpr& val = pair.items[1];
      exec::Value v;
      if (val.is_atom) {
        if (val.atom == "true") v = {lang::Sort::Bool, 1};
        else if (val.atom == "false") v = {lang::Sort::Bool, 0};
        else v = {lang::Sort::Int, std::stoll(val.atom)};
      } else if (val.items.size() == 2 && val.items[0].is_atom && val.items[0].atom == "-") {
        v = {lang::Sort::Int, -std::stoll(val.items[1].atom)};
      } else {
        throw SolverError("unsupported model value for " + name);
      }
      out[name] = v;
    }
  }
  for (const auto& n : names)
    if (!out.count(n)) throw SolverError("model is missing " + n);
  return out;
}

}  // namespace sfbmc::smt
