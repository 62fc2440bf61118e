// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace sfbmc::lang {

struct SourceLoc {
  int line = 0;
  int col = 0;
};

enum class Sort { Int, Bool };

const char* sort_name(Sort s);

// ---------------------------------------------------------------------------
// Expressions. One tree type serves transition conditions, action right-hand
// sides and invariant properties; InState atoms are only legal in properties.
// ---------------------------------------------------------------------------

enum class ExprKind {
  IntLit,
  BoolLit,
  Var,
  InState,  // in(<state path>)
  Neg,      // unary minus
  Not,
  Add,
  Sub,
  Mul,
  And,
  Or,
  Cmp,
};

enum class CmpOp { Eq, Ne, Lt, Le, Gt, Ge };

const char* cmp_text(CmpOp op);

struct Expr;
using ExprPtr = std::shared_ptr<Expr>;

struct Expr {
  ExprKind kind;
  long long int_val = 0;
  bool bool_val = false;
  std::string name;  // Var ident or InState path text
  CmpOp cmp = CmpOp::Eq;
  ExprPtr lhs;  // unary ops use lhs only
  ExprPtr rhs;
  SourceLoc loc;

  // filled by resolution
  int var_index = -1;
  int state_index = -1;
};

ExprPtr mk_int(long long v, SourceLoc loc = {});
ExprPtr mk_bool(bool v, SourceLoc loc = {});
ExprPtr mk_var(std::string name, SourceLoc loc = {});
ExprPtr mk_in_state(std::string path, SourceLoc loc = {});
ExprPtr mk_unary(ExprKind k, ExprPtr e, SourceLoc loc = {});
ExprPtr mk_binary(ExprKind k, ExprPtr l, ExprPtr r, SourceLoc loc = {});
ExprPtr mk_cmp(CmpOp op, ExprPtr l, ExprPtr r, SourceLoc loc = {});

bool expr_equal(const Expr* a, const Expr* b);
std::string expr_text(const Expr* e);

// ---------------------------------------------------------------------------
// Actions: sequences of assignments. `skip` parses to an empty sequence.
// ---------------------------------------------------------------------------

struct Assign {
  std::string var;
  ExprPtr rhs;
  SourceLoc loc;
  int var_index = -1;
};

using ActionSeq = std::vector<Assign>;

// ---------------------------------------------------------------------------
// Transitions and components (Table-1 shapes).
// ---------------------------------------------------------------------------

enum class DestKind { StatePath, Junction, End };

struct Destination {
  std::string text;  // as written; empty for `end`
  SourceLoc loc;
  // resolution results
  DestKind kind = DestKind::StatePath;
  int state_index = -1;     // StatePath
  int junction_index = -1;  // Junction
};

struct Transition {
  std::optional<std::string> event;  // absent = enabled for any event
  ExprPtr cond;                      // null = unguarded
  ActionSeq cond_action;
  Destination dest;
  ActionSeq trans_action;
  SourceLoc loc;
  int event_index = -1;  // resolved; -1 when event absent
};

using TransitionList = std::vector<Transition>;

struct JunctionDef {
  std::string id;
  TransitionList list;
  SourceLoc loc;
};

struct Component;
struct StateDef;
using ComponentPtr = std::unique_ptr<Component>;
using StateDefPtr = std::unique_ptr<StateDef>;

struct StateDef {
  std::string name;
  ActionSeq entry;
  ActionSeq during;
  ActionSeq exit;
  ComponentPtr child;  // null = atomic state
  TransitionList inner;
  TransitionList outer;
  std::vector<JunctionDef> junctions;
  SourceLoc loc;
};

enum class CompKind { Or, And };

struct Component {
  CompKind kind;
  std::string label;  // optional name after `or` (top level)
  std::vector<StateDefPtr> states;
  TransitionList defaults;  // Or only: the composition's transition list T
  SourceLoc loc;
};

struct VarDecl {
  std::string name;
  Sort sort;
  long long init_int = 0;
  bool init_bool = false;
  SourceLoc loc;
};

struct Program {
  std::string name;
  std::vector<std::string> events;
  std::vector<VarDecl> vars;
  ComponentPtr root;
};

using ProgramPtr = std::shared_ptr<Program>;

bool program_equal(const Program& a, const Program& b);

}  // namespace sfbmc::lang
