// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "lang/ast.hpp"

namespace sfbmc::lang {

struct Diagnostic {
  std::string message;
  SourceLoc loc;
};

// Resolved, index-addressed view of a validated program. States, compositions
// and junctions get dense indices; destinations and variable references in the
// AST are resolved in place. Immutable after construction.

struct StateInfo {
  int index = -1;
  std::string name;
  std::string path;      // dotted, relative to the root composition
  int comp = -1;         // composition this state belongs to
  int ordinal = -1;      // position within its composition's state list
  int parent_state = -1; // enclosing state (-1 when directly under the root)
  int child_comp = -1;   // composition inside this state (-1 = atomic)
  const StateDef* def = nullptr;
  std::vector<int> ancestry;  // state indices from outermost to this state
};

struct CompInfo {
  int index = -1;
  CompKind kind = CompKind::Or;
  std::string path;     // path of the owning state ("" for root)
  int owner_state = -1; // -1 for root
  std::vector<int> states;  // member state indices in design order
  const Component* def = nullptr;
};

struct JunctionInfo {
  int index = -1;
  std::string id;
  int scope_state = -1;  // state whose junction list defines it
  const TransitionList* list = nullptr;
};

class Model {
 public:
  ProgramPtr program;
  std::vector<StateInfo> states;       // preorder
  std::vector<CompInfo> comps;         // comps[0] = root
  std::vector<JunctionInfo> junctions;

  int state_by_path(const std::string& path) const {
    auto it = path_to_state_.find(path);
    return it == path_to_state_.end() ? -1 : it->second;
  }
  int var_by_name(const std::string& name) const {
    auto it = var_index_.find(name);
    return it == var_index_.end() ? -1 : it->second;
  }
  int event_by_name(const std::string& name) const {
    auto it = event_index_.find(name);
    return it == event_index_.end() ? -1 : it->second;
  }
  // junction lookup within the scope of one state (-1 scope = none)
  int junction_in_scope(int scope_state, const std::string& id) const {
    auto it = junction_index_.find({scope_state, id});
    return it == junction_index_.end() ? -1 : it->second;
  }

  size_t var_count() const { return program->vars.size(); }
  size_t event_count() const { return program->events.size(); }
  const VarDecl& var(int i) const { return program->vars[static_cast<size_t>(i)]; }
  const std::string& event_name(int i) const { return program->events[static_cast<size_t>(i)];}

  // true when `anc` is `desc` or an ancestor state of `desc`
  bool state_is_ancestor(int anc, int desc) const;

 private:
  friend struct ModelBuilder;
  struct ScopeKey {
    int state;
    std::string id;
    bool operator==(const ScopeKey& o) const { return state == o.state && id == o.id; }
  };
  struct ScopeKeyHash {
    size_t operator()(const ScopeKey& k) const {
      return std::hash<std::string>()(k.id) * 31 + std::hash<int>()(k.state);
    }
  };
  std::unordered_map<std::string, int> path_to_state_;
  std::unordered_map<std::string, int> var_index_;
  std::unordered_map<std::string, int> event_index_;
  std::unordered_map<ScopeKey, int, ScopeKeyHash> junction_index_;
};

using ModelPtr = std::shared_ptr<const Model>;

// Resolves and validates. Diagnostics are collected, not thrown; the returned
// model is only meaningful when diagnostics are empty.
ModelPtr validate_model(ProgramPtr program, std::vector<Diagnostic>& diags);

}  // namespace sfbmc::lang
