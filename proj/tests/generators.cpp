// SPDX-License-Identifier: Apache-2.0
#include "generators.hpp"

#include <functional>

#include "lang/parser.hpp"
#include "lang/printer.hpp"

namespace gen {

using namespace sfbmc::lang;

namespace {

struct Ctx {
  Rng& rng;
  std::vector<std::string> int_vars;
  std::vector<std::string> bool_vars;
  std::vector<std::string> events;
  int state_counter = 0;
  int junction_counter = 0;

  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
  bool chance(double p) { return std::uniform_real_distribution<>(0, 1)(rng) < p; }
  template <class T>
  const T& one_of(const std::vector<T>& xs) {
    return xs[static_cast<size_t>(pick(0, static_cast<int>(xs.size()) - 1))];
  }
};

bool is_ancestor_or_self(const std::string& anc, const std::string& desc) {
  if (anc == desc) return true;
  return desc.size() > anc.size() && desc.compare(0, anc.size(), anc) == 0 &&
         desc[anc.size()] == '.';
}

ExprPtr rand_aexpr(Ctx& c, int depth) {
  int r = c.pick(0, depth > 0 ? 5 : 2);
  switch (r) {
    case 0: return mk_int(c.pick(-3, 3));
    case 1:
    case 2: return mk_var(c.one_of(c.int_vars));
    case 3: return mk_binary(ExprKind::Add, rand_aexpr(c, depth - 1), rand_aexpr(c, depth - 1));
    case 4: return mk_binary(ExprKind::Sub, rand_aexpr(c, depth - 1), rand_aexpr(c, depth - 1));
    default:
      // multiplication kept linear: constant times variable
      return mk_binary(ExprKind::Mul, mk_int(c.pick(-2, 3)), mk_var(c.one_of(c.int_vars)));
  }
}

ExprPtr rand_cond(Ctx& c, int depth) {
  int r = c.pick(0, depth > 0 ? 5 : 3);
  switch (r) {
    case 0:
    case 1: return mk_cmp(static_cast<CmpOp>(c.pick(0, 5)), rand_aexpr(c, 1), rand_aexpr(c, 1));
    case 2:
      if (!c.bool_vars.empty()) return mk_var(c.one_of(c.bool_vars));
      return mk_cmp(CmpOp::Gt, mk_var(c.one_of(c.int_vars)), mk_int(0));
    case 3: return mk_bool(c.chance(0.7));
    case 4: return mk_unary(ExprKind::Not, rand_cond(c, depth - 1));
    default:
      return mk_binary(c.chance(0.5) ? ExprKind::And : ExprKind::Or, rand_cond(c, depth - 1),
                       rand_cond(c, depth - 1));
  }
}

ActionSeq rand_actions(Ctx& c, int max_n) {
  ActionSeq seq;
  int n = c.pick(0, max_n);
  for (int i = 0; i < n; ++i) {
    Assign a;
    if (!c.bool_vars.empty() && c.chance(0.2)) {
      a.var = c.one_of(c.bool_vars);
      a.rhs = rand_cond(c, 1);
    } else {
      a.var = c.one_of(c.int_vars);
      a.rhs = rand_aexpr(c, 2);
    }
    seq.push_back(std::move(a));
  }
  return seq;
}

Transition rand_transition(Ctx& c, const std::vector<std::string>& state_pool,
                           const std::vector<std::string>& junction_pool, bool allow_end) {
  Transition t;
  if (c.chance(0.6)) t.event = c.one_of(c.events);
  if (c.chance(0.55)) t.cond = rand_cond(c, 1);
  if (c.chance(0.5)) t.cond_action = rand_actions(c, 2);
  int kind = c.pick(0, 9);
  if (allow_end && (kind == 0 || (state_pool.empty() && junction_pool.empty()))) {
    t.dest.kind = DestKind::End;
  } else if (!junction_pool.empty() && (kind <= 3 || state_pool.empty())) {
    t.dest.text = c.one_of(junction_pool);
  } else if (!state_pool.empty()) {
    t.dest.text = c.one_of(state_pool);
  } else {
    t.dest.kind = DestKind::End;
  }
  if (c.chance(0.3)) t.trans_action = rand_actions(c, 1);
  return t;
}

struct Shape {
  StateDefPtr sd;
  std::string path;
  std::vector<std::string> descendants;  // dotted paths strictly inside
  bool or_child = false;
};

Shape build_state(Ctx& c, const std::string& prefix, int depth);

ComponentPtr build_or(Ctx& c, const std::string& owner_path, int depth,
                      std::vector<Shape>& shapes_out) {
  auto comp = std::make_unique<Component>();
  comp->kind = CompKind::Or;
  int n = c.pick(depth == 0 ? 2 : 1, depth == 0 ? 3 : 2);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    Shape sh = build_state(c, owner_path, depth);
    names.push_back(sh.path);
    shapes_out.push_back(std::move(sh));
  }
  if (c.chance(0.3)) {
    Transition t;
    t.cond = rand_cond(c, 0);
    t.dest.text = c.one_of(names);
    comp->defaults.push_back(std::move(t));
  }
  Transition t;
  t.dest.text = c.one_of(names);
  comp->defaults.push_back(std::move(t));
  return comp;
}

Shape build_state(Ctx& c, const std::string& prefix, int depth) {
  Shape sh;
  sh.sd = std::make_unique<StateDef>();
  StateDef& sd = *sh.sd;
  sd.name = "S" + std::to_string(c.state_counter++);
  sh.path = prefix.empty() ? sd.name : prefix + "." + sd.name;
  sd.entry = rand_actions(c, 2);
  sd.during = rand_actions(c, 2);
  sd.exit = rand_actions(c, 1);

  std::vector<Shape> kids;
  if (depth < 2 && c.chance(depth == 0 ? 0.75 : 0.35)) {
    if (c.chance(0.25)) {
      auto comp = std::make_unique<Component>();
      comp->kind = CompKind::And;
      int n = c.pick(1, 2);
      for (int i = 0; i < n; ++i) kids.push_back(build_state(c, sh.path, depth + 1));
      for (auto& k : kids) comp->states.push_back(std::move(k.sd));
      sd.child = std::move(comp);
    } else {
      std::vector<Shape> members;
      sd.child = build_or(c, sh.path, depth + 1, members);
      for (auto& m : members) {
        sd.child->states.push_back(std::move(m.sd));
        kids.push_back(std::move(m));
      }
      // build_or already filled shapes into `members` but not the component;
      // states were moved just above, keep the component's list only
    }
    sh.or_child = sd.child->kind == CompKind::Or;
    for (const auto& k : kids) {
      sh.descendants.push_back(k.path);
      for (const auto& d : k.descendants) sh.descendants.push_back(d);
    }
  }
  return sh;
}

}  // namespace

sfbmc::lang::ModelPtr random_model(Rng& rng) {
  for (int attempt = 0; attempt < 500; ++attempt) {
    Ctx c{rng, {}, {}, {}};
    auto prog = std::make_shared<Program>();
    prog->name = "Rand";
    int nv = c.pick(2, 3);
    for (int i = 0; i < nv; ++i) {
      VarDecl d;
      d.name = "x" + std::to_string(i);
      d.sort = Sort::Int;
      d.init_int = c.pick(-3, 3);
      c.int_vars.push_back(d.name);
      prog->vars.push_back(d);
    }
    if (c.chance(0.5)) {
      VarDecl d;
      d.name = "b0";
      d.sort = Sort::Bool;
      d.init_bool = c.chance(0.5);
      c.bool_vars.push_back(d.name);
      prog->vars.push_back(d);
    }
    int ne = c.pick(1, 3);
    for (int i = 0; i < ne; ++i) {
      prog->events.push_back("E" + std::to_string(i));
      c.events.push_back("E" + std::to_string(i));
    }

    std::vector<Shape> shapes;
    prog->root = build_or(c, "", 0, shapes);
    for (auto& sh : shapes) prog->root->states.push_back(std::move(sh.sd));

    // flatten the shape table (descendant shapes live inside their parents)
    struct Flat {
      std::string path;
      std::vector<std::string> descendants;
      bool or_child;
      std::string member_root;  // innermost enclosing and-member subtree root
    };
    std::vector<Flat> flats;
    std::function<void(Component*, const std::string&, const std::string&)> walk =
        [&](Component* comp, const std::string& prefix, const std::string& member_root) {
          for (auto& sdp : comp->states) {
            std::string path = prefix.empty() ? sdp->name : prefix + "." + sdp->name;
            Flat f;
            f.path = path;
            f.or_child = sdp->child && sdp->child->kind == CompKind::Or;
            f.member_root = member_root;
            flats.push_back(f);
            if (sdp->child) {
              std::string mr = member_root;
              walk(sdp->child.get(), path,
                   sdp->child->kind == CompKind::And ? path : mr);
            }
          }
        };
    walk(prog->root.get(), "", "");
    // recompute descendants from the flat path list
    for (auto& f : flats)
      for (const auto& g : flats)
        if (g.path != f.path && is_ancestor_or_self(f.path, g.path))
          f.descendants.push_back(g.path);

    // legal destination pool for fires rooted at state `f`: no ancestors of
    // the source, sealed inside the innermost and-member subtree
    auto dest_pool = [&](const Flat& f) {
      std::vector<std::string> pool;
      for (const auto& g : flats) {
        if (g.path != f.path && is_ancestor_or_self(g.path, f.path)) continue;
        if (!f.member_root.empty()) {
          // the and member containing f: fires may not cross its boundary
          std::string seal;
          for (const auto& h : flats)
            if (is_ancestor_or_self(h.path, f.path) &&
                is_ancestor_or_self(f.member_root, h.path) && h.path != f.member_root &&
                (seal.empty() || h.path.size() < seal.size()))
              seal = h.path;
          if (!seal.empty() && !is_ancestor_or_self(seal, g.path)) continue;
        }
        pool.push_back(g.path);
      }
      return pool;
    };

    // attach junctions, inner and outer transitions per state
    std::function<void(Component*, const std::string&)> decorate =
        [&](Component* comp, const std::string& prefix) {
          for (auto& sdp : comp->states) {
            std::string path = prefix.empty() ? sdp->name : prefix + "." + sdp->name;
            const Flat* f = nullptr;
            for (const auto& g : flats)
              if (g.path == path) f = &g;
            std::vector<std::string> pool = dest_pool(*f);
            // junction destinations may not name the scope state itself
            std::vector<std::string> jpool;
            for (const auto& p : pool)
              if (p != path) jpool.push_back(p);

            int nj = c.chance(0.35) ? c.pick(1, 2) : 0;
            std::vector<std::string> jnames;
            for (int i = 0; i < nj; ++i)
              jnames.push_back("J" + std::to_string(c.junction_counter++));
            for (int i = 0; i < nj; ++i) {
              JunctionDef j;
              j.id = jnames[static_cast<size_t>(i)];
              std::vector<std::string> later(jnames.begin() + i + 1, jnames.end());
              int nt = c.pick(0, 2);
              for (int k = 0; k < nt; ++k)
                j.list.push_back(rand_transition(c, jpool, later, true));
              sdp->junctions.push_back(std::move(j));
            }
            if (c.chance(0.4)) {
              std::vector<std::string> inner_pool;
              if (f->or_child)
                for (const auto& d : f->descendants) inner_pool.push_back(d);
              int nt = c.pick(1, 2);
              for (int i = 0; i < nt; ++i) {
                if (inner_pool.empty() && jnames.empty()) {
                  Transition t = rand_transition(c, {}, {}, true);
                  sdp->inner.push_back(std::move(t));
                } else {
                  sdp->inner.push_back(rand_transition(c, inner_pool, jnames, true));
                }
              }
            }
            int nt = c.pick(0, 2);
            for (int i = 0; i < nt; ++i)
              sdp->outer.push_back(rand_transition(c, pool, jnames, false));
            if (sdp->child) decorate(sdp->child.get(), path);
          }
        };
    decorate(prog->root.get(), "");

    try {
      std::string text = print_model(*prog);
      auto reparsed = parse_model(text);
      std::vector<Diagnostic> diags;
      auto model = validate_model(std::move(reparsed), diags);
      if (!diags.empty()) continue;
      return model;
    } catch (const ParseError&) {
      continue;
    }
  }
  throw std::runtime_error("random_model: rejection sampling exhausted");
}

std::vector<int> random_events(Rng& rng, const sfbmc::lang::Model& m, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> ev(0, static_cast<int>(m.event_count()) - 1);
  std::vector<int> out;
  int n = len(rng);
  for (int i = 0; i < n; ++i) out.push_back(ev(rng));
  return out;
}

sfbmc::exec::Env random_env(Rng& rng, const sfbmc::lang::Model& m) {
  std::uniform_int_distribution<long long> iv(-8, 8);
  std::uniform_int_distribution<int> bv(0, 1);
  sfbmc::exec::Env env;
  for (size_t v = 0; v < m.var_count(); ++v) {
    const auto& d = m.var(static_cast<int>(v));
    if (d.sort == sfbmc::lang::Sort::Int)
      env.push_back({sfbmc::lang::Sort::Int, iv(rng)});
    else
      env.push_back({sfbmc::lang::Sort::Bool, bv(rng)});
  }
  return env;
}

}  // namespace gen
