// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <set>

#include "generators.hpp"
#include "lang/parser.hpp"
#include "lang/property.hpp"
#include "sym/interpret.hpp"
#include "testutil.hpp"

using namespace sfbmc;

namespace {

lang::ModelPtr mini(const std::string& text) { return testutil::load_model_text(text); }

// collects every rule name used in a derivation
void collect_rules(const sym::DerivPtr& d, std::set<std::string>& out) {
  out.insert(sym::rule_name(d->rule));
  for (const auto& k : d->kids) collect_rules(k, out);
}

}  // namespace

TEST_CASE("symbolic condition evaluation appends the substituted conjunct") {
  auto model = testutil::load_fixture("stopwatch.sfi");
  int cent = model->var_by_name("cent");
  auto delta = sym::identity_env(*model);

  SUBCASE("constant true is elided") {
    auto c = lang::parse_property("true", *model);
    auto conj = sym::subst(*c.predicate, delta);
    CHECK(sym::is_true(conj));
  }
  SUBCASE("substitution goes through an updated binding") {
    delta[static_cast<size_t>(cent)] =
        sym::mk_add(sym::mk_sym(cent), sym::mk_int(1));
    auto c = lang::parse_property("cent == 100", *model);
    auto conj = sym::subst(*c.predicate, delta);
    CHECK(sym::to_text(conj, *model) == "cent + 1 == 100");
  }
  SUBCASE("identity environment substitutes symbols directly") {
    auto c = lang::parse_property("cent < 100 && min >= 0", *model);
    auto conj = sym::subst(*c.predicate, delta);
    CHECK(sym::to_text(conj, *model) == "cent < 100 && min >= 0");
  }
}

TEST_CASE("symbolic action execution: sequential substitution") {
  auto model = mini(
      "program T; var cent: int = 0; var sec: int = 0;\n"
      "or T { state A { entry: cent := 0; sec := sec + cent; } transitions { -> A; } }");
  int cent = model->var_by_name("cent");
  int sec = model->var_by_name("sec");
  const auto& seq = model->program->root->states[0]->entry;

  auto delta = sym::identity_env(*model);
  for (const auto& a : seq)
    delta[static_cast<size_t>(a.var_index)] = sym::subst(*a.rhs, delta);

  // sec reads the already-updated cent binding
  CHECK(sym::to_text(delta[static_cast<size_t>(cent)], *model) == "0");
  CHECK(sym::to_text(delta[static_cast<size_t>(sec)], *model) == "sec + 0");
}

TEST_CASE("ssos_step forks on a guarded transition") {
  auto model = mini(
      "program T; events E;\nvar x: int = 1;\n"
      "or T {\n"
      "  state A { outer { [x > 0] / {x := x - 1;} -> B; } }\n"
      "  state B { }\n"
      "  transitions { -> A; }\n"
      "}");
  sym::SsosEngine engine(*model);
  auto sc = engine.initial_config();
  auto inits = engine.step(std::nullopt, sc);
  REQUIRE(inits.size() == 1);
  sc.act = inits[0].act;
  sc.delta = inits[0].delta;

  auto succs = engine.step(model->event_by_name("E"), sc);
  REQUIRE(succs.size() == 2);
  const sym::Successor* fire = nullptr;
  const sym::Successor* stay = nullptr;
  for (const auto& s : succs)
    (s.tv == sym::TvKind::Fire || s.act.slot != sc.act.slot ? fire : stay) = &s;
  // the two branches partition on x > 0
  bool seen_fire = false, seen_nofire = false;
  int x = model->var_by_name("x");
  for (const auto& s : succs) {
    REQUIRE(s.appended.size() == 1);
    std::string conj = sym::to_text(s.appended[0], *model);
    if (conj == "x > 0") {
      seen_fire = true;
      CHECK(sym::to_text(s.delta[static_cast<size_t>(x)], *model) == "x - 1");
    } else {
      seen_nofire = true;
      CHECK(conj == "!(x > 0)");
      CHECK(sym::to_text(s.delta[static_cast<size_t>(x)], *model) == "x");
      CHECK(s.tv == sym::TvKind::No);
    }
  }
  CHECK(seen_fire);
  CHECK(seen_nofire);
  (void)fire;
  (void)stay;
}

TEST_CASE("transition with a non-matching event yields a single No successor") {
  auto model = mini(
      "program T; events E, F;\n"
      "or T {\n"
      "  state A { outer { on E -> B; } }\n"
      "  state B { }\n"
      "  transitions { -> A; }\n"
      "}");
  sym::SsosEngine engine(*model);
  auto sc = engine.initial_config();
  auto inits = engine.step(std::nullopt, sc);
  sc.act = inits[0].act;
  sc.delta = inits[0].delta;
  auto succs = engine.step(model->event_by_name("F"), sc);
  REQUIRE(succs.size() == 1);
  CHECK(succs[0].appended.empty());
  CHECK(succs[0].tv == sym::TvKind::No);
  CHECK(succs[0].act.slot == sc.act.slot);
  std::set<std::string> rules;
  collect_rules(succs[0].tree, rules);
  CHECK(rules.count("t-NOT-ENABLED") == 1);
}

TEST_CASE("junction chain: fire, end, and backtrack branches") {
  auto model = mini(
      "program T; events E;\nvar g1: bool = false; var g2: bool = false;\n"
      "or T {\n"
      "  state A {\n"
      "    junctions {\n"
      "      J1: [g1] -> B; [g2] -> end;\n"
      "    }\n"
      "    outer { on E -> J1; }\n"
      "  }\n"
      "  state B { }\n"
      "  transitions { -> A; }\n"
      "}");
  sym::SsosEngine engine(*model);
  auto sc = engine.initial_config();
  auto inits = engine.step(std::nullopt, sc);
  sc.act = inits[0].act;
  sc.delta = inits[0].delta;
  auto succs = engine.step(model->event_by_name("E"), sc);
  REQUIRE(succs.size() == 3);

  std::vector<std::string> conjs;
  for (const auto& s : succs) {
    std::string c;
    for (const auto& e : s.appended) {
      if (!c.empty()) c += " ; ";
      c += sym::to_text(e, *model);
    }
    conjs.push_back(c);
  }
  CHECK(conjs[0] == "g1");
  CHECK(conjs[1] == "!g1 ; g2");
  CHECK(conjs[2] == "!g1 ; !g2");

  CHECK(succs[0].tv == sym::TvKind::Fire);  // completes to B at the or level: consumed
  std::set<std::string> rules;
  collect_rules(succs[1].tree, rules);
  CHECK(rules.count("T-END") == 1);
  std::set<std::string> rules2;
  collect_rules(succs[2].tree, rules2);
  CHECK(rules2.count("T-FIRE-J-N") == 1);
}

TEST_CASE("beta interpretation of symbolic environments") {
  auto model = testutil::load_fixture("stopwatch.sfi");
  int cent = model->var_by_name("cent");
  int sec = model->var_by_name("sec");
  exec::Interp interp(*model);
  exec::Env d0 = interp.initial_env();

  SUBCASE("identity") {
    auto delta = sym::identity_env(*model);
    CHECK(sym::beta_interpret(delta, d0) == d0);
  }
  SUBCASE("arithmetic") {
    auto delta = sym::identity_env(*model);
    delta[static_cast<size_t>(cent)] = sym::mk_add(sym::mk_sym(cent), sym::mk_int(1));
    exec::Env d = d0;
    d[static_cast<size_t>(cent)].i = 4;
    auto out = sym::beta_interpret(delta, d);
    CHECK(out[static_cast<size_t>(cent)].i == 5);
  }
  SUBCASE("wrap shape: cent -> 0, sec -> sec + 1") {
    auto delta = sym::identity_env(*model);
    delta[static_cast<size_t>(cent)] = sym::mk_int(0);
    delta[static_cast<size_t>(sec)] = sym::mk_add(sym::mk_sym(sec), sym::mk_int(1));
    exec::Env d = d0;
    d[static_cast<size_t>(sec)].i = 59;
    auto out = sym::beta_interpret(delta, d);
    CHECK(out[static_cast<size_t>(cent)].i == 0);
    CHECK(out[static_cast<size_t>(sec)].i == 60);
  }
}

TEST_CASE("path-condition evaluation under concrete interpretations") {
  auto model = testutil::load_fixture("stopwatch.sfi");
  int cent = model->var_by_name("cent");
  exec::Interp interp(*model);
  exec::Env d0 = interp.initial_env();

  CHECK(sym::eval_pc({}, d0));  // pc0 = true
  auto gt = sym::mk_cmp(lang::CmpOp::Gt, sym::mk_sym(cent), sym::mk_int(0));
  CHECK_FALSE(sym::eval_pc({gt}, d0));
  exec::Env d = d0;
  d[static_cast<size_t>(cent)].i = 99;
  auto eq = sym::mk_cmp(lang::CmpOp::Eq,
                        sym::mk_add(sym::mk_sym(cent), sym::mk_int(1)), sym::mk_int(100));
  CHECK(sym::eval_pc({eq}, d));
}

TEST_CASE("derivation trees are well-formed and use only the 27 rule names") {
  auto model = testutil::load_fixture("stopwatch.sfi");
  sym::SsosEngine engine(*model);
  auto sc = engine.initial_config();
  auto inits = engine.step(std::nullopt, sc);
  REQUIRE(inits.size() == 1);
  CHECK(sym::well_formed(inits[0].tree));
  sc.act = inits[0].act;
  sc.delta = inits[0].delta;

  std::set<std::string> names;
  for (size_t e = 0; e < model->event_count(); ++e) {
    for (const auto& s : engine.step(static_cast<int>(e), sc)) {
      REQUIRE(sym::well_formed(s.tree));
      collect_rules(s.tree, names);
    }
  }
  std::set<std::string> known;
  for (int r = 0; r < sym::kRuleCount; ++r)
    known.insert(sym::rule_name(static_cast<sym::Rule>(r)));
  CHECK(known.size() == 27);
  for (const auto& n : names) CHECK_MESSAGE(known.count(n) == 1, "unknown rule ", n);
}

TEST_CASE("pc is monotone: successors only append conjuncts") {
  gen::Rng rng(5u);
  for (int i = 0; i < 60; ++i) {
    auto model = gen::random_model(rng);
    sym::SsosEngine engine(*model);
    auto sc = engine.initial_config();
    auto inits = engine.step(std::nullopt, sc);
    if (inits.empty()) continue;
    sc.act = inits[0].act;
    sc.delta = inits[0].delta;
    sc.pc = inits[0].appended;
    auto events = gen::random_events(rng, *model, 4);
    for (int e : events) {
      auto succs = engine.step(e, sc);
      REQUIRE(!succs.empty());
      for (const auto& s : succs) {
        auto pc2 = sym::extend_pc(sc.pc, s.appended);
        REQUIRE(pc2.size() == sc.pc.size() + s.appended.size());
        for (size_t k = 0; k < sc.pc.size(); ++k) REQUIRE(sym::equal(pc2[k], sc.pc[k]));
      }
      // follow the first successor
      sc.pc = sym::extend_pc(sc.pc, succs[0].appended);
      sc.delta = succs[0].delta;
      sc.act = succs[0].act;
    }
  }
}

TEST_CASE("branch conjuncts are exclusive and exhaustive under evaluation") {
  auto model = testutil::load_fixture("stopwatch.sfi");
  sym::SsosEngine engine(*model);
  exec::Interp interp(*model);

  // all five control points via the concrete interpreter
  int START = model->event_by_name("START");
  int LAP = model->event_by_name("LAP");
  std::vector<exec::Activity> acts;
  auto act = interp.empty_activity();
  auto env = interp.initial_env();
  interp.step(std::nullopt, act, env);
  acts.push_back(act);  // {Stop,Reset}
  {
    auto a2 = act;
    auto e2 = env;
    e2[static_cast<size_t>(model->var_by_name("cent"))].i = 3;
    interp.step(LAP, a2, e2);
    acts.push_back(a2);  // {Stop,Lap_stop}
  }
  {
    auto a2 = act;
    auto e2 = env;
    interp.step(START, a2, e2);
    acts.push_back(a2);  // {Run,Running}
    auto a3 = a2;
    interp.step(LAP, a3, e2);
    acts.push_back(a3);  // {Run,Lap}
  }

  std::vector<long long> grid = {-1, 0, 1, 59, 60, 61, 99, 100, 101};
  for (const auto& a : acts) {
    for (size_t ev = 0; ev < model->event_count(); ++ev) {
      sym::SymConfig sc;
      sc.act = a;
      sc.delta = sym::identity_env(*model);
      auto succs = engine.step(static_cast<int>(ev), sc);
      for (long long cent : grid) {
        for (long long sec : grid) {
          exec::Env d0 = interp.initial_env();
          d0[static_cast<size_t>(model->var_by_name("cent"))].i = cent;
          d0[static_cast<size_t>(model->var_by_name("sec"))].i = sec;
          int hits = 0;
          for (const auto& s : succs) hits += sym::eval_pc(s.appended, d0) ? 1 : 0;
          REQUIRE(hits == 1);
        }
      }
    }
  }
}
