// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <functional>

#include "generators.hpp"
#include "lang/parser.hpp"
#include "lang/printer.hpp"
#include "lang/property.hpp"
#include "testutil.hpp"

using namespace sfbmc;

namespace {

const char* kMinimal = R"(
program Mini;
events E;
or Mini {
  state A { outer { on E -> B; } }
  state B { }
  transitions { -> A; }
}
)";

std::vector<lang::Diagnostic> diags_of(const std::string& text) {
  auto prog = lang::parse_model(text);
  std::vector<lang::Diagnostic> diags;
  lang::validate_model(std::move(prog), diags);
  return diags;
}

bool has_diag(const std::vector<lang::Diagnostic>& diags, const std::string& needle) {
  for (const auto& d : diags)
    if (d.message.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("minimal two-state model parses with expected shape") {
  auto prog = lang::parse_model(kMinimal);
  REQUIRE(prog->root != nullptr);
  CHECK(prog->root->kind == lang::CompKind::Or);
  REQUIRE(prog->root->states.size() == 2);
  CHECK(prog->root->states[0]->name == "A");
  CHECK(prog->root->states[1]->name == "B");
  CHECK(prog->root->states[0]->outer.size() == 1);
  CHECK(prog->root->defaults.size() == 1);
  CHECK(prog->events == std::vector<std::string>{"E"});
}

TEST_CASE("bundled stopwatch parses with the documented element counts") {
  auto text = testutil::read_file(testutil::fixture_path("stopwatch.sfi"));
  auto prog = lang::parse_model(text);
  std::vector<lang::Diagnostic> diags;
  auto model = lang::validate_model(std::move(prog), diags);
  CHECK(diags.empty());
  CHECK(model->states.size() == 6);
  CHECK(model->junctions.size() == 4);
  int transitions = 0;
  std::function<void(const lang::Component*)> walk = [&](const lang::Component* c) {
    transitions += static_cast<int>(c->defaults.size());
    for (const auto& sd : c->states) {
      transitions += static_cast<int>(sd->inner.size() + sd->outer.size());
      for (const auto& j : sd->junctions) transitions += static_cast<int>(j.list.size());
      if (sd->child) walk(sd->child.get());
    }
  };
  walk(model->program->root.get());
  CHECK(transitions == 13);
  CHECK(model->event_count() == 3);
  // paths resolve
  CHECK(model->state_by_path("Run.Running") >= 0);
  CHECK(model->state_by_path("Stop.Lap_stop") >= 0);
}

TEST_CASE("unresolved destination is a validation error") {
  std::string bad = R"(
program Bad;
events E;
or Bad {
  state Run {
    or {
      state Going { }
      transitions { -> Going; }
    }
  }
  state Idle { outer { on E -> Run.Missing; } }
  transitions { -> Idle; }
}
)";
  auto diags = diags_of(bad);
  REQUIRE(!diags.empty());
  CHECK(has_diag(diags, "unresolved destination 'Run.Missing'"));
}

TEST_CASE("duplicate state names and unknown sorts are rejected") {
  CHECK_THROWS_AS(lang::parse_model("program P; or P { state A {} } x"), lang::ParseError);
  CHECK_THROWS_AS(lang::parse_model("program P;\nvar v: float;\nor P { state A {} transitions { -> A; } }"),
                  lang::ParseError);
  auto diags = diags_of(R"(
program P;
or P {
  state A { }
  state A { }
  transitions { -> A; }
}
)");
  CHECK(has_diag(diags, "duplicate state name 'A'"));
}

TEST_CASE("cyclic junction networks are diagnosed") {
  auto diags = diags_of(R"(
program P;
events E;
var x: int = 0;
or P {
  state A {
    junctions {
      J1: [x > 0] -> J2;
      J2: [x > 1] -> J1;
    }
    inner { on E -> J1; }
  }
  transitions { -> A; }
}
)");
  CHECK(has_diag(diags, "cyclic junction network"));
}

TEST_CASE("undeclared variables are diagnosed") {
  auto diags = diags_of(R"(
program P;
events E;
or P {
  state A { outer { on E [x > 0] -> A; } }
  transitions { -> A; }
}
)");
  CHECK(has_diag(diags, "undeclared variable x"));
}

TEST_CASE("or-composition with states requires a default list") {
  auto diags = diags_of("program P; or P { state A { } }");
  CHECK(has_diag(diags, "default transition list"));
}

TEST_CASE("destinations may not be ancestors of their source") {
  auto diags = diags_of(R"(
program P;
events E;
or P {
  state Up {
    or {
      state In { outer { on E -> Up; } }
      transitions { -> In; }
    }
  }
  transitions { -> Up; }
}
)");
  CHECK(has_diag(diags, "ancestor of its source"));
}

TEST_CASE("transitions cannot escape an and-composition") {
  auto diags = diags_of(R"(
program P;
events E;
or P {
  state Par {
    and {
      state M1 { outer { on E -> Other; } }
      state M2 { }
    }
  }
  state Other { }
  transitions { -> Par; }
}
)");
  CHECK(has_diag(diags, "and-composition"));
}

TEST_CASE("identifiers with double underscores are reserved") {
  auto diags = diags_of(R"(
program P;
var bad__name: int = 0;
or P {
  state A { }
  transitions { -> A; }
}
)");
  CHECK(has_diag(diags, "must not contain '__'"));
}

TEST_CASE("ordering of state and transition lists is preserved") {
  std::string text = R"(
program Ord;
events E;
or Ord {
  state Z { outer { on E [true] -> Q; on E [false] -> Z; -> Q; } }
  state Q { }
  state M { }
  transitions { -> Z; }
}
)";
  auto prog = lang::parse_model(text);
  REQUIRE(prog->root->states.size() == 3);
  CHECK(prog->root->states[0]->name == "Z");
  CHECK(prog->root->states[1]->name == "Q");
  CHECK(prog->root->states[2]->name == "M");
  const auto& outer = prog->root->states[0]->outer;
  REQUIRE(outer.size() == 3);
  CHECK(outer[0].cond->bool_val == true);
  CHECK(outer[1].cond->bool_val == false);
  CHECK(outer[2].cond == nullptr);
}

TEST_CASE("print-parse round trip is the identity on fixtures") {
  for (const char* fixture : {"toggle.sfi", "stopwatch.sfi"}) {
    auto text = testutil::read_file(testutil::fixture_path(fixture));
    auto p1 = lang::parse_model(text);
    auto printed = lang::print_model(*p1);
    auto p2 = lang::parse_model(printed);
    CHECK_MESSAGE(lang::program_equal(*p1, *p2), "round trip failed for ", fixture);
    // second round trip is textually stable
    CHECK(lang::print_model(*p2) == printed);
  }
}

TEST_CASE("print-parse round trip holds on random models") {
  gen::Rng rng(20260808u);
  for (int i = 0; i < 150; ++i) {
    auto model = gen::random_model(rng);
    auto printed = lang::print_model(*model->program);
    auto reparsed = lang::parse_model(printed);
    REQUIRE_MESSAGE(lang::program_equal(*model->program, *reparsed), "iteration ", i);
  }
}

TEST_CASE("property parsing resolves variables and activity atoms") {
  auto model = testutil::load_fixture("stopwatch.sfi");
  auto p1 = lang::parse_property("cent >= 0 && cent <= 5", *model);
  CHECK(p1.predicate->kind == lang::ExprKind::And);
  auto p2 = lang::parse_property("in(Run.Running)", *model);
  CHECK(p2.predicate->kind == lang::ExprKind::InState);
  CHECK(p2.predicate->state_index == model->state_by_path("Run.Running"));
  CHECK_THROWS_AS(lang::parse_property("speed > 0", *model), lang::PropertyError);
  CHECK_THROWS_AS(lang::parse_property("in(Run.Missing)", *model), lang::PropertyError);
}
