#include <random>

#include "doctest.h"
#include "support/oracle.hpp"
#include "teamenum/formula.hpp"

using namespace teamenum;

TEST_CASE("parsing a single dependence atom") {
  const Formula f = parse_formula("dep(x1;x2)");
  REQUIRE(f.var_count() == 2);
  CHECK(f.variable_order() == std::vector<std::string>{"x1", "x2"});
  REQUIRE(f.dep_atoms().size() == 1);
  CHECK(f.dep_atoms()[0].determining == std::vector<int>{0});
  CHECK(f.dep_atoms()[0].determined == std::vector<int>{1});
}

TEST_CASE("first-occurrence variable order") {
  const Formula f = parse_formula("x3 & dep(x1; x2, x3) & dep(x4; x2, x3)");
  CHECK(f.variable_order() == std::vector<std::string>{"x3", "x1", "x2", "x4"});
  CHECK(f.dep_atoms().size() == 2);
}

TEST_CASE("vars header pins the order and catches stray variables") {
  const Formula f = parse_formula("vars: a, b, c; dep(b;a)");
  CHECK(f.variable_order() == std::vector<std::string>{"a", "b", "c"});
  CHECK_THROWS_AS(parse_formula("vars: a; dep(a;b)"), ParseError);
  CHECK_THROWS_AS(parse_formula("vars: a, a; a"), ParseError);
}

TEST_CASE("syntax errors carry a position") {
  CHECK_THROWS_AS(parse_formula("dep(x1 x2)"), ParseError);  // missing ';'
  CHECK_THROWS_AS(parse_formula("dep(x1; x2, x2)"), ParseError);
  CHECK_THROWS_AS(parse_formula("x1 & + x2"), ParseError);
  CHECK_THROWS_AS(parse_formula("x1 &"), ParseError);
  try {
    parse_formula("x1 &\n@");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 1);
  }
}

TEST_CASE("pretty printing reaches a fixpoint after one pass") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const std::string text = oracle::random_full_text(rng);
    const Formula f = parse_formula(text);
    const std::string once = f.to_string();
    CHECK(parse_formula(once).to_string() == once);
  }
}

TEST_CASE("disjunction splitting shares one variable order") {
  const auto disjuncts = parse_disjunction("dep(x1;x2) \\/ x3 \\/ !x1");
  REQUIRE(disjuncts.size() == 3);
  for (const auto& d : disjuncts)
    CHECK(d.variable_order() == std::vector<std::string>{"x1", "x2", "x3"});
  CHECK_THROWS_AS(parse_formula("x1 \\/ x2"), ParseError);
}

TEST_CASE("reduction of the running example") {
  const Formula f = parse_formula("x3 & dep(x1; x2, x3) & dep(x4; x2, x3)");
  const ReducedFormula rf = reduce(f);
  CHECK(!rf.contradictory());
  CHECK(rf.forced_true() == std::vector<int>{0});  // x3 occurs first
  CHECK(rf.forced_false().empty());
  CHECK(rf.free_vars() == std::vector<std::string>{"x1", "x2", "x4"});
  REQUIRE(rf.atoms().size() == 2);
  CHECK(rf.atoms()[0].determining == std::vector<int>{0});
  CHECK(rf.atoms()[0].determined == std::vector<int>{1});
  CHECK(rf.atoms()[1].determining == std::vector<int>{2});
  CHECK(rf.atoms()[1].determined == std::vector<int>{1});
}

TEST_CASE("contradictions and constants") {
  CHECK(reduce(parse_formula("x1 & !x1")).contradictory());
  CHECK(reduce(parse_formula("dep(x1;x2) & 0")).contradictory());
  const ReducedFormula rf = reduce(parse_formula("dep(x1;x2) & 1"));
  CHECK(!rf.contradictory());
  CHECK(rf.forced_true().empty());
  CHECK(rf.forced_false().empty());
  CHECK(rf.atoms().size() == 1);
}

TEST_CASE("atoms emptied by forcing are dropped; empty determining kept") {
  const ReducedFormula dropped = reduce(parse_formula("x2 & dep(x1; x2)"));
  CHECK(dropped.atoms().empty());
  const ReducedFormula constant = reduce(parse_formula("dep(; x1)"));
  REQUIRE(constant.atoms().size() == 1);
  CHECK(constant.atoms()[0].determining.empty());
  const ReducedFormula dup = reduce(parse_formula("dep(x1;x2) & dep(x1;x2)"));
  CHECK(dup.atoms().size() == 1);
}

TEST_CASE("expanding the running example team") {
  const Formula f =
      parse_formula("vars: x1, x2, x3, x4; x3 & dep(x1; x2, x3) & dep(x4; x2, x3)");
  const ReducedFormula rf = reduce(f);
  CHECK(rf.free_vars() == std::vector<std::string>{"x1", "x2", "x4"});
  const Team reduced_team = Team::parse("000,001");
  const Team expanded = rf.expand(reduced_team);
  CHECK(expanded == Team::parse("0010,0011"));
  CHECK(expanded.size() == reduced_team.size());
  CHECK_THROWS_AS(rf.expand(Team::parse("00")), std::invalid_argument);
}

TEST_CASE("expansion is the identity without forced variables") {
  const ReducedFormula rf = reduce(parse_formula("dep(x1;x2)"));
  const Team t = Team::parse("00,01,11");
  CHECK(rf.expand(t) == t);
}

TEST_CASE("reduction soundness against the inductive semantics") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 60; ++trial) {
    const Formula f = parse_formula(oracle::random_full_text(rng, 3));
    const ReducedFormula rf = reduce(f);
    const int n = f.var_count();
    const std::uint32_t space = std::uint32_t{1} << n;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << space); ++mask) {
      const Team team = oracle::mask_to_team(static_cast<std::uint32_t>(mask), n);
      const bool naive = oracle::naive_satisfies(f, team);
      bool via_reduction = false;
      if (!rf.contradictory()) {
        bool forced_ok = true;
        for (const auto& m : team.members()) {
          for (int v : rf.forced_true())
            if (!m.bit(v + 1)) forced_ok = false;
          for (int v : rf.forced_false())
            if (m.bit(v + 1)) forced_ok = false;
        }
        if (forced_ok) {
          // Restrict to the free variables; distinct members stay distinct.
          Team restricted(rf.free_count());
          for (const auto& m : team.members()) {
            std::uint64_t value = 0;
            for (const auto& name : rf.free_vars()) {
              int v = 0;
              while (f.variable_order()[static_cast<std::size_t>(v)] != name) ++v;
              value = (value << 1) | static_cast<std::uint64_t>(m.bit(v + 1));
            }
            restricted.insert(Assignment(value, rf.free_count()));
          }
          via_reduction = rf.model_check(restricted);
          if (via_reduction) {
            // Round trip: expanding the restriction recovers the team.
            CHECK(rf.expand(restricted) == team);
          }
        }
      }
      CHECK(naive == via_reduction);
    }
  }
}

TEST_CASE("chain family text") {
  CHECK(chain_formula_text(2) == "dep(x1;x2)");
  CHECK(chain_formula_text(3) == "dep(x1;x3) & dep(x2;x3)");
  CHECK(parse_formula(chain_formula_text(4)).dep_atoms().size() == 3);
  CHECK_THROWS_AS(chain_formula_text(1), std::invalid_argument);
}

TEST_CASE("more than 64 variables is rejected") {
  std::string text = "vars: ";
  for (int i = 1; i <= 65; ++i) {
    if (i > 1) text += ", ";
    text += "v" + std::to_string(i);
  }
  text += "; 1";
  CHECK_THROWS_AS(parse_formula(text), ParseError);
}
