#include <random>

#include "doctest.h"
#include "support/oracle.hpp"
#include "teamenum/formula.hpp"

using namespace teamenum;

namespace {

const ReducedFormula& chain3() {
  static const ReducedFormula rf =
      reduce(parse_formula("vars: x1, x2, x3; dep(x1;x3) & dep(x2;x3)"));
  return rf;
}

}  // namespace

TEST_CASE("model check on 2-teams") {
  const ReducedFormula rf = reduce(parse_formula("dep(x1;x2)"));
  CHECK(rf.model_check(Team::parse("00,10")));
  CHECK(!rf.model_check(Team::parse("00,01")));
  CHECK(rf.model_check(Team::parse("01")));
  CHECK(rf.model_check(Team(2)));  // empty team
  CHECK_THROWS_AS(rf.model_check(Team::parse("000")), std::invalid_argument);
}

TEST_CASE("pair check via the classical shortcut") {
  CHECK(chain3().pair_satisfies(Assignment::from_string("111")));
  CHECK(!chain3().pair_satisfies(Assignment::from_string("011")));
  CHECK(chain3().pair_satisfies(Assignment::from_string("100")));
  CHECK_THROWS_AS(chain3().pair_satisfies(Assignment(0, 3)), std::invalid_argument);
}

TEST_CASE("pair check agrees with the model check on {0, s}") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const ReducedFormula rf =
        reduce(parse_formula(oracle::random_reduced_text(rng)));
    const int n = rf.free_count();
    for (std::uint64_t v = 1; v < (std::uint64_t{1} << n); ++v) {
      Team pair(n);
      pair.push_max(Assignment(0, n));
      pair.push_max(Assignment(v, n));
      CHECK(rf.pair_satisfies(Assignment(v, n)) == rf.model_check(pair));
    }
  }
}

TEST_CASE("pairwise check agrees with the naive all-pairs semantics") {
  std::mt19937 rng(123);
  for (int trial = 0; trial < 25; ++trial) {
    const Formula f = parse_formula(oracle::random_reduced_text(rng, 3));
    const ReducedFormula rf = reduce(f);
    const int n = rf.free_count();
    const std::uint32_t space = std::uint32_t{1} << n;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << space); ++mask) {
      const Team team = oracle::mask_to_team(static_cast<std::uint32_t>(mask), n);
      CHECK(rf.model_check(team) == oracle::naive_atoms_satisfies(rf, team));
    }
  }
}

TEST_CASE("satisfaction is downward closed") {
  std::mt19937 rng(321);
  for (int trial = 0; trial < 15; ++trial) {
    const ReducedFormula rf =
        reduce(parse_formula(oracle::random_reduced_text(rng, 3)));
    const int n = rf.free_count();
    const std::uint32_t space = std::uint32_t{1} << n;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << space); ++mask) {
      const Team team = oracle::mask_to_team(static_cast<std::uint32_t>(mask), n);
      if (!rf.model_check(team)) continue;
      // Removing any single member keeps satisfaction.
      for (const auto& m : team.members()) {
        Team smaller = team;
        smaller.erase(m);
        CHECK(rf.model_check(smaller));
      }
    }
  }
}

TEST_CASE("satisfaction is invariant under shifts") {
  std::mt19937 rng(555);
  for (int trial = 0; trial < 200; ++trial) {
    const ReducedFormula rf =
        reduce(parse_formula(oracle::random_reduced_text(rng)));
    const int n = rf.free_count();
    const std::uint64_t bound = (std::uint64_t{1} << n) - 1;
    std::uniform_int_distribution<std::uint64_t> pick(0, bound);
    Team t(n);
    for (int i = 0; i < 4; ++i) t.insert(Assignment(pick(rng), n));
    const Assignment z(pick(rng), n);
    CHECK(rf.model_check(t) == rf.model_check(apply_shift(z, t)));
  }
}

TEST_CASE("group action laws hold") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 4)(rng);
    const std::uint64_t bound = (std::uint64_t{1} << n) - 1;
    std::uniform_int_distribution<std::uint64_t> pick(0, bound);
    Team t(n);
    for (int i = 0; i < 3; ++i) t.insert(Assignment(pick(rng), n));
    const Assignment g(pick(rng), n), h(pick(rng), n);
    CHECK(apply_shift(Assignment(0, n), t) == t);
    CHECK(apply_shift(g ^ h, t) == apply_shift(g, apply_shift(h, t)));
  }
}
