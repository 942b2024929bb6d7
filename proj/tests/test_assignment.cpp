#include <random>

#include "doctest.h"
#include "teamenum/assignment.hpp"

using namespace teamenum;

TEST_CASE("first assignment is the zero vector") {
  CHECK(first_assignment(2).to_string() == "00");
  CHECK(first_assignment(3).to_string() == "000");
  CHECK(first_assignment(1).to_string() == "0");
}

TEST_CASE("next assignment is binary increment") {
  Assignment s = first_assignment(2);
  CHECK(next_assignment(s)->to_string() == "01");
  CHECK(next_assignment(Assignment::from_string("01"))->to_string() == "10");
  CHECK(!next_assignment(Assignment::from_string("11")).has_value());
}

TEST_CASE("traversal visits exactly 2^n assignments") {
  for (int n = 1; n <= 10; ++n) {
    std::uint64_t count = 1;
    std::optional<Assignment> s = first_assignment(n);
    while ((s = next_assignment(*s))) ++count;
    CHECK(count == (std::uint64_t{1} << n));
  }
}

TEST_CASE("last one position") {
  CHECK(last_one_position(Assignment::from_string("110")) == 2);
  CHECK(last_one_position(Assignment::from_string("100")) == 1);
  CHECK(last_one_position(Assignment::from_string("001")) == 3);
  CHECK_THROWS_AS(last_one_position(Assignment(0, 3)), std::invalid_argument);
}

TEST_CASE("string round trip and bit access") {
  const Assignment a = Assignment::from_string("1011");
  CHECK(a.value() == 11);
  CHECK(a.to_string() == "1011");
  CHECK(a.bit(1));
  CHECK(!a.bit(2));
  CHECK(a.bit(4));
  CHECK_THROWS_AS(Assignment::from_string("10x1"), std::invalid_argument);
}

TEST_CASE("unit vectors and GF(2) addition") {
  CHECK(unit_assignment(1, 3).to_string() == "100");
  CHECK(unit_assignment(3, 3).to_string() == "001");
  const Assignment a = Assignment::from_string("101");
  const Assignment b = Assignment::from_string("011");
  CHECK((a ^ b).to_string() == "110");
  CHECK_THROWS_AS(a ^ Assignment::from_string("01"), std::invalid_argument);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 16)(rng);
    const std::uint64_t bound = (std::uint64_t{1} << n) - 1;
    const Assignment x(std::uniform_int_distribution<std::uint64_t>(0, bound)(rng), n);
    const Assignment y(std::uniform_int_distribution<std::uint64_t>(0, bound)(rng), n);
    CHECK(((x ^ y) ^ y) == x);
  }
}

TEST_CASE("order equals integer order of the written numeral") {
  CHECK(Assignment::from_string("001") < Assignment::from_string("010"));
  CHECK(Assignment::from_string("011") < Assignment::from_string("100"));
}
