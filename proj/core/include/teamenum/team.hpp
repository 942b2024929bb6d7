#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "teamenum/assignment.hpp"
#include "teamenum/step_counter.hpp"

namespace teamenum {

// A duplicate-free set of equal-width assignments, stored in strictly
// ascending order at all times.
class Team {
 public:
  Team() = default;
  explicit Team(int width) : width_(width) {}

  // Sorts and validates; throws on duplicates or mixed widths.
  static Team of(int width, std::vector<Assignment> members);

  int width() const { return width_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  std::span<const Assignment> members() const { return members_; }
  const Assignment& member(std::size_t i) const { return members_[i]; }
  const Assignment& max() const { return members_.back(); }
  const Assignment& min() const { return members_.front(); }

  bool contains(const Assignment& a, StepCounter* counter = nullptr) const;

  // Ordered insert; returns false if already present.
  bool insert(const Assignment& a);
  bool erase(const Assignment& a);

  // Back operations used by the fixed-size walk: the new maximum must
  // exceed every remaining member.
  void push_max(const Assignment& a);
  void pop_max();
  void replace_max(const Assignment& a);

  friend bool operator==(const Team& a, const Team& b) = default;

  // Comma-separated fixed-width bitstrings, ascending.
  std::string to_string() const;
  static Team parse(const std::string& text);

 private:
  int width_ = 0;
  std::vector<Assignment> members_;
};

enum class OrderKind { Size, Lex, SizeThenLex };

// compare_teams(a, b, Size) leaves distinct equal-cardinality teams
// unordered; Lex and SizeThenLex are total.
std::partial_ordering compare_teams(const Team& a, const Team& b, OrderKind order);

// Strict lexicographic comparison of the sorted member sequences.
bool lex_less(const Team& a, const Team& b);

// Memberwise GF(2) translation; the result is re-sorted.
Team apply_shift(const Assignment& z, const Team& t, StepCounter* counter = nullptr);

// |a triangle b|
std::size_t symmetric_difference_size(const Team& a, const Team& b);

}  // namespace teamenum
