#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "teamenum/team.hpp"

namespace teamenum {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// AST of a conjunctive formula over literals, constants and dependence
// atoms. The variable order is the declared `vars:` header order, or the
// order of first occurrence in the text; it fixes the bit layout of every
// assignment for this formula.
class Formula {
 public:
  enum class NodeKind : std::uint8_t { Var, NegVar, ConstFalse, ConstTrue, And, Dep };

  struct Node {
    NodeKind kind;
    int var = -1;   // Var / NegVar: index into variable_order()
    int lhs = -1;   // And
    int rhs = -1;   // And
    int atom = -1;  // Dep: index into dep_atoms()
  };

  // Determining and determined variable sets of one dependence atom,
  // as indices into variable_order(). Either side may be empty.
  struct DepAtom {
    std::vector<int> determining;
    std::vector<int> determined;
  };

  const std::vector<std::string>& variable_order() const { return variable_order_; }
  int var_count() const { return static_cast<int>(variable_order_.size()); }
  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<DepAtom>& dep_atoms() const { return dep_atoms_; }
  int root() const { return root_; }

  // Canonical text with a vars: header; parsing it back reproduces the
  // same AST and variable order.
  std::string to_string() const;

 private:
  friend class Parser;
  std::vector<std::string> variable_order_;
  std::vector<Node> nodes_;
  std::vector<DepAtom> dep_atoms_;
  int root_ = -1;
};

// Parses a single conjunctive formula. Rejects top-level disjunction.
Formula parse_formula(std::string_view text);

// Parses `conj (\/ conj)*` with an optional shared vars: header. All
// returned formulas carry the same global variable order.
std::vector<Formula> parse_disjunction(std::string_view text);

// Text of the k-variable chain instance dep(x1;xk) & ... & dep(x_{k-1};xk).
std::string chain_formula_text(int k);

struct ReducedAtom {
  std::vector<int> determining;  // positions in the free-variable space
  std::vector<int> determined;   // non-empty
  std::uint64_t determining_mask = 0;
  std::uint64_t determined_mask = 0;

  friend bool operator==(const ReducedAtom&, const ReducedAtom&) = default;
};

// Canonical conjunction-of-dependence-atoms form: positively forced
// variables, negatively forced variables, and atoms over the remaining
// free variables. Satisfying teams of the original formula are exactly
// the expansions of satisfying teams of the atom conjunction.
class ReducedFormula {
 public:
  bool contradictory() const { return contradictory_; }
  const std::vector<std::string>& original_order() const { return original_order_; }
  int original_count() const { return static_cast<int>(original_order_.size()); }

  // Original-order indices of forced variables, ascending.
  const std::vector<int>& forced_true() const { return forced_true_; }
  const std::vector<int>& forced_false() const { return forced_false_; }

  const std::vector<std::string>& free_vars() const { return free_names_; }
  int free_count() const { return static_cast<int>(free_names_.size()); }
  const std::vector<ReducedAtom>& atoms() const { return atoms_; }

  // Size proxy used by delay bounds: node count plus variable occurrences.
  std::uint64_t size_measure() const { return size_measure_; }

  // True iff every 2-subteam of t satisfies every atom. Singletons and the
  // empty team always pass. t ranges over the free-variable space.
  bool model_check(const Team& t, StepCounter* counter = nullptr) const;

  // True iff {0, s} satisfies every atom, decided by the classical
  // evaluation of (OR determining) OR (AND NOT determined) per atom.
  bool pair_satisfies(const Assignment& s, StepCounter* counter = nullptr) const;

  // Free-space team -> team over the original variable order, forced bits
  // filled in. Order- and cardinality-preserving.
  Team expand(const Team& t, StepCounter* counter = nullptr) const;

  // Expansion of the all-zero free assignment (the forced pattern).
  Assignment zero_expansion() const;

 private:
  friend ReducedFormula reduce(const Formula& f);
  std::vector<std::string> original_order_;
  std::vector<int> forced_true_;
  std::vector<int> forced_false_;
  std::vector<int> free_positions_;  // original index per free position
  std::vector<std::string> free_names_;
  std::vector<ReducedAtom> atoms_;
  bool contradictory_ = false;
  std::uint64_t size_measure_ = 0;
  std::uint64_t forced_pattern_ = 0;  // over the original order
};

ReducedFormula reduce(const Formula& f);

inline bool model_check(const ReducedFormula& rf, const Team& t,
                        StepCounter* counter = nullptr) {
  return rf.model_check(t, counter);
}

inline bool pair_satisfies(const ReducedFormula& rf, const Assignment& s,
                           StepCounter* counter = nullptr) {
  return rf.pair_satisfies(s, counter);
}

inline Team expand_team(const ReducedFormula& rf, const Team& t,
                        StepCounter* counter = nullptr) {
  return rf.expand(t, counter);
}

}  // namespace teamenum
