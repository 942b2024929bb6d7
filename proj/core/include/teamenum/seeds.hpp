#pragma once

#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <vector>

#include "teamenum/bit_trie.hpp"
#include "teamenum/formula.hpp"
#include "teamenum/team.hpp"

namespace teamenum {

BitKey assignment_key(const Assignment& a);
Assignment assignment_from_key(const BitKey& key, int width);
// A k-team packs to k*width bits, members in ascending order, so equal-size
// teams compare lexicographically as keys.
BitKey team_key(const Team& t);
Team team_from_key(const BitKey& key, int width);

// Trie-backed set of equal-width assignments, iterated in ascending order.
class AssignmentSet {
 public:
  explicit AssignmentSet(int width) : width_(width), trie_(width) {}

  int width() const { return width_; }
  std::size_t size() const { return trie_.size(); }
  bool empty() const { return trie_.empty(); }

  bool insert(const Assignment& a, StepCounter* counter = nullptr) {
    return trie_.insert(assignment_key(a), 0, counter);
  }
  bool contains(const Assignment& a, StepCounter* counter = nullptr) const {
    return trie_.contains(assignment_key(a), counter);
  }
  std::optional<Assignment> first(StepCounter* counter = nullptr) const;
  std::optional<Assignment> next_after(const Assignment& a,
                                       StepCounter* counter = nullptr) const;
  std::vector<Assignment> to_vector() const;

 private:
  int width_;
  BitTrie trie_;
};

// Trie-backed set of equal-cardinality teams with ascending lexicographic
// iteration and O(k*n) deletion.
class SeedSet {
 public:
  SeedSet(int level, int width)
      : level_(level), width_(width), trie_(level * width) {}

  int level() const { return level_; }
  int width() const { return width_; }
  std::size_t size() const { return trie_.size(); }
  bool empty() const { return trie_.empty(); }

  bool insert(const Team& t, StepCounter* counter = nullptr);
  bool erase(const Team& t, StepCounter* counter = nullptr);
  bool contains(const Team& t, StepCounter* counter = nullptr) const;
  std::optional<Team> first(StepCounter* counter = nullptr) const;
  std::optional<Team> next_after(const Team& t,
                                 StepCounter* counter = nullptr) const;
  std::vector<Team> to_vector() const;

 private:
  int level_;
  int width_;
  BitTrie trie_;
};

// Extension index for one level k: maps each satisfying zero-containing
// (k-1)-team to the ascending list of assignments that extend it to a
// satisfying k-team. Every listed extension exceeds the key's maximum.
class SeedIndex {
 public:
  SeedIndex(int level, int width)
      : level_(level), width_(width), outer_((level - 1) * width) {}

  int level() const { return level_; }
  int width() const { return width_; }
  std::size_t entry_count() const { return outer_.size(); }

  // Creates an empty extension list if the key is new.
  AssignmentSet& extensions(const Team& key, StepCounter* counter = nullptr);
  const AssignmentSet* find(const Team& key,
                            StepCounter* counter = nullptr) const;
  std::optional<Team> first_key(StepCounter* counter = nullptr) const;
  std::optional<Team> next_key(const Team& key,
                               StepCounter* counter = nullptr) const;

 private:
  int level_;
  int width_;
  BitTrie outer_;  // payload = index into lists_
  std::deque<AssignmentSet> lists_;
};

enum class SeedProgress { Progressed, LevelComplete };

// Resumable construction of one level of zero-containing satisfying teams.
// Level 2 scans nonzero assignments with the pair check; level k >= 3
// combines extension pairs of the frozen previous index, keeping those
// whose difference passes the level-2 pair list.
class SeedStepper {
 public:
  // Level-2 construction.
  explicit SeedStepper(const ReducedFormula& rf, StepCounter* counter = nullptr);

  // Level k >= 3; `previous` is the complete index of level k-1 and
  // `pair_index` the complete level-2 index.
  SeedStepper(const ReducedFormula& rf, int level,
              std::shared_ptr<const SeedIndex> previous,
              std::shared_ptr<const SeedIndex> pair_index,
              StepCounter* counter = nullptr);

  int level() const { return level_; }
  bool complete() const { return complete_; }
  std::uint64_t inner_iterations() const { return inner_iterations_; }

  // Runs up to `budget` innermost iterations; throws std::logic_error once
  // the level is complete.
  SeedProgress advance(std::uint64_t budget);
  void run_to_completion();

  // The results below require a complete level.
  const SeedSet& seeds() const;
  SeedSet take_seeds();
  std::shared_ptr<SeedIndex> take_index();

 private:
  bool seek_triple(bool resume_s);
  void open_entry();
  Team current_prefix() const;

  ReducedFormula rf_;
  int level_;
  int width_;
  StepCounter* counter_;

  std::shared_ptr<const SeedIndex> previous_;
  std::shared_ptr<const SeedIndex> pair_index_;
  const AssignmentSet* pair_list_ = nullptr;

  std::shared_ptr<SeedIndex> building_;
  SeedSet seeds_;

  // Cursor. Level 2 uses scan_; levels >= 3 use (outer_, r_, s_).
  std::optional<Assignment> scan_;
  std::optional<Team> outer_;
  const AssignmentSet* outer_list_ = nullptr;
  AssignmentSet* entry_ = nullptr;
  std::optional<Assignment> r_;
  std::optional<Assignment> s_;

  bool complete_ = false;
  std::uint64_t inner_iterations_ = 0;
};

// Complete level-2 index: the extension list of the zero singleton holds
// every nonzero s with {0, s} satisfying.
SeedIndex build_pair_seeds(const ReducedFormula& rf);

inline SeedProgress advance_seed_construction(SeedStepper& stepper,
                                              std::uint64_t budget) {
  return stepper.advance(budget);
}

// Copy of the finished level's team set, ascending lexicographic order.
inline SeedSet seeds_at_level(const SeedStepper& stepper) {
  return stepper.seeds();
}

}  // namespace teamenum
