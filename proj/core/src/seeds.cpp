#include "teamenum/seeds.hpp"

#include <stdexcept>
#include <utility>

namespace teamenum {

BitKey assignment_key(const Assignment& a) {
  BitKey key = BitKey::zeros(a.width());
  for (int i = 0; i < a.width(); ++i)
    if (a.bit(i + 1)) key.set_bit(i, true);
  return key;
}

Assignment assignment_from_key(const BitKey& key, int width) {
  std::uint64_t value = 0;
  for (int i = 0; i < width; ++i)
    value = (value << 1) | static_cast<std::uint64_t>(key.bit(i));
  return Assignment(value, width);
}

BitKey team_key(const Team& t) {
  const int n = t.width();
  BitKey key = BitKey::zeros(static_cast<int>(t.size()) * n);
  int offset = 0;
  for (const Assignment& m : t.members()) {
    for (int i = 0; i < n; ++i)
      if (m.bit(i + 1)) key.set_bit(offset + i, true);
    offset += n;
  }
  return key;
}

Team team_from_key(const BitKey& key, int width) {
  Team out(width);
  if (width == 0) {
    out.push_max(Assignment(0, 0));
    return out;
  }
  for (int offset = 0; offset < key.bits; offset += width) {
    std::uint64_t value = 0;
    for (int i = 0; i < width; ++i)
      value = (value << 1) | static_cast<std::uint64_t>(key.bit(offset + i));
    out.push_max(Assignment(value, width));
  }
  return out;
}

std::optional<Assignment> AssignmentSet::first(StepCounter* counter) const {
  auto key = trie_.min_key(counter);
  if (!key) return std::nullopt;
  return assignment_from_key(*key, width_);
}

std::optional<Assignment> AssignmentSet::next_after(const Assignment& a,
                                                    StepCounter* counter) const {
  auto key = trie_.next_key(assignment_key(a), counter);
  if (!key) return std::nullopt;
  return assignment_from_key(*key, width_);
}

std::vector<Assignment> AssignmentSet::to_vector() const {
  std::vector<Assignment> out;
  out.reserve(size());
  for (auto a = first(); a; a = next_after(*a)) out.push_back(*a);
  return out;
}

bool SeedSet::insert(const Team& t, StepCounter* counter) {
  if (static_cast<int>(t.size()) != level_ || t.width() != width_)
    throw std::invalid_argument("seed set level/width mismatch");
  return trie_.insert(team_key(t), 0, counter);
}

bool SeedSet::erase(const Team& t, StepCounter* counter) {
  if (static_cast<int>(t.size()) != level_ || t.width() != width_) return false;
  return trie_.erase(team_key(t), counter);
}

bool SeedSet::contains(const Team& t, StepCounter* counter) const {
  if (static_cast<int>(t.size()) != level_ || t.width() != width_) return false;
  return trie_.contains(team_key(t), counter);
}

std::optional<Team> SeedSet::first(StepCounter* counter) const {
  auto key = trie_.min_key(counter);
  if (!key) return std::nullopt;
  return team_from_key(*key, width_);
}

std::optional<Team> SeedSet::next_after(const Team& t,
                                        StepCounter* counter) const {
  auto key = trie_.next_key(team_key(t), counter);
  if (!key) return std::nullopt;
  return team_from_key(*key, width_);
}

std::vector<Team> SeedSet::to_vector() const {
  std::vector<Team> out;
  out.reserve(size());
  for (auto t = first(); t; t = next_after(*t)) out.push_back(*t);
  return out;
}

AssignmentSet& SeedIndex::extensions(const Team& key, StepCounter* counter) {
  const BitKey k = team_key(key);
  if (const std::int32_t* slot = outer_.payload(k, counter))
    return lists_[static_cast<std::size_t>(*slot)];
  const std::int32_t idx = static_cast<std::int32_t>(lists_.size());
  lists_.emplace_back(width_);
  outer_.insert(k, idx, counter);
  return lists_.back();
}

const AssignmentSet* SeedIndex::find(const Team& key,
                                     StepCounter* counter) const {
  const std::int32_t* slot = outer_.payload(team_key(key), counter);
  return slot ? &lists_[static_cast<std::size_t>(*slot)] : nullptr;
}

std::optional<Team> SeedIndex::first_key(StepCounter* counter) const {
  auto key = outer_.min_key(counter);
  if (!key) return std::nullopt;
  return team_from_key(*key, width_);
}

std::optional<Team> SeedIndex::next_key(const Team& key,
                                        StepCounter* counter) const {
  auto next = outer_.next_key(team_key(key), counter);
  if (!next) return std::nullopt;
  return team_from_key(*next, width_);
}

SeedStepper::SeedStepper(const ReducedFormula& rf, StepCounter* counter)
    : rf_(rf),
      level_(2),
      width_(rf.free_count()),
      counter_(counter),
      building_(std::make_shared<SeedIndex>(2, rf.free_count())),
      seeds_(2, rf.free_count()) {
  if (rf.contradictory())
    throw std::invalid_argument("seed construction on contradictory formula");
  Team zero_team(width_);
  zero_team.push_max(Assignment(0, width_));
  entry_ = &building_->extensions(zero_team, counter_);
  scan_ = next_assignment(Assignment(0, width_));
  if (!scan_) complete_ = true;
}

SeedStepper::SeedStepper(const ReducedFormula& rf, int level,
                         std::shared_ptr<const SeedIndex> previous,
                         std::shared_ptr<const SeedIndex> pair_index,
                         StepCounter* counter)
    : rf_(rf),
      level_(level),
      width_(rf.free_count()),
      counter_(counter),
      previous_(std::move(previous)),
      pair_index_(std::move(pair_index)),
      building_(std::make_shared<SeedIndex>(level, rf.free_count())),
      seeds_(level, rf.free_count()) {
  if (rf.contradictory())
    throw std::invalid_argument("seed construction on contradictory formula");
  if (level < 3) throw std::invalid_argument("stepped level must be >= 3");
  if (!previous_ || previous_->level() != level - 1)
    throw std::invalid_argument("previous index level mismatch");
  Team zero_team(width_);
  zero_team.push_max(Assignment(0, width_));
  pair_list_ = pair_index_ ? pair_index_->find(zero_team) : nullptr;
  if (pair_list_ == nullptr)
    throw std::invalid_argument("missing level-2 pair list");
  if (!seek_triple(false)) complete_ = true;
}

Team SeedStepper::current_prefix() const {
  Team prefix = *outer_;
  prefix.push_max(*r_);
  return prefix;
}

void SeedStepper::open_entry() {
  entry_ = &building_->extensions(current_prefix(), counter_);
}

// Moves the cursor to the next (outer, r, s) triple. With resume_s the
// current s is advanced first; otherwise the cursor enters the s-range of
// the current r. Opens the extension entry whenever r moves.
bool SeedStepper::seek_triple(bool resume_s) {
  if (resume_s) {
    s_ = outer_list_->next_after(*s_, counter_);
    if (s_) return true;
  } else if (!outer_) {
    outer_ = previous_->first_key(counter_);
    if (!outer_) return false;
    outer_list_ = previous_->find(*outer_, counter_);
    r_ = outer_list_->first(counter_);
    while (!r_) {
      outer_ = previous_->next_key(*outer_, counter_);
      if (!outer_) return false;
      outer_list_ = previous_->find(*outer_, counter_);
      r_ = outer_list_->first(counter_);
    }
    open_entry();
    s_ = outer_list_->next_after(*r_, counter_);
    if (s_) return true;
  }
  // Advance r (and outer when r is exhausted) until an s-range opens.
  while (true) {
    r_ = outer_list_->next_after(*r_, counter_);
    while (!r_) {
      outer_ = previous_->next_key(*outer_, counter_);
      if (!outer_) return false;
      outer_list_ = previous_->find(*outer_, counter_);
      r_ = outer_list_->first(counter_);
    }
    open_entry();
    s_ = outer_list_->next_after(*r_, counter_);
    if (s_) return true;
  }
}

SeedProgress SeedStepper::advance(std::uint64_t budget) {
  if (complete_) throw std::logic_error("seed level already complete");
  while (budget > 0) {
    if (level_ == 2) {
      const Assignment& s = *scan_;
      if (rf_.pair_satisfies(s, counter_)) {
        entry_->insert(s, counter_);
        Team pair(width_);
        pair.push_max(Assignment(0, width_));
        pair.push_max(s);
        seeds_.insert(pair, counter_);
      }
      ++inner_iterations_;
      --budget;
      scan_ = next_assignment(s);
      if (!scan_) {
        complete_ = true;
        return SeedProgress::LevelComplete;
      }
    } else {
      const Assignment diff = *r_ ^ *s_;
      tick(counter_);
      if (pair_list_->contains(diff, counter_)) {
        entry_->insert(*s_, counter_);
        Team seed = current_prefix();
        seed.push_max(*s_);
        seeds_.insert(seed, counter_);
      }
      ++inner_iterations_;
      --budget;
      if (!seek_triple(true)) {
        complete_ = true;
        return SeedProgress::LevelComplete;
      }
    }
  }
  return SeedProgress::Progressed;
}

void SeedStepper::run_to_completion() {
  while (!complete_) advance(~std::uint64_t{0});
}

const SeedSet& SeedStepper::seeds() const {
  if (!complete_) throw std::logic_error("seed level incomplete");
  return seeds_;
}

SeedSet SeedStepper::take_seeds() {
  if (!complete_) throw std::logic_error("seed level incomplete");
  return std::move(seeds_);
}

std::shared_ptr<SeedIndex> SeedStepper::take_index() {
  if (!complete_) throw std::logic_error("seed level incomplete");
  return std::move(building_);
}

SeedIndex build_pair_seeds(const ReducedFormula& rf) {
  SeedStepper stepper(rf);
  stepper.run_to_completion();
  return std::move(*stepper.take_index());
}

}  // namespace teamenum
