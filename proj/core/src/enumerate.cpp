#include "teamenum/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "teamenum/orbit.hpp"
#include "teamenum/seeds.hpp"

namespace teamenum {

namespace {

class EmptyStream final : public SolutionStream {
 private:
  std::optional<Team> do_next() override { return std::nullopt; }
};

class InterleavedOrbitStream final : public SolutionStream {
 public:
  InterleavedOrbitStream(ReducedFormula rf, EnumConfig cfg)
      : rf_(std::move(rf)),
        cfg_(cfg),
        n_(rf_.free_count()),
        max_size_(clamp_max_size(n_, cfg.max_size)),
        seeds_(1, n_) {}

 private:
  std::optional<Team> do_next() override {
    if (!started_) start();
    while (true) {
      if (done_) return std::nullopt;
      if (!orbit_) {
        std::optional<Team> seed = seeds_.first(&counter_);
        if (!seed) {
          if (!advance_level()) {
            done_ = true;
            return std::nullopt;
          }
          continue;
        }
        orbit_.emplace(std::move(*seed), &counter_);
      }
      std::optional<Team> team = orbit_->next();
      if (!team) {
        orbit_.reset();
        continue;
      }
      seeds_.erase(*team, &counter_);
      run_construction_budget();
      return rf_.expand(*team, &counter_);
    }
  }

  void start() {
    started_ = true;
    if (rf_.contradictory() || max_size_ == 0) {
      done_ = true;
      return;
    }
    Team zero_team(n_);
    zero_team.push_max(Assignment(0, n_));
    seeds_.insert(zero_team);
    if (max_size_ >= 2) stepper_.emplace(rf_, &counter_);
  }

  // Finish constructing the next level's seeds and switch to them.
  bool advance_level() {
    if (!stepper_) return false;
    while (!stepper_->complete()) stepper_->advance(~std::uint64_t{0});
    seeds_ = stepper_->take_seeds();
    std::shared_ptr<SeedIndex> built = stepper_->take_index();
    if (level_ == 1) pair_index_ = built;
    previous_ = std::move(built);
    stepper_.reset();
    ++level_;
    if (seeds_.empty()) return false;
    if (level_ + 1 <= max_size_)
      stepper_.emplace(rf_, static_cast<int>(level_) + 1, previous_,
                       pair_index_, &counter_);
    return true;
  }

  void run_construction_budget() {
    if (!stepper_ || stepper_->complete()) return;
    const std::uint64_t budget = cfg_.interleave_budget != 0
                                     ? cfg_.interleave_budget
                                     : level_ + 1;
    stepper_->advance(budget);
  }

  ReducedFormula rf_;
  EnumConfig cfg_;
  int n_;
  std::uint64_t max_size_;
  std::uint64_t level_ = 1;
  SeedSet seeds_;
  std::shared_ptr<const SeedIndex> previous_;
  std::shared_ptr<const SeedIndex> pair_index_;
  std::optional<SeedStepper> stepper_;
  std::optional<OrbitEnumerator> orbit_;
  bool started_ = false;
  bool done_ = false;
};

}  // namespace

std::unique_ptr<SolutionStream> enumerate_orbit_interleaved(ReducedFormula rf,
                                                            EnumConfig cfg) {
  if (rf.contradictory()) return std::make_unique<EmptyStream>();
  return std::make_unique<InterleavedOrbitStream>(std::move(rf), cfg);
}

PolyspaceStream::PolyspaceStream(ReducedFormula rf, EnumConfig cfg)
    : rf_(std::move(rf)),
      max_size_(clamp_max_size(rf_.free_count(), cfg.max_size)),
      team_(rf_.free_count()) {
  if (rf_.contradictory() || max_size_ == 0) done_ = true;
}

void PolyspaceStream::note_team_size() {
  stats_.live_teams = 1;
  stats_.peak_live_teams = 1;
  stats_.peak_assignments =
      std::max(stats_.peak_assignments, team_.size() + 1);
}

std::optional<Team> PolyspaceStream::do_next() {
  const int n = rf_.free_count();
  while (!done_) {
    if (!level_active_) {
      team_ = Team(n);
      team_.push_max(first_assignment(n));
      level_active_ = true;
      resume_after_output_ = false;
      note_team_size();
    }
    while (true) {
      bool satisfies;
      if (resume_after_output_) {
        // The emitted team satisfied; continue past the output line.
        satisfies = true;
        resume_after_output_ = false;
      } else {
        satisfies = rf_.model_check(team_, &counter_);
        if (team_.size() == level_ && satisfies) {
          resume_after_output_ = true;
          return rf_.expand(team_, &counter_);
        }
      }
      const Assignment s = team_.max();
      const std::optional<Assignment> succ = next_assignment(s);
      tick(&counter_);
      if (team_.size() < level_ && satisfies && succ) {
        team_.push_max(*succ);
      } else if (succ) {
        team_.replace_max(*succ);
      } else if (team_.size() > 1) {
        team_.pop_max();
        const Assignment below = team_.max();
        tick(&counter_);
        team_.replace_max(*next_assignment(below));
      } else {
        break;
      }
      note_team_size();
    }
    level_active_ = false;
    ++level_;
    if (level_ > max_size_) done_ = true;
  }
  return std::nullopt;
}

std::unique_ptr<PolyspaceStream> enumerate_polyspace(ReducedFormula rf,
                                                     EnumConfig cfg) {
  return std::make_unique<PolyspaceStream>(std::move(rf), cfg);
}

namespace {

class BruteForceStream final : public SolutionStream {
 public:
  static constexpr int kMaxVars = 4;

  BruteForceStream(ReducedFormula rf, EnumConfig cfg)
      : rf_(std::move(rf)),
        n_(rf_.free_count()),
        space_(std::uint64_t{1} << n_),
        max_size_(clamp_max_size(n_, cfg.max_size)) {}

 private:
  std::optional<Team> do_next() override {
    while (true) {
      if (level_ > max_size_) return std::nullopt;
      if (!level_active_) {
        // First k-combination: values 0..k-1.
        indices_.resize(static_cast<std::size_t>(level_));
        for (std::uint64_t i = 0; i < level_; ++i) indices_[i] = i;
        level_active_ = true;
      } else if (!next_combination()) {
        level_active_ = false;
        ++level_;
        continue;
      }
      Team team(n_);
      for (std::uint64_t v : indices_) team.push_max(Assignment(v, n_));
      if (rf_.model_check(team, &counter_)) return rf_.expand(team, &counter_);
    }
  }

  // Lexicographic successor of the current ascending index tuple.
  bool next_combination() {
    const std::uint64_t k = level_;
    std::uint64_t i = k;
    while (i > 0) {
      --i;
      tick(&counter_);
      if (indices_[i] + (k - i) <= space_ - 1) {
        ++indices_[i];
        for (std::uint64_t j = i + 1; j < k; ++j)
          indices_[j] = indices_[j - 1] + 1;
        return true;
      }
    }
    return false;
  }

  ReducedFormula rf_;
  int n_;
  std::uint64_t space_;
  std::uint64_t max_size_;
  std::uint64_t level_ = 1;
  bool level_active_ = false;
  std::vector<std::uint64_t> indices_;
};

}  // namespace

std::unique_ptr<SolutionStream> enumerate_brute_force(ReducedFormula rf,
                                                      EnumConfig cfg) {
  if (rf.contradictory()) return std::make_unique<EmptyStream>();
  if (rf.free_count() > BruteForceStream::kMaxVars)
    throw SizeLimitError("brute force refuses more than 4 free variables (got " +
                         std::to_string(rf.free_count()) + ")");
  return std::make_unique<BruteForceStream>(std::move(rf), cfg);
}

namespace {

class MergeStream final : public SolutionStream {
 public:
  MergeStream(std::vector<ReducedFormula> disjuncts, EnumConfig cfg) {
    for (auto& rf : disjuncts) {
      if (rf.contradictory()) continue;
      inputs_.push_back(enumerate_polyspace(std::move(rf), cfg));
      heads_.emplace_back();
      primed_.push_back(false);
    }
  }

 private:
  std::optional<Team> do_next() override {
    std::size_t best = inputs_.size();
    for (std::size_t i = 0; i < inputs_.size(); ++i) {
      if (!primed_[i]) pull(i);
      if (!heads_[i]) continue;
      if (best == inputs_.size()) {
        best = i;
        continue;
      }
      tick(&counter_);
      if (compare_teams(*heads_[i], *heads_[best], OrderKind::SizeThenLex) <
          0)
        best = i;
    }
    if (best == inputs_.size()) return std::nullopt;
    Team out = std::move(*heads_[best]);
    pull(best);
    // Drop equal heads so a team satisfying several disjuncts appears once.
    for (std::size_t i = 0; i < inputs_.size(); ++i) {
      while (heads_[i] &&
             compare_teams(*heads_[i], out, OrderKind::SizeThenLex) == 0) {
        tick(&counter_);
        pull(i);
      }
    }
    return out;
  }

  void pull(std::size_t i) {
    heads_[i] = inputs_[i]->next();
    counter_.tick(inputs_[i]->last_delay_steps());
    primed_[i] = true;
  }

  std::vector<std::unique_ptr<SolutionStream>> inputs_;
  std::vector<std::optional<Team>> heads_;
  std::vector<bool> primed_;
};

}  // namespace

std::unique_ptr<SolutionStream> merge_disjunction(
    std::vector<ReducedFormula> disjuncts, EnumConfig cfg) {
  if (disjuncts.empty()) return std::make_unique<EmptyStream>();
  for (std::size_t i = 1; i < disjuncts.size(); ++i)
    if (disjuncts[i].original_order() != disjuncts[0].original_order())
      throw std::invalid_argument("disjuncts must share one variable order");
  return std::make_unique<MergeStream>(std::move(disjuncts), cfg);
}

std::unique_ptr<SolutionStream> make_stream(ReducedFormula rf,
                                            const EnumConfig& cfg) {
  switch (cfg.algorithm) {
    case Algorithm::Orbit:
      return enumerate_orbit_interleaved(std::move(rf), cfg);
    case Algorithm::Polyspace:
      return enumerate_polyspace(std::move(rf), cfg);
    case Algorithm::Brute:
      return enumerate_brute_force(std::move(rf), cfg);
  }
  throw std::logic_error("unknown algorithm");
}

namespace {

class SizeLexReordered final : public SolutionStream {
 public:
  explicit SizeLexReordered(std::unique_ptr<SolutionStream> inner)
      : inner_(std::move(inner)) {}

 private:
  std::optional<Team> do_next() override {
    if (cursor_ >= buffer_.size()) {
      buffer_.clear();
      cursor_ = 0;
      while (true) {
        if (!pending_) {
          pending_ = inner_->next();
          counter_.tick(inner_->last_delay_steps());
          if (!pending_) break;
        }
        if (!buffer_.empty() && pending_->size() != buffer_.front().size())
          break;
        buffer_.push_back(std::move(*pending_));
        pending_.reset();
      }
      std::sort(buffer_.begin(), buffer_.end(),
                [this](const Team& a, const Team& b) {
                  tick(&counter_);
                  return lex_less(a, b);
                });
    }
    if (cursor_ >= buffer_.size()) return std::nullopt;
    return buffer_[cursor_++];
  }

  std::unique_ptr<SolutionStream> inner_;
  std::vector<Team> buffer_;
  std::size_t cursor_ = 0;
  std::optional<Team> pending_;
};

}  // namespace

std::unique_ptr<SolutionStream> size_lex_reordered(
    std::unique_ptr<SolutionStream> inner) {
  return std::make_unique<SizeLexReordered>(std::move(inner));
}

}  // namespace teamenum
