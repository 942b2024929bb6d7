#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "teamenum/formula.hpp"
#include "teamenum/stream.hpp"

namespace teamenum {

// All streams below emit teams over the original variable order, grouped
// by ascending cardinality, each solution exactly once. A contradictory
// formula yields an immediately exhausted stream.

// Orbit-based enumeration: per level, orbits of the lexicographically
// least remaining zero-containing seed are streamed while the next level's
// seed construction advances a fixed budget per emission.
std::unique_ptr<SolutionStream> enumerate_orbit_interleaved(ReducedFormula rf,
                                                            EnumConfig cfg);

struct SpaceStats {
  std::size_t live_teams = 0;
  std::size_t peak_live_teams = 0;
  std::size_t peak_assignments = 0;  // retained assignments incl. the probe
};

// Backtracking walk that re-derives each cardinality level from scratch,
// keeping exactly one team plus a constant number of assignments alive.
// Emissions are strictly lexicographic within each level.
class PolyspaceStream final : public SolutionStream {
 public:
  PolyspaceStream(ReducedFormula rf, EnumConfig cfg);

  const SpaceStats& space_stats() const { return stats_; }

 private:
  std::optional<Team> do_next() override;
  void note_team_size();

  ReducedFormula rf_;
  std::uint64_t max_size_;
  std::uint64_t level_ = 1;
  Team team_;
  bool level_active_ = false;
  bool resume_after_output_ = false;
  bool done_ = false;
  SpaceStats stats_;
};

std::unique_ptr<PolyspaceStream> enumerate_polyspace(ReducedFormula rf,
                                                     EnumConfig cfg);

// Exhaustive subset iteration in (cardinality, lex) order; refuses more
// than four free variables.
std::unique_ptr<SolutionStream> enumerate_brute_force(ReducedFormula rf,
                                                      EnumConfig cfg);

// Sorted r-way merge of the disjuncts' polyspace streams under the
// (cardinality, lex) order, suppressing duplicates. All disjuncts must
// share one variable order.
std::unique_ptr<SolutionStream> merge_disjunction(
    std::vector<ReducedFormula> disjuncts, EnumConfig cfg);

std::unique_ptr<SolutionStream> make_stream(ReducedFormula rf,
                                            const EnumConfig& cfg);

// Buffers each cardinality level and re-emits it lexicographically sorted.
// Destroys the delay guarantees; intended for presentation only.
std::unique_ptr<SolutionStream> size_lex_reordered(
    std::unique_ptr<SolutionStream> inner);

}  // namespace teamenum
