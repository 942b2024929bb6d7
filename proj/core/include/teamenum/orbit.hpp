#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "teamenum/stream.hpp"
#include "teamenum/team.hpp"

namespace teamenum {

// Basis of the stabilizer subgroup of a team under GF(2)^n translation,
// with pairwise-distinct last-one positions. The standard vectors at the
// complementary positions span a complement, so applying exactly their
// span to the team walks its orbit without duplicates.
struct StabilizerBasis {
  std::vector<Assignment> basis;
  std::vector<int> last_positions;        // last(b) per basis member, ascending
  std::vector<int> complement_positions;  // {1..n} minus last_positions
};

// Requires the zero assignment to be a member of t.
StabilizerBasis compute_stabilizer_basis(const Team& t,
                                         StepCounter* counter = nullptr);

// Walks the orbit of a team: shifts the zero-normalized team by every
// combination of complement-position unit vectors, in increasing shift
// order, so the normalized team itself comes first.
class OrbitEnumerator {
 public:
  explicit OrbitEnumerator(Team t, StepCounter* counter = nullptr);

  const Team& base_team() const { return base_; }
  const StabilizerBasis& basis() const { return basis_; }
  std::uint64_t orbit_size() const { return shift_count_; }

  std::optional<Team> next();

 private:
  Team base_;
  StabilizerBasis basis_;
  std::uint64_t next_shift_ = 0;
  std::uint64_t shift_count_ = 0;
  StepCounter* counter_;
};

// Pull stream over the orbit of t (teams stay in t's own variable space).
std::unique_ptr<SolutionStream> enumerate_orbit(const Team& t);

}  // namespace teamenum
