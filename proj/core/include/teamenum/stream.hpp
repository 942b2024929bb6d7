#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "teamenum/step_counter.hpp"
#include "teamenum/team.hpp"

namespace teamenum {

enum class Algorithm { Orbit, Polyspace, Brute };

struct EnumConfig {
  // Largest team cardinality to emit; 0 means no bound. Always clamped to
  // 2^n over the enumeration space.
  std::uint64_t max_size = 0;
  Algorithm algorithm = Algorithm::Orbit;
  OrderKind order = OrderKind::Size;
  // Seed-construction iterations run per emitted team; 0 picks the level
  // currently under construction.
  std::uint64_t interleave_budget = 0;
};

// Thrown when an algorithm refuses an instance too large for it.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Pull-based producer of teams. Never yields a duplicate. Tracks the
// step-model cost spent producing each item; the count for the first item
// includes any precomputation.
class SolutionStream {
 public:
  virtual ~SolutionStream() = default;

  std::optional<Team> next() {
    if (exhausted_) return std::nullopt;
    std::optional<Team> out = do_next();
    last_delay_ = counter_.steps - mark_;
    mark_ = counter_.steps;
    if (!out) exhausted_ = true;
    return out;
  }

  bool exhausted() const { return exhausted_; }
  std::uint64_t last_delay_steps() const { return last_delay_; }
  std::uint64_t total_steps() const { return counter_.steps; }

 protected:
  StepCounter counter_;

 private:
  virtual std::optional<Team> do_next() = 0;

  bool exhausted_ = false;
  std::uint64_t mark_ = 0;
  std::uint64_t last_delay_ = 0;
};

// min(requested, 2^width); requested == 0 means unbounded.
inline std::uint64_t clamp_max_size(int width, std::uint64_t requested) {
  const std::uint64_t full = width >= 64 ? ~std::uint64_t{0}
                                         : std::uint64_t{1} << width;
  if (requested == 0 || requested > full) return full;
  return requested;
}

}  // namespace teamenum
