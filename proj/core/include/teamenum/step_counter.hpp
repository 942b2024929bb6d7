#pragma once

#include <cstdint>

namespace teamenum {

// Machine-independent cost accounting. One step is one assignment
// comparison, one bit-vector addition, one trie edge traversal, or one
// dependence-atom evaluation; enumeration streams report the number of
// steps spent between consecutive emissions.
struct StepCounter {
  std::uint64_t steps = 0;

  void tick(std::uint64_t n = 1) { steps += n; }
};

inline void tick(StepCounter* counter, std::uint64_t n = 1) {
  if (counter != nullptr) counter->steps += n;
}

}  // namespace teamenum
