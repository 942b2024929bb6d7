#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "teamenum/step_counter.hpp"

namespace teamenum {

// Fixed-length bit string; bit 0 is the front. Packed front-first into
// 64-bit words so keys of equal length compare bitwise.
struct BitKey {
  int bits = 0;
  std::vector<std::uint64_t> words;

  static BitKey zeros(int bits) {
    BitKey k;
    k.bits = bits;
    k.words.assign(static_cast<std::size_t>((bits + 63) / 64), 0);
    return k;
  }

  bool bit(int i) const {
    return (words[static_cast<std::size_t>(i) / 64] >>
            (63 - static_cast<std::size_t>(i) % 64)) &
           1u;
  }

  void set_bit(int i, bool v) {
    const std::uint64_t mask = std::uint64_t{1}
                               << (63 - static_cast<std::size_t>(i) % 64);
    if (v)
      words[static_cast<std::size_t>(i) / 64] |= mask;
    else
      words[static_cast<std::size_t>(i) / 64] &= ~mask;
  }

  friend bool operator==(const BitKey&, const BitKey&) = default;
};

// Binary trie over keys of one fixed length. Lookup, insert and delete
// cost one step per traversed edge; keys are iterated in ascending
// bitstring order, which is the lexicographic order of what they encode.
// Each stored key can carry one payload integer.
class BitTrie {
 public:
  explicit BitTrie(int key_bits);

  int key_bits() const { return key_bits_; }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  // Returns false if the key was already present (payload unchanged).
  bool insert(const BitKey& key, std::int32_t payload = 0,
              StepCounter* counter = nullptr);
  bool contains(const BitKey& key, StepCounter* counter = nullptr) const;
  bool erase(const BitKey& key, StepCounter* counter = nullptr);

  // Payload slot of a present key, nullptr otherwise.
  const std::int32_t* payload(const BitKey& key,
                              StepCounter* counter = nullptr) const;

  std::optional<BitKey> min_key(StepCounter* counter = nullptr) const;
  // Smallest stored key strictly greater than `key` (which need not be
  // present).
  std::optional<BitKey> next_key(const BitKey& key,
                                 StepCounter* counter = nullptr) const;

 private:
  struct Node {
    std::int32_t child[2] = {-1, -1};
    std::int32_t payload = 0;
  };

  std::int32_t new_node();
  void free_node(std::int32_t idx);
  std::int32_t walk(const BitKey& key, StepCounter* counter) const;
  BitKey leftmost_from(std::int32_t node, BitKey prefix, int depth,
                       StepCounter* counter) const;

  int key_bits_;
  std::vector<Node> nodes_;  // node 0 is the root
  std::vector<std::int32_t> free_list_;
  std::size_t size_ = 0;
  bool empty_key_present_ = false;  // key_bits_ == 0 only
};

}  // namespace teamenum
