#include "teamenum/bit_trie.hpp"

#include <stdexcept>

namespace teamenum {

BitTrie::BitTrie(int key_bits) : key_bits_(key_bits) {
  if (key_bits < 0) throw std::invalid_argument("negative key length");
  nodes_.emplace_back();  // root
}

std::int32_t BitTrie::new_node() {
  if (!free_list_.empty()) {
    std::int32_t idx = free_list_.back();
    free_list_.pop_back();
    nodes_[static_cast<std::size_t>(idx)] = Node{};
    return idx;
  }
  nodes_.emplace_back();
  return static_cast<std::int32_t>(nodes_.size()) - 1;
}

void BitTrie::free_node(std::int32_t idx) { free_list_.push_back(idx); }

bool BitTrie::insert(const BitKey& key, std::int32_t payload,
                     StepCounter* counter) {
  if (key.bits != key_bits_) throw std::invalid_argument("trie key length mismatch");
  if (key_bits_ == 0) {
    if (empty_key_present_) return false;
    empty_key_present_ = true;
    nodes_[0].payload = payload;
    ++size_;
    return true;
  }
  std::int32_t cur = 0;
  bool created = false;
  for (int d = 0; d < key_bits_; ++d) {
    const int b = key.bit(d) ? 1 : 0;
    tick(counter);
    std::int32_t next = nodes_[static_cast<std::size_t>(cur)].child[b];
    if (next < 0) {
      next = new_node();  // may reallocate nodes_
      nodes_[static_cast<std::size_t>(cur)].child[b] = next;
      created = true;
    }
    cur = next;
  }
  if (!created) return false;
  nodes_[static_cast<std::size_t>(cur)].payload = payload;
  ++size_;
  return true;
}

std::int32_t BitTrie::walk(const BitKey& key, StepCounter* counter) const {
  std::int32_t cur = 0;
  for (int d = 0; d < key_bits_; ++d) {
    const int b = key.bit(d) ? 1 : 0;
    tick(counter);
    cur = nodes_[static_cast<std::size_t>(cur)].child[b];
    if (cur < 0) return -1;
  }
  return cur;
}

bool BitTrie::contains(const BitKey& key, StepCounter* counter) const {
  if (key.bits != key_bits_) throw std::invalid_argument("trie key length mismatch");
  if (key_bits_ == 0) return empty_key_present_;
  return walk(key, counter) >= 0;
}

const std::int32_t* BitTrie::payload(const BitKey& key,
                                     StepCounter* counter) const {
  if (key.bits != key_bits_) throw std::invalid_argument("trie key length mismatch");
  if (key_bits_ == 0)
    return empty_key_present_ ? &nodes_[0].payload : nullptr;
  std::int32_t leaf = walk(key, counter);
  return leaf >= 0 ? &nodes_[static_cast<std::size_t>(leaf)].payload : nullptr;
}

bool BitTrie::erase(const BitKey& key, StepCounter* counter) {
  if (key.bits != key_bits_) throw std::invalid_argument("trie key length mismatch");
  if (key_bits_ == 0) {
    if (!empty_key_present_) return false;
    empty_key_present_ = false;
    --size_;
    return true;
  }
  std::vector<std::int32_t> path;
  path.reserve(static_cast<std::size_t>(key_bits_) + 1);
  std::int32_t cur = 0;
  path.push_back(cur);
  for (int d = 0; d < key_bits_; ++d) {
    tick(counter);
    cur = nodes_[static_cast<std::size_t>(cur)].child[key.bit(d) ? 1 : 0];
    if (cur < 0) return false;
    path.push_back(cur);
  }
  // Unlink the leaf and prune now-childless ancestors.
  for (int d = key_bits_; d >= 1; --d) {
    std::int32_t node = path[static_cast<std::size_t>(d)];
    Node& parent = nodes_[static_cast<std::size_t>(path[static_cast<std::size_t>(d - 1)])];
    const int b = key.bit(d - 1) ? 1 : 0;
    if (d == key_bits_ ||
        (nodes_[static_cast<std::size_t>(node)].child[0] < 0 &&
         nodes_[static_cast<std::size_t>(node)].child[1] < 0)) {
      parent.child[b] = -1;
      free_node(node);
    } else {
      break;
    }
  }
  --size_;
  return true;
}

BitKey BitTrie::leftmost_from(std::int32_t node, BitKey prefix, int depth,
                              StepCounter* counter) const {
  for (int d = depth; d < key_bits_; ++d) {
    const Node& n = nodes_[static_cast<std::size_t>(node)];
    const int b = n.child[0] >= 0 ? 0 : 1;
    prefix.set_bit(d, b == 1);
    tick(counter);
    node = n.child[b];
  }
  return prefix;
}

std::optional<BitKey> BitTrie::min_key(StepCounter* counter) const {
  if (size_ == 0) return std::nullopt;
  if (key_bits_ == 0) return BitKey::zeros(0);
  return leftmost_from(0, BitKey::zeros(key_bits_), 0, counter);
}

std::optional<BitKey> BitTrie::next_key(const BitKey& key,
                                        StepCounter* counter) const {
  if (key.bits != key_bits_) throw std::invalid_argument("trie key length mismatch");
  if (size_ == 0 || key_bits_ == 0) return std::nullopt;
  // Deepest point where we can branch from a 0-bit of `key` to a stored
  // 1-subtree; everything below it shares the prefix, so the leftmost key
  // of that subtree is the strict successor.
  std::int32_t branch_node = -1;
  int branch_depth = -1;
  std::int32_t cur = 0;
  for (int d = 0; d < key_bits_; ++d) {
    const Node& n = nodes_[static_cast<std::size_t>(cur)];
    const int b = key.bit(d) ? 1 : 0;
    if (b == 0 && n.child[1] >= 0) {
      branch_node = cur;
      branch_depth = d;
    }
    tick(counter);
    if (n.child[b] < 0) break;
    cur = n.child[b];
  }
  if (branch_node < 0) return std::nullopt;
  BitKey prefix = key;
  prefix.set_bit(branch_depth, true);
  for (int d = branch_depth + 1; d < key_bits_; ++d) prefix.set_bit(d, false);
  return leftmost_from(nodes_[static_cast<std::size_t>(branch_node)].child[1],
                       prefix, branch_depth + 1, counter);
}

}  // namespace teamenum
