#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace teamenum {

// A truth assignment over n ordered variables, packed into a machine word.
// The first variable is the most significant bit, so the written form
// s(x1)s(x2)...s(xn) read as a binary numeral equals value(). The total
// order on assignments is plain integer order of value().
class Assignment {
 public:
  static constexpr int kMaxWidth = 64;

  Assignment() = default;
  Assignment(std::uint64_t value, int width) : value_(value), width_(width) {
    if (width < 0 || width > kMaxWidth)
      throw std::invalid_argument("assignment width out of range");
    if (width < kMaxWidth && (value >> width) != 0)
      throw std::invalid_argument("assignment value exceeds width");
  }

  std::uint64_t value() const { return value_; }
  int width() const { return width_; }
  bool is_zero() const { return value_ == 0; }

  // Value of the variable at 1-based position `pos` in the variable order.
  bool bit(int pos) const {
    if (pos < 1 || pos > width_) throw std::out_of_range("assignment position");
    return ((value_ >> (width_ - pos)) & 1u) != 0;
  }

  bool all_ones() const {
    if (width_ == 0) return true;
    if (width_ == kMaxWidth) return value_ == ~std::uint64_t{0};
    return value_ == (std::uint64_t{1} << width_) - 1;
  }

  // GF(2) sum; both operands must have equal width.
  Assignment operator^(const Assignment& other) const {
    if (width_ != other.width_)
      throw std::invalid_argument("assignment width mismatch");
    Assignment r;
    r.value_ = value_ ^ other.value_;
    r.width_ = width_;
    return r;
  }

  friend bool operator==(const Assignment& a, const Assignment& b) = default;
  friend std::strong_ordering operator<=>(const Assignment& a,
                                          const Assignment& b) {
    if (auto c = a.width_ <=> b.width_; c != 0) return c;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const {
    std::string s(static_cast<std::size_t>(width_), '0');
    for (int i = 0; i < width_; ++i)
      if ((value_ >> (width_ - 1 - i)) & 1u) s[static_cast<std::size_t>(i)] = '1';
    return s;
  }

  static Assignment from_string(const std::string& text) {
    if (text.size() > kMaxWidth)
      throw std::invalid_argument("assignment string too long");
    std::uint64_t v = 0;
    for (char c : text) {
      if (c != '0' && c != '1')
        throw std::invalid_argument("assignment string must be binary");
      v = (v << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return Assignment(v, static_cast<int>(text.size()));
  }

 private:
  std::uint64_t value_ = 0;
  int width_ = 0;
};

// The all-zero assignment, smallest in the traversal order.
inline Assignment first_assignment(int width) { return Assignment(0, width); }

// Successor in integer order, or nullopt for the all-ones assignment.
inline std::optional<Assignment> next_assignment(const Assignment& s) {
  if (s.all_ones()) return std::nullopt;
  return Assignment(s.value() + 1, s.width());
}

// Standard vector e_pos (1-based position in the variable order).
inline Assignment unit_assignment(int pos, int width) {
  if (pos < 1 || pos > width) throw std::out_of_range("unit position");
  return Assignment(std::uint64_t{1} << (width - pos), width);
}

// Greatest 1-based position holding a 1. Undefined on the zero vector.
inline int last_one_position(const Assignment& s) {
  if (s.is_zero()) throw std::invalid_argument("last_one_position of zero vector");
  return s.width() - std::countr_zero(s.value());
}

}  // namespace teamenum
