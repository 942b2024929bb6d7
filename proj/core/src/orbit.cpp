#include "teamenum/orbit.hpp"

#include <algorithm>
#include <stdexcept>

namespace teamenum {

StabilizerBasis compute_stabilizer_basis(const Team& t, StepCounter* counter) {
  if (t.empty()) throw std::invalid_argument("stabilizer of empty team");
  const int n = t.width();
  const Assignment zero(0, n);
  if (!(t.min() == zero))
    throw std::invalid_argument("stabilizer team must contain the zero assignment");

  StabilizerBasis out;
  for (const Assignment& s : t.members()) {
    if (s.is_zero()) continue;
    const int last = last_one_position(s);
    tick(counter);
    if (std::binary_search(out.last_positions.begin(), out.last_positions.end(),
                           last))
      continue;
    // s stabilizes t iff s+r stays in t for every member r.
    bool stabilizes = true;
    for (const Assignment& r : t.members()) {
      tick(counter);
      if (!t.contains(s ^ r, counter)) {
        stabilizes = false;
        break;
      }
    }
    if (stabilizes) {
      out.basis.push_back(s);
      out.last_positions.insert(
          std::lower_bound(out.last_positions.begin(), out.last_positions.end(),
                           last),
          last);
    }
  }
  for (int pos = 1; pos <= n; ++pos)
    if (!std::binary_search(out.last_positions.begin(), out.last_positions.end(),
                            pos))
      out.complement_positions.push_back(pos);
  return out;
}

OrbitEnumerator::OrbitEnumerator(Team t, StepCounter* counter)
    : counter_(counter) {
  if (t.empty()) throw std::invalid_argument("orbit of empty team");
  const Assignment zero(0, t.width());
  base_ = t.min() == zero ? std::move(t) : apply_shift(t.min(), t, counter);
  basis_ = compute_stabilizer_basis(base_, counter);
  const std::size_t m = basis_.complement_positions.size();
  shift_count_ = m >= 64 ? ~std::uint64_t{0} : std::uint64_t{1} << m;
}

std::optional<Team> OrbitEnumerator::next() {
  if (next_shift_ >= shift_count_) return std::nullopt;
  const int n = base_.width();
  const auto& comp = basis_.complement_positions;
  const std::size_t m = comp.size();
  // Bit j of the shift counter toggles the unit vector at the (m-j)-th
  // complement position, so consecutive shifts ascend in assignment order.
  std::uint64_t value = 0;
  for (std::size_t j = 0; j < m; ++j) {
    if ((next_shift_ >> j) & 1u) {
      value |= std::uint64_t{1} << (n - comp[m - 1 - j]);
      tick(counter_);
    }
  }
  ++next_shift_;
  return apply_shift(Assignment(value, n), base_, counter_);
}

namespace {

class OrbitStream final : public SolutionStream {
 public:
  explicit OrbitStream(const Team& t) : enumerator_(t, &counter_) {}

 private:
  std::optional<Team> do_next() override { return enumerator_.next(); }

  OrbitEnumerator enumerator_;
};

}  // namespace

std::unique_ptr<SolutionStream> enumerate_orbit(const Team& t) {
  return std::make_unique<OrbitStream>(t);
}

}  // namespace teamenum
