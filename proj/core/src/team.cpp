#include "teamenum/team.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace teamenum {

Team Team::of(int width, std::vector<Assignment> members) {
  Team t(width);
  for (const auto& m : members)
    if (m.width() != width) throw std::invalid_argument("team width mismatch");
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end())
    throw std::invalid_argument("duplicate assignment in team");
  t.members_ = std::move(members);
  return t;
}

bool Team::contains(const Assignment& a, StepCounter* counter) const {
  std::size_t lo = 0, hi = members_.size();
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    tick(counter);
    if (members_[mid] < a)
      lo = mid + 1;
    else
      hi = mid;
  }
  return lo < members_.size() && members_[lo] == a;
}

bool Team::insert(const Assignment& a) {
  if (a.width() != width_) throw std::invalid_argument("team width mismatch");
  auto it = std::lower_bound(members_.begin(), members_.end(), a);
  if (it != members_.end() && *it == a) return false;
  members_.insert(it, a);
  return true;
}

bool Team::erase(const Assignment& a) {
  auto it = std::lower_bound(members_.begin(), members_.end(), a);
  if (it == members_.end() || *it != a) return false;
  members_.erase(it);
  return true;
}

void Team::push_max(const Assignment& a) {
  if (a.width() != width_) throw std::invalid_argument("team width mismatch");
  if (!members_.empty() && !(members_.back() < a))
    throw std::invalid_argument("push_max must increase the maximum");
  members_.push_back(a);
}

void Team::pop_max() {
  if (members_.empty()) throw std::logic_error("pop_max on empty team");
  members_.pop_back();
}

void Team::replace_max(const Assignment& a) {
  if (members_.empty()) throw std::logic_error("replace_max on empty team");
  if (members_.size() > 1 && !(members_[members_.size() - 2] < a))
    throw std::invalid_argument("replace_max must keep the team ascending");
  members_.back() = a;
}

std::string Team::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i > 0) out += ',';
    out += members_[i].to_string();
  }
  return out;
}

Team Team::parse(const std::string& text) {
  std::vector<Assignment> members;
  std::stringstream ss(text);
  std::string token;
  int width = -1;
  while (std::getline(ss, token, ',')) {
    // strip surrounding blanks
    auto b = token.find_first_not_of(" \t\r\n");
    auto e = token.find_last_not_of(" \t\r\n");
    if (b == std::string::npos) throw std::invalid_argument("empty team member");
    token = token.substr(b, e - b + 1);
    Assignment a = Assignment::from_string(token);
    if (width == -1)
      width = a.width();
    else if (a.width() != width)
      throw std::invalid_argument("team members have mixed widths");
    members.push_back(a);
  }
  if (members.empty()) throw std::invalid_argument("empty team");
  return Team::of(width, std::move(members));
}

namespace {

std::strong_ordering lex_compare(const Team& a, const Team& b) {
  const std::size_t common = std::min(a.size(), b.size());
  std::size_t i = 0;
  while (i < common && a.member(i) == b.member(i)) ++i;
  if (i == common) return a.size() <=> b.size();
  return a.member(i) <=> b.member(i);
}

}  // namespace

std::partial_ordering compare_teams(const Team& a, const Team& b,
                                    OrderKind order) {
  if (a.width() != b.width()) throw std::invalid_argument("team width mismatch");
  switch (order) {
    case OrderKind::Size:
      if (a == b) return std::partial_ordering::equivalent;
      if (a.size() < b.size()) return std::partial_ordering::less;
      if (a.size() > b.size()) return std::partial_ordering::greater;
      return std::partial_ordering::unordered;
    case OrderKind::Lex:
      return lex_compare(a, b);
    case OrderKind::SizeThenLex:
      if (auto c = a.size() <=> b.size(); c != 0) return c;
      return lex_compare(a, b);
  }
  throw std::logic_error("unknown order kind");
}

bool lex_less(const Team& a, const Team& b) {
  return lex_compare(a, b) == std::strong_ordering::less;
}

Team apply_shift(const Assignment& z, const Team& t, StepCounter* counter) {
  if (z.width() != t.width()) throw std::invalid_argument("team width mismatch");
  std::vector<Assignment> shifted;
  shifted.reserve(t.size());
  for (const auto& m : t.members()) {
    shifted.push_back(z ^ m);
    tick(counter);
  }
  std::sort(shifted.begin(), shifted.end(),
            [counter](const Assignment& a, const Assignment& b) {
              tick(counter);
              return a < b;
            });
  Team out(t.width());
  for (const auto& m : shifted) out.push_max(m);
  return out;
}

std::size_t symmetric_difference_size(const Team& a, const Team& b) {
  if (a.width() != b.width()) throw std::invalid_argument("team width mismatch");
  std::size_t i = 0, j = 0, diff = 0;
  while (i < a.size() && j < b.size()) {
    if (a.member(i) == b.member(j)) {
      ++i, ++j;
    } else if (a.member(i) < b.member(j)) {
      ++diff, ++i;
    } else {
      ++diff, ++j;
    }
  }
  return diff + (a.size() - i) + (b.size() - j);
}

}  // namespace teamenum
