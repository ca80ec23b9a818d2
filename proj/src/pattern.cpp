#include "ml/pattern.hpp"

#include <algorithm>
#include <bit>

namespace ml {

namespace detail {

void require_same_width(int a, int b, const char* what) {
  if (a != b) {
    throw WidthError(std::string(what) + ": width mismatch (" +
                     std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

void require_universe(int width, int guard, const char* what) {
  if (width > guard) {
    throw CapacityError(std::string(what) + ": width " + std::to_string(width) +
                        " exceeds the universe guard " + std::to_string(guard));
  }
}

uint64_t width_mask(int width) {
  return width == 64 ? ~0ull : (1ull << width) - 1;
}

}  // namespace detail

BasePattern::BasePattern(int width, uint64_t bits) : width_(width), bits_(bits) {
  if (width < 1 || width > kMaxWidth) {
    throw WidthError("base pattern width must be in [1, 64], got " +
                     std::to_string(width));
  }
  if ((bits & ~detail::width_mask(width)) != 0) {
    throw WidthError("base pattern has bits above its width");
  }
}

BasePattern BasePattern::elementary(int width, int j) {
  if (j < 1 || j > width) {
    throw WidthError("elementary index " + std::to_string(j) +
                     " out of range for width " + std::to_string(width));
  }
  return BasePattern(width, 1ull << (width - j));
}

BasePattern BasePattern::parse(int width, std::string_view bitstring) {
  if (static_cast<int>(bitstring.size()) != width) {
    throw WidthError("bitstring \"" + std::string(bitstring) + "\" has length " +
                     std::to_string(bitstring.size()) + ", expected " +
                     std::to_string(width));
  }
  uint64_t bits = 0;
  for (char c : bitstring) {
    if (c != '0' && c != '1') {
      throw ParseError("invalid character '" + std::string(1, c) +
                       "' in bitstring \"" + std::string(bitstring) + "\"");
    }
    bits = (bits << 1) | static_cast<uint64_t>(c - '0');
  }
  return BasePattern(width, bits);
}

int BasePattern::popcount() const { return std::popcount(bits_); }

bool BasePattern::component(int i) const {
  if (i < 1 || i > width_) {
    throw WidthError("component index out of range");
  }
  return (bits_ >> (width_ - i)) & 1;
}

std::string BasePattern::str() const {
  std::string s(static_cast<size_t>(width_), '0');
  for (int i = 0; i < width_; ++i) {
    if ((bits_ >> (width_ - 1 - i)) & 1) s[static_cast<size_t>(i)] = '1';
  }
  return s;
}

BasePattern BasePattern::merged_with(const BasePattern& other) const {
  detail::require_same_width(width_, other.width_, "support_merge");
  return BasePattern(width_, bits_ | other.bits_);
}

bool BasePattern::covers(const BasePattern& sub) const {
  detail::require_same_width(width_, sub.width_, "support_contains");
  return (sub.bits_ & ~bits_) == 0;
}

BasePattern make_base(int width, std::string_view bitstring) {
  return BasePattern::parse(width, bitstring);
}

BasePattern support_merge(const BasePattern& a, const BasePattern& b) {
  return a.merged_with(b);
}

bool support_contains(const BasePattern& b, const BasePattern& sub) {
  return b.covers(sub);
}

Pattern::Pattern(int width) : width_(width) {
  if (width < 1 || width > kMaxWidth) {
    throw WidthError("pattern width must be in [1, 64]");
  }
}

Pattern::Pattern(int width, std::vector<uint64_t> members) : Pattern(width) {
  uint64_t mask = detail::width_mask(width);
  for (uint64_t m : members) {
    if ((m & ~mask) != 0) throw WidthError("pattern member has bits above width");
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  members_ = std::move(members);
}

Pattern Pattern::of(const std::vector<BasePattern>& members) {
  if (members.empty()) {
    throw ContractError("Pattern::of needs at least one member to infer width");
  }
  int w = members.front().width();
  std::vector<uint64_t> raw;
  raw.reserve(members.size());
  for (const auto& b : members) {
    detail::require_same_width(w, b.width(), "Pattern::of");
    raw.push_back(b.bits());
  }
  return Pattern(w, std::move(raw));
}

Pattern Pattern::singleton(const BasePattern& b) {
  return Pattern(b.width(), {b.bits()});
}

Pattern Pattern::universe(int width, int guard) {
  detail::require_universe(width, guard, "Pattern::universe");
  std::vector<uint64_t> all;
  all.reserve(1ull << width);
  for (uint64_t v = 0; v < (1ull << width); ++v) all.push_back(v);
  return Pattern(width, std::move(all));
}

bool Pattern::contains(const BasePattern& b) const {
  detail::require_same_width(width_, b.width(), "Pattern::contains");
  return contains_bits(b.bits());
}

bool Pattern::contains_bits(uint64_t bits) const {
  return std::binary_search(members_.begin(), members_.end(), bits);
}

BasePattern Pattern::at(size_t i) const {
  return BasePattern(width_, members_.at(i));
}

void Pattern::insert(const BasePattern& b) {
  detail::require_same_width(width_, b.width(), "Pattern::insert");
  auto it = std::lower_bound(members_.begin(), members_.end(), b.bits());
  if (it == members_.end() || *it != b.bits()) members_.insert(it, b.bits());
}

void Pattern::erase(const BasePattern& b) {
  detail::require_same_width(width_, b.width(), "Pattern::erase");
  auto it = std::lower_bound(members_.begin(), members_.end(), b.bits());
  if (it != members_.end() && *it == b.bits()) members_.erase(it);
}

bool Pattern::subset_of(const Pattern& other) const {
  detail::require_same_width(width_, other.width_, "Pattern::subset_of");
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

Pattern objective_or(const Pattern& a, const Pattern& b) {
  detail::require_same_width(a.width(), b.width(), "objective OR");
  std::vector<uint64_t> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.raw().begin(), a.raw().end(), b.raw().begin(), b.raw().end(),
                 std::back_inserter(out));
  return Pattern(a.width(), std::move(out));
}

Pattern objective_and(const Pattern& a, const Pattern& b) {
  detail::require_same_width(a.width(), b.width(), "objective AND");
  std::vector<uint64_t> out;
  std::set_intersection(a.raw().begin(), a.raw().end(), b.raw().begin(),
                        b.raw().end(), std::back_inserter(out));
  return Pattern(a.width(), std::move(out));
}

Pattern objective_not(const Pattern& p, int guard) {
  detail::require_universe(p.width(), guard, "objective NOT");
  std::vector<uint64_t> out;
  uint64_t total = 1ull << p.width();
  out.reserve(static_cast<size_t>(total - p.size()));
  // The member list is sorted, so walk it alongside the universe.
  size_t idx = 0;
  const auto& mem = p.raw();
  for (uint64_t v = 0; v < total; ++v) {
    if (idx < mem.size() && mem[idx] == v) {
      ++idx;
    } else {
      out.push_back(v);
    }
  }
  return Pattern(p.width(), std::move(out));
}

Pattern objective_combine(SetOp op, const Pattern& p1,
                          const std::optional<Pattern>& p2, int guard) {
  if (op == SetOp::Not) {
    if (p2.has_value()) {
      throw ContractError("objective NOT takes a single operand");
    }
    return objective_not(p1, guard);
  }
  if (!p2.has_value()) {
    throw ContractError("objective OR/AND take two operands");
  }
  return op == SetOp::Or ? objective_or(p1, *p2) : objective_and(p1, *p2);
}

Pattern set_difference(const Pattern& a, const Pattern& b) {
  detail::require_same_width(a.width(), b.width(), "set_difference");
  std::vector<uint64_t> out;
  std::set_difference(a.raw().begin(), a.raw().end(), b.raw().begin(),
                      b.raw().end(), std::back_inserter(out));
  return Pattern(a.width(), std::move(out));
}

}  // namespace ml
