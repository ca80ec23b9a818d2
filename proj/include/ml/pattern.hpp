#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ml/error.hpp"

namespace ml {

inline constexpr int kMaxWidth = 64;

// Complements (and anything else that walks a full universe) refuse to run
// above this width unless the caller raises the limit explicitly.
inline constexpr int kDefaultUniverseGuard = 20;

// One N-bit binary vector. Component 1 is the most significant position of
// the printed bitstring, so "1101" has components (1,1,0,1).
class BasePattern {
 public:
  BasePattern(int width, uint64_t bits);

  static BasePattern zero(int width) { return BasePattern(width, 0); }

  // The vector whose only 1 is at component j (1-based).
  static BasePattern elementary(int width, int j);

  // Parses a bitstring of exactly `width` characters from {0,1}.
  static BasePattern parse(int width, std::string_view bitstring);

  int width() const { return width_; }
  uint64_t bits() const { return bits_; }
  bool is_zero() const { return bits_ == 0; }
  int popcount() const;

  // Component i, 1-based.
  bool component(int i) const;

  std::string str() const;

  // Bitwise union of the 1-components; the "appears together" composition.
  BasePattern merged_with(const BasePattern& other) const;

  // True when every 1-component of `sub` is also set here.
  bool covers(const BasePattern& sub) const;

  friend auto operator<=>(const BasePattern&, const BasePattern&) = default;

 private:
  int width_;
  uint64_t bits_;
};

BasePattern make_base(int width, std::string_view bitstring);
BasePattern support_merge(const BasePattern& a, const BasePattern& b);
bool support_contains(const BasePattern& b, const BasePattern& sub);

// A finite set of base patterns of one width, kept sorted and deduplicated.
class Pattern {
 public:
  explicit Pattern(int width);
  Pattern(int width, std::vector<uint64_t> members);  // normalizes

  static Pattern of(const std::vector<BasePattern>& members);
  static Pattern singleton(const BasePattern& b);

  // All 2^width vectors. Refuses widths above the guard.
  static Pattern universe(int width, int guard = kDefaultUniverseGuard);

  int width() const { return width_; }
  size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(const BasePattern& b) const;
  bool contains_bits(uint64_t bits) const;

  BasePattern at(size_t i) const;
  const std::vector<uint64_t>& raw() const { return members_; }

  void insert(const BasePattern& b);
  void erase(const BasePattern& b);

  bool subset_of(const Pattern& other) const;

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  int width_;
  std::vector<uint64_t> members_;  // sorted, unique
};

enum class SetOp : uint8_t { Or, And, Not };

Pattern objective_or(const Pattern& a, const Pattern& b);
Pattern objective_and(const Pattern& a, const Pattern& b);
Pattern objective_not(const Pattern& p, int guard = kDefaultUniverseGuard);

// Dispatcher form: p2 must be present exactly when op is not Not.
Pattern objective_combine(SetOp op, const Pattern& p1,
                          const std::optional<Pattern>& p2 = std::nullopt,
                          int guard = kDefaultUniverseGuard);

Pattern set_difference(const Pattern& a, const Pattern& b);

namespace detail {
void require_same_width(int a, int b, const char* what);
void require_universe(int width, int guard, const char* what);
uint64_t width_mask(int width);
}  // namespace detail

}  // namespace ml
