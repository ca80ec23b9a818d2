#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ml/pattern.hpp"

namespace ml {

// Enumerating sub-forms walks every proper sub-sum of the distinct
// disjunctive terms, so the term count is capped.
inline constexpr int kDefaultSubformCap = 16;

// An expression over base-pattern literals with three operators:
//   +  either operand appears          (black sets union)
//   *  operands appear together        (black sets convolve under bit-OR)
//   !  operand does not appear         (black set complements)
// plus the empty form, which matches nothing. Immutable; copies share nodes.
class XForm {
 public:
  enum class Kind : uint8_t { Empty, Literal, Sum, Product, Negation };

  static XForm empty(int width);
  static XForm literal(const BasePattern& b);
  static XForm sum(std::vector<XForm> children);      // children nonempty
  static XForm product(std::vector<XForm> children);  // children nonempty
  static XForm negation(XForm child);

  Kind kind() const { return node_->kind; }
  int width() const { return node_->width; }
  bool is_empty_form() const { return kind() == Kind::Empty; }

  BasePattern literal_value() const;
  const std::vector<XForm>& children() const { return node_->children; }

  int node_count() const;

  // Distinct literal values appearing anywhere in the tree.
  std::vector<BasePattern> vocabulary() const;

  // Structural equality (same shape, same literals).
  friend bool operator==(const XForm& a, const XForm& b) { return equal(a, b); }

  // Stable identity of the underlying node, for memo tables.
  const void* id() const { return node_.get(); }

 private:
  struct Node {
    Kind kind;
    int width;
    uint64_t literal = 0;
    std::vector<XForm> children;
  };

  explicit XForm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static bool equal(const XForm& a, const XForm& b);

  std::shared_ptr<const Node> node_;
};

// Convenience operators so tests read like the algebra.
XForm operator+(const XForm& a, const XForm& b);
XForm operator*(const XForm& a, const XForm& b);
XForm operator!(const XForm& e);

// The set of inputs the form maps to 1.
Pattern black_set(const XForm& e, int guard = kDefaultUniverseGuard);

// Membership of b in the black set.
bool eval(const XForm& e, const BasePattern& b,
          int guard = kDefaultUniverseGuard);

// Sum-of-products normal form. Every product collapses to the support merge
// of its literals, so the term list *is* the black set.
struct DnfForm {
  int width;
  std::vector<uint64_t> terms;  // sorted, unique

  Pattern as_pattern() const { return Pattern(width, terms); }
  XForm as_xform() const;  // sum of products of elementary literals
};

DnfForm to_dnf(const XForm& e, int guard = kDefaultUniverseGuard);

// One representative sub-form per nonempty proper subset of the distinct
// disjunctive terms. Each result uses only literals of e and has a black
// set strictly inside black(e). Requires a !-free form.
std::vector<XForm> subforms(const XForm& e, int cap = kDefaultSubformCap,
                            int guard = kDefaultUniverseGuard);

// An expression whose black set is exactly p.
//   level 1: a sum of one literal per member.
//   level 2: a sum of products of elementary patterns, one product per
//            member (the zero vector, having no 1-components, stays a
//            literal).
XForm express(const Pattern& p, int level);

// A form whose black set is black(e) minus {x}. Returns e unchanged when x
// is not in the black set; otherwise re-expresses the remainder as a sum.
XForm prohibit(const XForm& e, const BasePattern& x,
               int guard = kDefaultUniverseGuard);

// Per-node evaluation of the whole tree on one input. Node ids are preorder
// indices; a node is flagged when its black set is a proper subset of the
// root's (the nodes that act as sub-forms of e).
struct PerceptionReport {
  struct NodeInfo {
    int id;
    bool subform;
  };
  std::vector<NodeInfo> nodes;
  std::vector<uint8_t> values;  // one bit per node, preorder

  bool root_value() const { return !values.empty() && values.front() != 0; }
};

PerceptionReport perception_values(const XForm& e, const BasePattern& b,
                                   int guard = kDefaultUniverseGuard);

// Text grammar:
//   form := or ; or := and ("+" and)* ; and := not ("*" not)* ;
//   not := "!" not | atom ; atom := "#"[01]+ | "(" form ")" | "EMPTY"
// Width is inferred from the literals (they must all have equal length);
// a bare EMPTY needs the width hint.
XForm parse_xform(std::string_view text,
                  std::optional<int> width_hint = std::nullopt);
std::string to_text(const XForm& e);

// Appends one literal to a sum (the "include this input" step of the
// learning rules). Empty becomes the literal itself.
XForm or_literal(const XForm& e, const BasePattern& b);

}  // namespace ml
