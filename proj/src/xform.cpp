#include "ml/xform.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <unordered_map>

namespace ml {

namespace {

int checked_children_width(const std::vector<XForm>& children,
                           const char* what) {
  if (children.empty()) {
    throw ContractError(std::string(what) + " needs at least one child");
  }
  int w = children.front().width();
  for (const auto& c : children) {
    detail::require_same_width(w, c.width(), what);
  }
  return w;
}

}  // namespace

XForm XForm::empty(int width) {
  if (width < 1 || width > kMaxWidth) {
    throw WidthError("form width must be in [1, 64]");
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::Empty;
  n->width = width;
  return XForm(std::move(n));
}

XForm XForm::literal(const BasePattern& b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Literal;
  n->width = b.width();
  n->literal = b.bits();
  return XForm(std::move(n));
}

XForm XForm::sum(std::vector<XForm> children) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sum;
  n->width = checked_children_width(children, "sum");
  n->children = std::move(children);
  return XForm(std::move(n));
}

XForm XForm::product(std::vector<XForm> children) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Product;
  n->width = checked_children_width(children, "product");
  n->children = std::move(children);
  return XForm(std::move(n));
}

XForm XForm::negation(XForm child) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Negation;
  n->width = child.width();
  n->children.push_back(std::move(child));
  return XForm(std::move(n));
}

BasePattern XForm::literal_value() const {
  if (kind() != Kind::Literal) {
    throw ContractError("literal_value on a non-literal node");
  }
  return BasePattern(width(), node_->literal);
}

int XForm::node_count() const {
  int n = 1;
  for (const auto& c : children()) n += c.node_count();
  return n;
}

std::vector<BasePattern> XForm::vocabulary() const {
  std::vector<uint64_t> raw;
  auto walk = [&raw](auto&& self, const XForm& e) -> void {
    if (e.kind() == Kind::Literal) {
      raw.push_back(e.node_->literal);
      return;
    }
    for (const auto& c : e.children()) self(self, c);
  };
  walk(walk, *this);
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  std::vector<BasePattern> out;
  out.reserve(raw.size());
  for (uint64_t v : raw) out.emplace_back(width(), v);
  return out;
}

bool XForm::equal(const XForm& a, const XForm& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.width() != b.width()) return false;
  if (a.kind() == Kind::Literal) return a.node_->literal == b.node_->literal;
  const auto& ca = a.children();
  const auto& cb = b.children();
  if (ca.size() != cb.size()) return false;
  for (size_t i = 0; i < ca.size(); ++i) {
    if (!equal(ca[i], cb[i])) return false;
  }
  return true;
}

XForm operator+(const XForm& a, const XForm& b) { return XForm::sum({a, b}); }
XForm operator*(const XForm& a, const XForm& b) {
  return XForm::product({a, b});
}
XForm operator!(const XForm& e) { return XForm::negation(e); }

namespace {

using BlackMemo = std::unordered_map<const void*, Pattern>;

const Pattern& black_rec(const XForm& e, int guard, BlackMemo& memo) {
  auto it = memo.find(e.id());
  if (it != memo.end()) return it->second;

  Pattern result(e.width());
  switch (e.kind()) {
    case XForm::Kind::Empty:
      break;
    case XForm::Kind::Literal:
      result = Pattern::singleton(e.literal_value());
      break;
    case XForm::Kind::Sum: {
      std::vector<uint64_t> acc;
      for (const auto& c : e.children()) {
        const auto& cb = black_rec(c, guard, memo);
        acc.insert(acc.end(), cb.raw().begin(), cb.raw().end());
      }
      result = Pattern(e.width(), std::move(acc));
      break;
    }
    case XForm::Kind::Product: {
      // One choice per child; the results merge their supports.
      std::vector<uint64_t> acc = black_rec(e.children().front(), guard, memo).raw();
      for (size_t i = 1; i < e.children().size(); ++i) {
        const auto& cb = black_rec(e.children()[i], guard, memo).raw();
        std::vector<uint64_t> next;
        next.reserve(acc.size() * cb.size());
        for (uint64_t x : acc) {
          for (uint64_t y : cb) next.push_back(x | y);
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        acc = std::move(next);
      }
      result = Pattern(e.width(), std::move(acc));
      break;
    }
    case XForm::Kind::Negation:
      result = objective_not(black_rec(e.children().front(), guard, memo), guard);
      break;
  }
  return memo.emplace(e.id(), std::move(result)).first->second;
}

}  // namespace

Pattern black_set(const XForm& e, int guard) {
  BlackMemo memo;
  return black_rec(e, guard, memo);
}

bool eval(const XForm& e, const BasePattern& b, int guard) {
  detail::require_same_width(e.width(), b.width(), "eval");
  switch (e.kind()) {
    case XForm::Kind::Empty:
      return false;
    case XForm::Kind::Literal:
      return e.literal_value() == b;
    case XForm::Kind::Sum:
      for (const auto& c : e.children()) {
        if (eval(c, b, guard)) return true;
      }
      return false;
    case XForm::Kind::Negation:
      return !eval(e.children().front(), b, guard);
    case XForm::Kind::Product:
      return black_set(e, guard).contains(b);
  }
  return false;
}

XForm DnfForm::as_xform() const { return express(Pattern(width, terms), 2); }

DnfForm to_dnf(const XForm& e, int guard) {
  Pattern b = black_set(e, guard);
  return DnfForm{e.width(), b.raw()};
}

namespace {

// A disjunctive term together with the literals of e it came from.
struct TermInfo {
  uint64_t vec;
  std::vector<uint64_t> lits;  // sorted, unique
};

bool contains_negation(const XForm& e) {
  if (e.kind() == XForm::Kind::Negation) return true;
  for (const auto& c : e.children()) {
    if (contains_negation(c)) return true;
  }
  return false;
}

std::vector<uint64_t> merge_lits(const std::vector<uint64_t>& a,
                                 const std::vector<uint64_t>& b) {
  std::vector<uint64_t> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

// Expands a !-free form into distinct terms. When a term vector arises more
// than once, the first derivation (in child order) is kept, which makes the
// representative sub-forms deterministic.
std::vector<TermInfo> expand_terms(const XForm& e) {
  switch (e.kind()) {
    case XForm::Kind::Empty:
      return {};
    case XForm::Kind::Literal: {
      uint64_t v = e.literal_value().bits();
      return {TermInfo{v, {v}}};
    }
    case XForm::Kind::Sum: {
      std::vector<TermInfo> out;
      for (const auto& c : e.children()) {
        for (auto& t : expand_terms(c)) {
          bool seen = false;
          for (const auto& u : out) {
            if (u.vec == t.vec) {
              seen = true;
              break;
            }
          }
          if (!seen) out.push_back(std::move(t));
        }
      }
      return out;
    }
    case XForm::Kind::Product: {
      std::vector<TermInfo> acc = expand_terms(e.children().front());
      for (size_t i = 1; i < e.children().size(); ++i) {
        std::vector<TermInfo> rhs = expand_terms(e.children()[i]);
        std::vector<TermInfo> next;
        for (const auto& x : acc) {
          for (const auto& y : rhs) {
            uint64_t v = x.vec | y.vec;
            bool seen = false;
            for (const auto& u : next) {
              if (u.vec == v) {
                seen = true;
                break;
              }
            }
            if (!seen) next.push_back(TermInfo{v, merge_lits(x.lits, y.lits)});
          }
        }
        acc = std::move(next);
      }
      return acc;
    }
    case XForm::Kind::Negation:
      throw ContractError("term expansion requires a !-free form");
  }
  return {};
}

XForm term_representative(int width, const TermInfo& t) {
  if (t.lits.size() == 1) {
    return XForm::literal(BasePattern(width, t.lits.front()));
  }
  std::vector<XForm> lits;
  lits.reserve(t.lits.size());
  for (uint64_t v : t.lits) lits.push_back(XForm::literal(BasePattern(width, v)));
  return XForm::product(std::move(lits));
}

}  // namespace

std::vector<XForm> subforms(const XForm& e, int cap, int guard) {
  (void)guard;
  if (contains_negation(e)) {
    throw ContractError("subforms requires a !-free form");
  }
  std::vector<TermInfo> terms = expand_terms(e);
  std::sort(terms.begin(), terms.end(),
            [](const TermInfo& a, const TermInfo& b) { return a.vec < b.vec; });
  size_t m = terms.size();
  if (m <= 1) return {};
  if (m > static_cast<size_t>(cap)) {
    throw CapacityError("form has " + std::to_string(m) +
                        " disjunctive terms, above the sub-form cap " +
                        std::to_string(cap));
  }

  std::vector<XForm> reps;
  reps.reserve(m);
  for (const auto& t : terms) reps.push_back(term_representative(e.width(), t));

  std::vector<XForm> out;
  out.reserve((size_t{1} << m) - 2);
  for (uint64_t mask = 1; mask + 1 < (uint64_t{1} << m); ++mask) {
    std::vector<XForm> parts;
    for (size_t i = 0; i < m; ++i) {
      if ((mask >> i) & 1) parts.push_back(reps[i]);
    }
    out.push_back(parts.size() == 1 ? parts.front()
                                    : XForm::sum(std::move(parts)));
  }
  return out;
}

XForm express(const Pattern& p, int level) {
  if (level != 1 && level != 2) {
    throw ContractError("express level must be 1 or 2");
  }
  if (p.empty()) return XForm::empty(p.width());

  std::vector<XForm> parts;
  parts.reserve(p.size());
  for (size_t i = 0; i < p.size(); ++i) {
    BasePattern b = p.at(i);
    if (level == 1 || b.popcount() <= 1) {
      // At level 2 a one-bit member already is an elementary pattern, and the
      // zero vector stays a literal (a product of no factors is undefined).
      parts.push_back(XForm::literal(b));
      continue;
    }
    std::vector<XForm> factors;
    for (int j = 1; j <= p.width(); ++j) {
      if (b.component(j)) {
        factors.push_back(XForm::literal(BasePattern::elementary(p.width(), j)));
      }
    }
    parts.push_back(XForm::product(std::move(factors)));
  }
  return parts.size() == 1 ? parts.front() : XForm::sum(std::move(parts));
}

XForm prohibit(const XForm& e, const BasePattern& x, int guard) {
  detail::require_same_width(e.width(), x.width(), "prohibit");
  Pattern b = black_set(e, guard);
  if (!b.contains(x)) return e;
  b.erase(x);
  return express(b, 1);
}

namespace {

void preorder_walk(const XForm& e, const BasePattern& b, const Pattern& root_black,
                   int guard, BlackMemo& memo, PerceptionReport& report) {
  const Pattern& node_black = black_rec(e, guard, memo);
  int id = static_cast<int>(report.nodes.size());
  bool proper_subset =
      node_black.subset_of(root_black) && !(node_black == root_black);
  report.nodes.push_back({id, proper_subset});
  report.values.push_back(node_black.contains(b) ? 1 : 0);
  for (const auto& c : e.children()) {
    preorder_walk(c, b, root_black, guard, memo, report);
  }
}

}  // namespace

PerceptionReport perception_values(const XForm& e, const BasePattern& b,
                                   int guard) {
  detail::require_same_width(e.width(), b.width(), "perception_values");
  BlackMemo memo;
  const Pattern root_black = black_rec(e, guard, memo);
  PerceptionReport report;
  preorder_walk(e, b, root_black, guard, memo, report);
  return report;
}

// ---------------------------------------------------------------------------
// Grammar
// ---------------------------------------------------------------------------

namespace {

struct Token {
  enum class Type { Literal, Plus, Star, Bang, LParen, RParen, EmptyKw, End };
  Type type;
  std::string text;
  size_t pos;
};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    size_t start = i;
    switch (c) {
      case '+':
        out.push_back({Token::Type::Plus, "+", start});
        ++i;
        continue;
      case '*':
        out.push_back({Token::Type::Star, "*", start});
        ++i;
        continue;
      case '!':
        out.push_back({Token::Type::Bang, "!", start});
        ++i;
        continue;
      case '(':
        out.push_back({Token::Type::LParen, "(", start});
        ++i;
        continue;
      case ')':
        out.push_back({Token::Type::RParen, ")", start});
        ++i;
        continue;
      case '#': {
        ++i;
        std::string bits;
        while (i < text.size() && (text[i] == '0' || text[i] == '1')) {
          bits.push_back(text[i]);
          ++i;
        }
        if (bits.empty()) {
          throw ParseError("expected bits after '#' at position " +
                           std::to_string(start));
        }
        out.push_back({Token::Type::Literal, std::move(bits), start});
        continue;
      }
      default: {
        if (std::isalpha(static_cast<unsigned char>(c))) {
          std::string word;
          while (i < text.size() &&
                 std::isalpha(static_cast<unsigned char>(text[i]))) {
            word.push_back(text[i]);
            ++i;
          }
          if (word == "EMPTY") {
            out.push_back({Token::Type::EmptyKw, std::move(word), start});
            continue;
          }
          throw ParseError("unexpected word \"" + word + "\" at position " +
                           std::to_string(start));
        }
        throw ParseError("unexpected character '" + std::string(1, c) +
                         "' at position " + std::to_string(start));
      }
    }
  }
  out.push_back({Token::Type::End, "", text.size()});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, int width)
      : tokens_(std::move(tokens)), width_(width) {}

  XForm parse_form() {
    XForm e = parse_or();
    if (peek().type != Token::Type::End) {
      throw ParseError("unexpected trailing input at position " +
                       std::to_string(peek().pos));
    }
    return e;
  }

 private:
  const Token& peek() const { return tokens_[cursor_]; }
  const Token& take() { return tokens_[cursor_++]; }

  XForm parse_or() {
    std::vector<XForm> parts{parse_and()};
    while (peek().type == Token::Type::Plus) {
      take();
      parts.push_back(parse_and());
    }
    return parts.size() == 1 ? parts.front() : XForm::sum(std::move(parts));
  }

  XForm parse_and() {
    std::vector<XForm> parts{parse_not()};
    while (peek().type == Token::Type::Star) {
      take();
      parts.push_back(parse_not());
    }
    return parts.size() == 1 ? parts.front() : XForm::product(std::move(parts));
  }

  XForm parse_not() {
    if (peek().type == Token::Type::Bang) {
      take();
      return XForm::negation(parse_not());
    }
    return parse_atom();
  }

  XForm parse_atom() {
    const Token& t = take();
    switch (t.type) {
      case Token::Type::Literal:
        return XForm::literal(BasePattern::parse(width_, t.text));
      case Token::Type::EmptyKw:
        return XForm::empty(width_);
      case Token::Type::LParen: {
        XForm inner = parse_or();
        if (peek().type != Token::Type::RParen) {
          throw ParseError("expected ')' at position " +
                           std::to_string(peek().pos));
        }
        take();
        return inner;
      }
      default:
        throw ParseError("expected a literal, '(' or EMPTY at position " +
                         std::to_string(t.pos));
    }
  }

  std::vector<Token> tokens_;
  size_t cursor_ = 0;
  int width_;
};

}  // namespace

XForm parse_xform(std::string_view text, std::optional<int> width_hint) {
  std::vector<Token> tokens = lex(text);
  std::optional<int> width = width_hint;
  for (const auto& t : tokens) {
    if (t.type != Token::Type::Literal) continue;
    int len = static_cast<int>(t.text.size());
    if (!width.has_value()) {
      width = len;
    } else if (*width != len) {
      throw ParseError("width-inference conflict at position " +
                       std::to_string(t.pos) + ": literal has " +
                       std::to_string(len) + " bits, expected " +
                       std::to_string(*width));
    }
  }
  // A form with no literals (a lone EMPTY) carries no width of its own.
  Parser parser(std::move(tokens), width.value_or(1));
  return parser.parse_form();
}

namespace {

void print_rec(const XForm& e, XForm::Kind parent, std::string& out) {
  auto needs_parens = [&] {
    switch (parent) {
      case XForm::Kind::Sum:
        return e.kind() == XForm::Kind::Sum;
      case XForm::Kind::Product:
        return e.kind() == XForm::Kind::Sum || e.kind() == XForm::Kind::Product;
      case XForm::Kind::Negation:
        return e.kind() == XForm::Kind::Sum || e.kind() == XForm::Kind::Product;
      default:
        return false;
    }
  }();
  if (needs_parens) out.push_back('(');
  switch (e.kind()) {
    case XForm::Kind::Empty:
      out += "EMPTY";
      break;
    case XForm::Kind::Literal:
      out.push_back('#');
      out += e.literal_value().str();
      break;
    case XForm::Kind::Sum: {
      bool first = true;
      for (const auto& c : e.children()) {
        if (!first) out += " + ";
        first = false;
        print_rec(c, XForm::Kind::Sum, out);
      }
      break;
    }
    case XForm::Kind::Product: {
      bool first = true;
      for (const auto& c : e.children()) {
        if (!first) out.push_back('*');
        first = false;
        print_rec(c, XForm::Kind::Product, out);
      }
      break;
    }
    case XForm::Kind::Negation:
      out.push_back('!');
      print_rec(e.children().front(), XForm::Kind::Negation, out);
      break;
  }
  if (needs_parens) out.push_back(')');
}

}  // namespace

std::string to_text(const XForm& e) {
  std::string out;
  print_rec(e, XForm::Kind::Empty, out);
  return out;
}

XForm or_literal(const XForm& e, const BasePattern& b) {
  detail::require_same_width(e.width(), b.width(), "or_literal");
  if (e.is_empty_form()) return XForm::literal(b);
  if (e.kind() == XForm::Kind::Sum) {
    std::vector<XForm> kids = e.children();
    kids.push_back(XForm::literal(b));
    return XForm::sum(std::move(kids));
  }
  return XForm::sum({e, XForm::literal(b)});
}

}  // namespace ml
