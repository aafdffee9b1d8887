#pragma once

#include <algorithm>
#include <cctype>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "paratop/errors.hpp"

namespace paratop {

/// Evaluation discipline of a model.  Each mode admits exactly one negation:
/// '!' (set complement) in classical, '~' (closed complement) in
/// paraconsistent, '-' (open complement) in paracomplete models.
enum class Mode { Classical, Paraconsistent, Paracomplete };

inline const char* to_string(Mode m) {
  switch (m) {
    case Mode::Classical: return "classical";
    case Mode::Paraconsistent: return "paraconsistent";
    case Mode::Paracomplete: return "paracomplete";
  }
  return "?";
}

enum class FormulaKind {
  Prop,
  Top,
  Bot,
  And,
  Or,
  ClassNeg,  // !
  ParaNeg,   // ~  closure of the complement
  CompNeg,   // -  interior of the complement
  Box,       // []
  Diamond,   // <>
};

/// Immutable formula tree with shared subterms.
class Formula {
public:
  static Formula prop(std::string name) {
    return Formula(std::make_shared<Node>(Node{FormulaKind::Prop, std::move(name), {}, {}}));
  }
  static Formula top() { return nullary(FormulaKind::Top); }
  static Formula bot() { return nullary(FormulaKind::Bot); }
  static Formula conj(Formula l, Formula r) { return binary(FormulaKind::And, l, r); }
  static Formula disj(Formula l, Formula r) { return binary(FormulaKind::Or, l, r); }
  static Formula class_neg(Formula f) { return unary(FormulaKind::ClassNeg, f); }
  static Formula para_neg(Formula f) { return unary(FormulaKind::ParaNeg, f); }
  static Formula comp_neg(Formula f) { return unary(FormulaKind::CompNeg, f); }
  static Formula box(Formula f) { return unary(FormulaKind::Box, f); }
  static Formula diamond(Formula f) { return unary(FormulaKind::Diamond, f); }

  FormulaKind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  Formula left() const { return Formula(node_->left); }
  Formula right() const { return Formula(node_->right); }
  Formula child() const { return Formula(node_->left); }

  bool is_binary() const {
    return kind() == FormulaKind::And || kind() == FormulaKind::Or;
  }
  bool is_unary() const {
    switch (kind()) {
      case FormulaKind::ClassNeg:
      case FormulaKind::ParaNeg:
      case FormulaKind::CompNeg:
      case FormulaKind::Box:
      case FormulaKind::Diamond:
        return true;
      default:
        return false;
    }
  }

  bool structurally_equal(const Formula& o) const {
    if (node_ == o.node_) return true;
    if (kind() != o.kind()) return false;
    switch (kind()) {
      case FormulaKind::Prop: return name() == o.name();
      case FormulaKind::Top:
      case FormulaKind::Bot: return true;
      case FormulaKind::And:
      case FormulaKind::Or:
        return left().structurally_equal(o.left()) &&
               right().structurally_equal(o.right());
      default:
        return child().structurally_equal(o.child());
    }
  }

  /// Nesting count of the operators that invoke Int or Clo: box, diamond,
  /// and the two non-classical negations.  Classical negation is a plain
  /// complement and contributes nothing.
  int modal_depth() const {
    switch (kind()) {
      case FormulaKind::Prop:
      case FormulaKind::Top:
      case FormulaKind::Bot:
        return 0;
      case FormulaKind::And:
      case FormulaKind::Or:
        return std::max(left().modal_depth(), right().modal_depth());
      case FormulaKind::ClassNeg:
        return child().modal_depth();
      default:
        return 1 + child().modal_depth();
    }
  }

  /// Negation-free?
  bool is_positive() const {
    switch (kind()) {
      case FormulaKind::Prop:
      case FormulaKind::Top:
      case FormulaKind::Bot:
        return true;
      case FormulaKind::And:
      case FormulaKind::Or:
        return left().is_positive() && right().is_positive();
      case FormulaKind::ClassNeg:
      case FormulaKind::ParaNeg:
      case FormulaKind::CompNeg:
        return false;
      default:
        return child().is_positive();
    }
  }

  /// True when every negation occurring in the formula is the one the mode
  /// admits.
  bool well_moded(Mode mode) const {
    switch (kind()) {
      case FormulaKind::Prop:
      case FormulaKind::Top:
      case FormulaKind::Bot:
        return true;
      case FormulaKind::And:
      case FormulaKind::Or:
        return left().well_moded(mode) && right().well_moded(mode);
      case FormulaKind::ClassNeg:
        return mode == Mode::Classical && child().well_moded(mode);
      case FormulaKind::ParaNeg:
        return mode == Mode::Paraconsistent && child().well_moded(mode);
      case FormulaKind::CompNeg:
        return mode == Mode::Paracomplete && child().well_moded(mode);
      default:
        return child().well_moded(mode);
    }
  }

  /// Operators drawn from {atoms, T, F, and, or, diamond, para-neg} only.
  /// This is the fragment whose satisfaction continuous maps push forward.
  bool in_fragment(const std::vector<FormulaKind>& allowed_ops) const {
    switch (kind()) {
      case FormulaKind::Prop:
      case FormulaKind::Top:
      case FormulaKind::Bot:
        return true;
      case FormulaKind::And:
      case FormulaKind::Or:
        return contains(allowed_ops, kind()) && left().in_fragment(allowed_ops) &&
               right().in_fragment(allowed_ops);
      default:
        return contains(allowed_ops, kind()) && child().in_fragment(allowed_ops);
    }
  }

  /// Minimal-parenthesis rendering; parse(print(f)) is structurally f.
  std::string print() const { return print_prec(0); }

private:
  struct Node {
    FormulaKind kind;
    std::string name;
    std::shared_ptr<const Node> left, right;
  };

  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static Formula nullary(FormulaKind k) {
    return Formula(std::make_shared<Node>(Node{k, {}, {}, {}}));
  }
  static Formula unary(FormulaKind k, const Formula& f) {
    return Formula(std::make_shared<Node>(Node{k, {}, f.node_, {}}));
  }
  static Formula binary(FormulaKind k, const Formula& l, const Formula& r) {
    return Formula(std::make_shared<Node>(Node{k, {}, l.node_, r.node_}));
  }

  static bool contains(const std::vector<FormulaKind>& v, FormulaKind k) {
    for (FormulaKind x : v)
      if (x == k) return true;
    return false;
  }

  // Precedence: or 0, and 1, unary 2, atom 3.
  std::string print_prec(int min_prec) const {
    auto wrap = [&](int prec, std::string s) {
      return prec < min_prec ? "(" + s + ")" : s;
    };
    switch (kind()) {
      case FormulaKind::Prop: return name();
      case FormulaKind::Top: return "T";
      case FormulaKind::Bot: return "F";
      case FormulaKind::Or:
        return wrap(0, left().print_prec(0) + " | " + right().print_prec(1));
      case FormulaKind::And:
        return wrap(1, left().print_prec(1) + " & " + right().print_prec(2));
      case FormulaKind::ClassNeg: return wrap(2, "!" + child().print_prec(2));
      case FormulaKind::ParaNeg: return wrap(2, "~" + child().print_prec(2));
      case FormulaKind::CompNeg: return wrap(2, "-" + child().print_prec(2));
      case FormulaKind::Box: return wrap(2, "[]" + child().print_prec(2));
      case FormulaKind::Diamond: return wrap(2, "<>" + child().print_prec(2));
    }
    return "?";
  }

  std::shared_ptr<const Node> node_;
};

/// Recursive-descent parser for the ASCII grammar:
///   formula := or ; or := and ('|' and)* ; and := unary ('&' unary)* ;
///   unary := '!' unary | '~' unary | '-' unary | '[]' unary | '<>' unary | atom ;
///   atom := ident | 'T' | 'F' | '(' formula ')'
/// Identifiers match [a-z][a-z0-9_]*.
class FormulaParser {
public:
  explicit FormulaParser(std::string text) : text_(std::move(text)) {}

  Formula parse() {
    Formula f = parse_or();
    skip_ws();
    if (pos_ != text_.size()) fail("end of input");
    return f;
  }

private:
  Formula parse_or() {
    Formula f = parse_and();
    while (peek('|')) {
      advance(1);
      f = Formula::disj(f, parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (peek('&')) {
      advance(1);
      f = Formula::conj(f, parse_unary());
    }
    return f;
  }

  Formula parse_unary() {
    skip_ws();
    if (match("!")) return Formula::class_neg(parse_unary());
    if (match("~")) return Formula::para_neg(parse_unary());
    if (match("-")) return Formula::comp_neg(parse_unary());
    if (match("[]")) return Formula::box(parse_unary());
    if (match("<>")) return Formula::diamond(parse_unary());
    return parse_atom();
  }

  Formula parse_atom() {
    skip_ws();
    if (match("T")) return Formula::top();
    if (match("F")) return Formula::bot();
    if (match("(")) {
      Formula f = parse_or();
      skip_ws();
      if (!match(")")) fail("')'");
      return f;
    }
    if (pos_ < text_.size() && std::islower(static_cast<unsigned char>(text_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::islower(static_cast<unsigned char>(text_[pos_])) ||
              std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        ++pos_;
      return Formula::prop(text_.substr(start, pos_ - start));
    }
    fail("identifier, 'T', 'F', '(', or a unary operator");
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool match(const std::string& tok) {
    skip_ws();
    if (text_.compare(pos_, tok.size(), tok) == 0) {
      advance(tok.size());
      return true;
    }
    return false;
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  void advance(std::size_t k) { pos_ += k; }

  [[noreturn]] void fail(const std::string& expected) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string found =
        pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
    throw SyntaxError(line, col, "expected " + expected + ", found " + found);
  }

  std::string text_;
  std::size_t pos_ = 0;
};

inline Formula parse_formula(const std::string& text) {
  return FormulaParser(text).parse();
}

/// Deterministic size-then-lexicographic enumeration of well-moded formulas
/// with modal depth <= max_depth, truncated at max_count.  Sizes: a
/// proposition counts 1, a unary application 1 + operand, a binary
/// application 1 + both operands; T and F are slotted at size 3, after the
/// smallest conjunctions.  Within a size, case order is props (given
/// order), and, or, mode negation, box, diamond, T, F.
inline std::vector<Formula> enumerate_formulas(const std::vector<std::string>& props,
                                               int max_depth, std::size_t max_count,
                                               Mode mode) {
  if (max_count < 1) throw Error("enumerate_formulas: max_count must be >= 1");
  std::vector<Formula> out;
  // by_size[s] lists all formulas of size s in enumeration order.
  std::vector<std::vector<Formula>> by_size(1);
  auto emit = [&](const Formula& f) { return (out.push_back(f), out.size() >= max_count); };

  for (int size = 1; out.size() < max_count && size <= 200; ++size) {
    std::vector<Formula> layer;
    auto add = [&](const Formula& f) {
      if (f.modal_depth() <= max_depth) layer.push_back(f);
    };
    if (size == 1)
      for (const std::string& p : props) add(Formula::prop(p));
    if (size >= 3) {
      for (int ls = 1; ls <= size - 2; ++ls) {
        int rs = size - 1 - ls;
        for (const Formula& l : by_size[ls])
          for (const Formula& r : by_size[rs]) add(Formula::conj(l, r));
      }
      for (int ls = 1; ls <= size - 2; ++ls) {
        int rs = size - 1 - ls;
        for (const Formula& l : by_size[ls])
          for (const Formula& r : by_size[rs]) add(Formula::disj(l, r));
      }
    }
    if (size >= 2) {
      for (const Formula& f : by_size[size - 1]) {
        switch (mode) {
          case Mode::Classical: add(Formula::class_neg(f)); break;
          case Mode::Paraconsistent: add(Formula::para_neg(f)); break;
          case Mode::Paracomplete: add(Formula::comp_neg(f)); break;
        }
      }
      for (const Formula& f : by_size[size - 1]) add(Formula::box(f));
      for (const Formula& f : by_size[size - 1]) add(Formula::diamond(f));
    }
    if (size == 3) {
      add(Formula::top());
      add(Formula::bot());
    }
    for (const Formula& f : layer)
      if (emit(f)) return out;
    by_size.push_back(std::move(layer));
  }
  return out;
}

}  // namespace paratop
