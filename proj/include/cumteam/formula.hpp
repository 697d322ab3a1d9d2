#pragma once

// Negation normal form propositional formulas, optionally extended with
// dependence atoms dep(a1,...,ak; b).
//
// Concrete syntax:
//   disj := conj ('|' conj)*
//   conj := atom ('&' atom)*
//   atom := 'T' | 'F' | var | '~' var | 'dep(' [varlist ';'] var ')' | '(' disj ')'
// '|' binds looser than '&'; chains associate to the left.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <memory>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cumteam/errors.hpp"

namespace cumteam {

inline bool is_variable_name(std::string_view name) {
  if (name.empty() || !(name[0] >= 'a' && name[0] <= 'z')) return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

class Variable {
 public:
  explicit Variable(std::string name) : name_(std::move(name)) {
    if (!is_variable_name(name_)) throw std::invalid_argument("invalid variable name '" + name_ + "'");
  }

  const std::string& name() const noexcept { return name_; }

  friend bool operator==(const Variable&, const Variable&) = default;
  friend auto operator<=>(const Variable&, const Variable&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Variable& v) { return os << v.name_; }

 private:
  std::string name_;
};

enum class Kind { pos_lit, neg_lit, top, bottom, conj, disj, dep };

// Immutable formula handle. Copies share structure; equality is structural.
class Formula {
 public:
  static Formula top() { return Formula(make(Kind::top)); }
  static Formula bottom() { return Formula(make(Kind::bottom)); }

  static Formula pos(Variable v) {
    auto n = make(Kind::pos_lit);
    n->vars.push_back(std::move(v));
    return Formula(std::move(n));
  }

  static Formula neg(Variable v) {
    auto n = make(Kind::neg_lit);
    n->vars.push_back(std::move(v));
    return Formula(std::move(n));
  }

  static Formula conj(const Formula& l, const Formula& r) { return binary(Kind::conj, l, r); }
  static Formula disj(const Formula& l, const Formula& r) { return binary(Kind::disj, l, r); }

  // dep(args; target). Empty args is the constancy atom dep(target).
  static Formula dep(std::vector<Variable> args, Variable target) {
    auto n = make(Kind::dep);
    n->vars = std::move(args);
    n->vars.push_back(std::move(target));
    return Formula(std::move(n));
  }

  Kind kind() const noexcept { return node_->kind; }

  bool is_literal() const noexcept { return kind() == Kind::pos_lit || kind() == Kind::neg_lit; }
  bool is_binary() const noexcept { return kind() == Kind::conj || kind() == Kind::disj; }

  const Variable& var() const {
    if (!is_literal()) throw std::logic_error("Formula::var on non-literal");
    return node_->vars.front();
  }

  Formula left() const {
    if (!is_binary()) throw std::logic_error("Formula::left on non-binary node");
    return Formula(node_->lhs);
  }

  Formula right() const {
    if (!is_binary()) throw std::logic_error("Formula::right on non-binary node");
    return Formula(node_->rhs);
  }

  std::vector<Variable> dep_args() const {
    if (kind() != Kind::dep) throw std::logic_error("Formula::dep_args on non-dependence atom");
    return {node_->vars.begin(), node_->vars.end() - 1};
  }

  const Variable& dep_target() const {
    if (kind() != Kind::dep) throw std::logic_error("Formula::dep_target on non-dependence atom");
    return node_->vars.back();
  }

  // Node identity, stable for the lifetime of any handle sharing the node.
  const void* id() const noexcept { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b) { return equal(a.node_.get(), b.node_.get()); }

 private:
  struct Node {
    Kind kind;
    std::vector<Variable> vars;  // literal variable, or dep args followed by target
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };

  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static std::shared_ptr<Node> make(Kind k) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    return n;
  }

  static Formula binary(Kind k, const Formula& l, const Formula& r) {
    auto n = make(k);
    n->lhs = l.node_;
    n->rhs = r.node_;
    return Formula(std::move(n));
  }

  static bool equal(const Node* a, const Node* b) {
    if (a == b) return true;
    if (a->kind != b->kind || a->vars != b->vars) return false;
    if (a->lhs) return equal(a->lhs.get(), b->lhs.get()) && equal(a->rhs.get(), b->rhs.get());
    return true;
  }

  std::shared_ptr<const Node> node_;
};

namespace detail {

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : text_(text) {}

  Formula parse() {
    Formula f = disjunction();
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  Formula disjunction() {
    Formula f = conjunction();
    while (accept('|')) f = Formula::disj(f, conjunction());
    return f;
  }

  Formula conjunction() {
    Formula f = atom();
    while (accept('&')) f = Formula::conj(f, atom());
    return f;
  }

  Formula atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == 'T' || c == 'F') {
      ++pos_;
      return c == 'T' ? Formula::top() : Formula::bottom();
    }
    if (c == '~') {
      ++pos_;
      skip_ws();
      if (pos_ >= text_.size() || !(text_[pos_] >= 'a' && text_[pos_] <= 'z'))
        fail("negation applies only to variables");
      const std::size_t at = pos_;
      std::string name = identifier();
      if (name == "dep" && peek() == '(') fail_at("negation applies only to variables", at);
      return Formula::neg(Variable(std::move(name)));
    }
    if (c == '(') {
      ++pos_;
      Formula f = disjunction();
      expect(')');
      return f;
    }
    if (c >= 'a' && c <= 'z') {
      std::string name = identifier();
      if (name == "dep" && peek() == '(') {
        ++pos_;
        return dependence_atom();
      }
      return Formula::pos(Variable(std::move(name)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  // After "dep(": [varlist ';'] var ')'
  Formula dependence_atom() {
    std::vector<Variable> list;
    if (accept(';')) {
      Variable target = variable();
      expect(')');
      return Formula::dep({}, std::move(target));
    }
    list.push_back(variable());
    while (accept(',')) list.push_back(variable());
    if (accept(';')) {
      Variable target = variable();
      expect(')');
      return Formula::dep(std::move(list), std::move(target));
    }
    skip_ws();
    if (list.size() > 1) fail("expected ';' before the dependence target, e.g. dep(a,b;c)");
    expect(')');
    return Formula::dep({}, std::move(list.front()));
  }

  Variable variable() {
    skip_ws();
    if (pos_ >= text_.size() || !(text_[pos_] >= 'a' && text_[pos_] <= 'z')) fail("expected a variable");
    return Variable(identifier());
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' before end of input");
      fail(std::string("expected '") + c + "'");
    }
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const { throw ParseError(msg, at + 1); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline void render_into(std::string& out, const Formula& f) {
  switch (f.kind()) {
    case Kind::top: out += 'T'; return;
    case Kind::bottom: out += 'F'; return;
    case Kind::pos_lit: out += f.var().name(); return;
    case Kind::neg_lit:
      out += '~';
      out += f.var().name();
      return;
    case Kind::dep: {
      out += "dep(";
      const auto args = f.dep_args();
      for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) out += ',';
        out += args[i].name();
      }
      if (!args.empty()) out += ';';
      out += f.dep_target().name();
      out += ')';
      return;
    }
    case Kind::conj:
    case Kind::disj: {
      // Left-associated chains need no parentheses; a right operand of the same
      // connective does, and so does a disjunction under a conjunction.
      const Kind k = f.kind();
      const Formula l = f.left();
      const Formula r = f.right();
      const bool paren_l = k == Kind::conj && l.kind() == Kind::disj;
      const bool paren_r = r.kind() == k || (k == Kind::conj && r.kind() == Kind::disj);
      if (paren_l) out += '(';
      render_into(out, l);
      if (paren_l) out += ')';
      out += k == Kind::conj ? " & " : " | ";
      if (paren_r) out += '(';
      render_into(out, r);
      if (paren_r) out += ')';
      return;
    }
  }
}

inline void collect_vars(const Formula& f, std::set<Variable>& out) {
  switch (f.kind()) {
    case Kind::pos_lit:
    case Kind::neg_lit: out.insert(f.var()); return;
    case Kind::dep:
      for (auto& a : f.dep_args()) out.insert(a);
      out.insert(f.dep_target());
      return;
    case Kind::conj:
    case Kind::disj:
      collect_vars(f.left(), out);
      collect_vars(f.right(), out);
      return;
    default: return;
  }
}

}  // namespace detail

inline Formula parse(std::string_view text) { return detail::FormulaParser(text).parse(); }

inline std::string render(const Formula& f) {
  std::string out;
  detail::render_into(out, f);
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << render(f); }

inline std::set<Variable> vars_of(const Formula& f) {
  std::set<Variable> out;
  detail::collect_vars(f, out);
  return out;
}

inline bool is_pl(const Formula& f) {
  switch (f.kind()) {
    case Kind::dep: return false;
    case Kind::conj:
    case Kind::disj: return is_pl(f.left()) && is_pl(f.right());
    default: return true;
  }
}

// Number of nodes; atoms count as one.
inline std::size_t formula_size(const Formula& f) {
  return f.is_binary() ? 1 + formula_size(f.left()) + formula_size(f.right()) : 1;
}

inline std::size_t formula_depth(const Formula& f) {
  return f.is_binary() ? 1 + std::max(formula_depth(f.left()), formula_depth(f.right())) : 0;
}

}  // namespace cumteam
