#include "prooflab/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "prooflab/error.hpp"

namespace prooflab {

struct Formula::Node {
  Kind kind;
  std::string name;
  std::vector<Formula> children;
};

bool is_atom_name(std::string_view name) noexcept {
  if (name.empty() || name.front() < 'a' || name.front() > 'z') return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  });
}

Formula Formula::atom(std::string name) {
  if (!is_atom_name(name)) {
    throw SyntaxError(0, "invalid atom name '" + name + "'");
  }
  return Formula(std::make_shared<const Node>(Node{Kind::Atom, std::move(name), {}}));
}

Formula Formula::negation(Formula child) {
  return Formula(std::make_shared<const Node>(Node{Kind::Not, {}, {std::move(child)}}));
}

Formula Formula::conjunction(Formula left, Formula right) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::And, {}, {std::move(left), std::move(right)}}));
}

Formula Formula::disjunction(Formula left, Formula right) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Or, {}, {std::move(left), std::move(right)}}));
}

Formula Formula::biconditional(const Formula& a, const Formula& b) {
  return conjunction(disjunction(negation(a), b), disjunction(negation(b), a));
}

Formula::Kind Formula::kind() const noexcept { return node_->kind; }

const std::string& Formula::name() const {
  if (node_->kind != Kind::Atom) throw std::logic_error("Formula::name on non-atom");
  return node_->name;
}

const Formula& Formula::child() const {
  if (node_->kind != Kind::Not) throw std::logic_error("Formula::child on non-negation");
  return node_->children[0];
}

const Formula& Formula::left() const {
  if (node_->children.size() != 2) throw std::logic_error("Formula::left on non-binary");
  return node_->children[0];
}

const Formula& Formula::right() const {
  if (node_->children.size() != 2) throw std::logic_error("Formula::right on non-binary");
  return node_->children[1];
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->kind != b.node_->kind || a.node_->name != b.node_->name) return false;
  return a.node_->children == b.node_->children;
}

bool Valuation::operator()(std::string_view atom) const {
  auto it = bits_.find(atom);
  return it == bits_.end() ? default_bit_ : it->second;
}

std::string Valuation::to_string() const {
  std::string out;
  for (const auto& [name, bit] : bits_) {
    if (!out.empty()) out += ',';
    out += name;
    out += bit ? "=1" : "=0";
  }
  if (!out.empty()) out += ' ';
  out += default_bit_ ? "default=1" : "default=0";
  return out;
}

namespace {

constexpr std::size_t kMaxNesting = 2000;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula run() {
    Formula f = parse_iff();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw SyntaxError(pos_, message);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  Formula parse_iff() {
    Formula lhs = parse_or();
    while (accept("<->")) lhs = Formula::biconditional(lhs, parse_or());
    return lhs;
  }

  Formula parse_or() {
    Formula lhs = parse_and();
    while (accept("|")) lhs = Formula::disjunction(lhs, parse_and());
    return lhs;
  }

  Formula parse_and() {
    Formula lhs = parse_unary();
    while (accept("&")) lhs = Formula::conjunction(lhs, parse_unary());
    return lhs;
  }

  Formula parse_unary() {
    if (++depth_ > kMaxNesting) fail("nesting too deep");
    Formula result = parse_unary_inner();
    --depth_;
    return result;
  }

  Formula parse_unary_inner() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '~') {
      ++pos_;
      return Formula::negation(parse_unary());
    }
    if (c == '(') {
      ++pos_;
      Formula inner = parse_iff();
      if (!accept(")")) fail("expected ')'");
      return inner;
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::islower(static_cast<unsigned char>(text_[pos_])) ||
              std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      return Formula::atom(std::string(text_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t depth_ = 0;
};

int precedence(Formula::Kind kind) {
  switch (kind) {
    case Formula::Kind::Or: return 1;
    case Formula::Kind::And: return 2;
    default: return 3;
  }
}

void render_into(const Formula& f, std::string& out);

void render_operand(const Formula& f, bool parenthesize, std::string& out) {
  if (parenthesize) out += '(';
  render_into(f, out);
  if (parenthesize) out += ')';
}

void render_into(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      out += f.name();
      return;
    case Formula::Kind::Not:
      out += '~';
      render_operand(f.child(), precedence(f.child().kind()) < 3, out);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      int own = precedence(f.kind());
      render_operand(f.left(), precedence(f.left().kind()) < own, out);
      out += f.kind() == Formula::Kind::And ? " & " : " | ";
      render_operand(f.right(), precedence(f.right().kind()) <= own, out);
      return;
    }
  }
}

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom: out.insert(f.name()); return;
    case Formula::Kind::Not: collect_atoms(f.child(), out); return;
    default:
      collect_atoms(f.left(), out);
      collect_atoms(f.right(), out);
  }
}

}  // namespace

Formula parse(std::string_view text) { return Parser(text).run(); }

std::string render(const Formula& f) {
  std::string out;
  render_into(f, out);
  return out;
}

bool eval(const Formula& f, const Valuation& v) {
  switch (f.kind()) {
    case Formula::Kind::Atom: return v(f.name());
    case Formula::Kind::Not: return !eval(f.child(), v);
    case Formula::Kind::And: return eval(f.left(), v) && eval(f.right(), v);
    case Formula::Kind::Or: return eval(f.left(), v) || eval(f.right(), v);
  }
  return false;
}

std::size_t level(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom: return 0;
    case Formula::Kind::Not: return 1 + level(f.child());
    default: return 1 + std::max(level(f.left()), level(f.right()));
  }
}

std::vector<std::string> atoms(const Formula& f) {
  std::set<std::string> names;
  collect_atoms(f, names);
  return {names.begin(), names.end()};
}

}  // namespace prooflab
