#include "glp/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "glp/error.hpp"

namespace glp {

struct Formula::Node {
  NodeKind kind;
  std::optional<Modal> modal;
  std::string name;
  std::vector<Formula> children;
};

std::string_view to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::Top: return "top";
    case NodeKind::Bot: return "bot";
    case NodeKind::Var: return "var";
    case NodeKind::Not: return "not";
    case NodeKind::And: return "and";
    case NodeKind::Or: return "or";
    case NodeKind::Imp: return "imp";
    case NodeKind::Box: return "box";
    case NodeKind::Dia: return "dia";
  }
  return "?";
}

Formula::Formula() {
  static const auto node = std::make_shared<const Node>(Node{NodeKind::Top, {}, {}, {}});
  node_ = node;
}
Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Formula Formula::top() { return Formula(); }

Formula Formula::bot() {
  static const auto node =
      std::make_shared<const Node>(Node{NodeKind::Bot, {}, {}, {}});
  return Formula(node);
}

Formula Formula::var(std::string name) {
  return Formula(std::make_shared<const Node>(
      Node{NodeKind::Var, {}, std::move(name), {}}));
}

Formula Formula::neg(Formula f) {
  return Formula(std::make_shared<const Node>(
      Node{NodeKind::Not, {}, {}, {std::move(f)}}));
}

Formula Formula::conj(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(
      Node{NodeKind::And, {}, {}, {std::move(a), std::move(b)}}));
}

Formula Formula::disj(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(
      Node{NodeKind::Or, {}, {}, {std::move(a), std::move(b)}}));
}

Formula Formula::imp(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(
      Node{NodeKind::Imp, {}, {}, {std::move(a), std::move(b)}}));
}

Formula Formula::box(Modal m, Formula f) {
  return Formula(std::make_shared<const Node>(
      Node{NodeKind::Box, std::move(m), {}, {std::move(f)}}));
}

Formula Formula::dia(Modal m, Formula f) {
  return Formula(std::make_shared<const Node>(
      Node{NodeKind::Dia, std::move(m), {}, {std::move(f)}}));
}

Formula Formula::conj_all(const std::vector<Formula>& fs) {
  if (fs.empty()) return top();
  Formula acc = fs.back();
  for (auto it = fs.rbegin() + 1; it != fs.rend(); ++it) acc = conj(*it, acc);
  return acc;
}

Formula Formula::disj_all(const std::vector<Formula>& fs) {
  if (fs.empty()) return bot();
  Formula acc = fs.back();
  for (auto it = fs.rbegin() + 1; it != fs.rend(); ++it) acc = disj(*it, acc);
  return acc;
}

NodeKind Formula::kind() const noexcept { return node_->kind; }

const Modal& Formula::modal() const {
  if (!node_->modal)
    throw std::logic_error("formula node has no modality");
  return *node_->modal;
}

const std::string& Formula::name() const { return node_->name; }

std::size_t Formula::arity() const noexcept { return node_->children.size(); }

const Formula& Formula::child(std::size_t i) const {
  if (i >= node_->children.size())
    throw std::logic_error("formula child index out of range");
  return node_->children[i];
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->kind != b.node_->kind) return false;
  if (a.node_->modal != b.node_->modal) return false;
  if (a.node_->name != b.node_->name) return false;
  return a.node_->children == b.node_->children;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  Parser(std::string_view text, const OrderProvider& provider)
      : text_(text), provider_(provider) {}

  Formula parse_all() {
    Formula f = parse_imp();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw Error(ErrorKind::ParseError, message, pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  Formula parse_imp() {
    Formula lhs = parse_or();
    if (eat("->")) return Formula::imp(lhs, parse_imp());
    return lhs;
  }

  Formula parse_or() {
    Formula lhs = parse_and();
    while (eat("|")) lhs = Formula::disj(lhs, parse_and());
    return lhs;
  }

  Formula parse_and() {
    Formula lhs = parse_unary();
    while (eat("&")) lhs = Formula::conj(lhs, parse_unary());
    return lhs;
  }

  Modal parse_modal(char close) {
    std::size_t start = pos_;
    int depth = 0;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '(') ++depth;
      else if (c == ')') --depth;
      else if (c == close && depth == 0) break;
      ++pos_;
    }
    if (pos_ >= text_.size()) {
      pos_ = start;
      fail(std::string("unterminated modality, expected '") + close + "'");
    }
    auto token = text_.substr(start, pos_ - start);
    ++pos_;
    try {
      return provider_.parse(token);
    } catch (const Error& e) {
      throw Error(ErrorKind::ProviderMismatch,
                  "bad modal '" + std::string(token) + "' for order " +
                      provider_.id() + " (" + e.what() + ")",
                  start);
    }
  }

  Formula parse_unary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '~') {
      ++pos_;
      return Formula::neg(parse_unary());
    }
    if (c == '[') {
      ++pos_;
      Modal m = parse_modal(']');
      return Formula::box(std::move(m), parse_unary());
    }
    if (c == '<') {
      ++pos_;
      Modal m = parse_modal('>');
      return Formula::dia(std::move(m), parse_unary());
    }
    if (c == '(') {
      ++pos_;
      Formula f = parse_imp();
      if (!eat(")")) fail("expected ')'");
      return f;
    }
    if (c == 'T') {
      ++pos_;
      return Formula::top();
    }
    if (c == 'F') {
      ++pos_;
      return Formula::bot();
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::islower(static_cast<unsigned char>(text_[pos_])) ||
              std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        ++pos_;
      return Formula::var(std::string(text_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const OrderProvider& provider_;
  std::size_t pos_ = 0;
};

// Binding strength used by the printer.
int precedence(NodeKind k) {
  switch (k) {
    case NodeKind::Imp: return 1;
    case NodeKind::Or: return 2;
    case NodeKind::And: return 3;
    case NodeKind::Not:
    case NodeKind::Box:
    case NodeKind::Dia: return 4;
    default: return 5;
  }
}

void print_into(const Formula& f, int min_prec, std::string& out) {
  int prec = precedence(f.kind());
  bool parens = prec < min_prec;
  if (parens) out += '(';
  switch (f.kind()) {
    case NodeKind::Top: out += 'T'; break;
    case NodeKind::Bot: out += 'F'; break;
    case NodeKind::Var: out += f.name(); break;
    case NodeKind::Not:
      out += '~';
      print_into(f.child(), 4, out);
      break;
    case NodeKind::Box:
      out += '[' + f.modal().token() + ']';
      print_into(f.child(), 4, out);
      break;
    case NodeKind::Dia:
      out += '<' + f.modal().token() + '>';
      print_into(f.child(), 4, out);
      break;
    case NodeKind::And:
      print_into(f.lhs(), 3, out);
      out += " & ";
      print_into(f.rhs(), 4, out);
      break;
    case NodeKind::Or:
      print_into(f.lhs(), 2, out);
      out += " | ";
      print_into(f.rhs(), 3, out);
      break;
    case NodeKind::Imp:
      print_into(f.lhs(), 2, out);
      out += " -> ";
      print_into(f.rhs(), 1, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

Formula parse(std::string_view text, const OrderProvider& provider) {
  return Parser(text, provider).parse_all();
}

std::string print(const Formula& f) {
  std::string out;
  print_into(f, 0, out);
  return out;
}

Formula to_formula(const Worm& w) {
  Formula f = Formula::top();
  for (auto it = w.modals.rbegin(); it != w.modals.rend(); ++it)
    f = Formula::dia(*it, f);
  return f;
}

std::optional<Worm> as_worm(const Formula& f) {
  Worm w;
  const Formula* cur = &f;
  while (cur->kind() == NodeKind::Dia) {
    w.modals.push_back(cur->modal());
    cur = &cur->child();
  }
  if (cur->kind() != NodeKind::Top) return std::nullopt;
  return w;
}

Worm parse_worm(std::string_view text, const OrderProvider& provider) {
  auto trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
    trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
    trimmed.remove_suffix(1);
  bool digits = !trimmed.empty() &&
                std::all_of(trimmed.begin(), trimmed.end(), [](char c) {
                  return std::isdigit(static_cast<unsigned char>(c));
                });
  if (digits) {
    Worm w;
    for (std::size_t i = 0; i < trimmed.size(); ++i) {
      try {
        w.modals.push_back(provider.parse(trimmed.substr(i, 1)));
      } catch (const Error& e) {
        throw Error(ErrorKind::ProviderMismatch, e.what(), i);
      }
    }
    return w;
  }
  Formula f = parse(text, provider);
  auto w = as_worm(f);
  if (!w) throw Error(ErrorKind::NotAWorm, "'" + print(f) + "' is not a worm");
  return *w;
}

bool is_closed(const Formula& f) {
  if (f.kind() == NodeKind::Var) return false;
  for (std::size_t i = 0; i < f.arity(); ++i)
    if (!is_closed(f.child(i))) return false;
  return true;
}

std::vector<Modal> modals_of(const Formula& f) {
  std::vector<Modal> out;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    if (g.kind() == NodeKind::Box || g.kind() == NodeKind::Dia) {
      if (std::find(out.begin(), out.end(), g.modal()) == out.end())
        out.push_back(g.modal());
    }
    for (std::size_t i = 0; i < g.arity(); ++i) walk(g.child(i));
  };
  walk(f);
  return out;
}

std::size_t length(const Formula& f) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < f.arity(); ++i) n += length(f.child(i));
  return n;
}

std::size_t width(const Formula& f) { return modals_of(f).size(); }

std::size_t depth(const Formula& f) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < f.arity(); ++i) d = std::max(d, 1 + depth(f.child(i)));
  return d;
}

}  // namespace glp
