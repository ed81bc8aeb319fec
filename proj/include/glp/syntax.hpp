#pragma once

// Formulas of the modal language and worms over an arbitrary order.
//
// Concrete syntax:
//   T  F  p  ~f  f & g  f | g  f -> g  [tok]f  <tok>f  (f)
// Precedence ~, [.], <.>  >  &  >  |  >  ->; `->` associates to the right,
// `&` and `|` to the left.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "glp/order.hpp"

namespace glp {

enum class NodeKind { Top, Bot, Var, Not, And, Or, Imp, Box, Dia };

std::string_view to_string(NodeKind kind);

/// Immutable formula tree. Copies share structure.
class Formula {
 public:
  /// The default formula is T.
  Formula();

  static Formula top();
  static Formula bot();
  static Formula var(std::string name);
  static Formula neg(Formula f);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula imp(Formula a, Formula b);
  static Formula box(Modal m, Formula f);
  static Formula dia(Modal m, Formula f);

  /// Right-nested conjunction; T when empty.
  static Formula conj_all(const std::vector<Formula>& fs);
  /// Right-nested disjunction; F when empty.
  static Formula disj_all(const std::vector<Formula>& fs);

  NodeKind kind() const noexcept;
  /// Present for Box and Dia.
  const Modal& modal() const;
  /// Present for Var.
  const std::string& name() const;
  std::size_t arity() const noexcept;
  const Formula& child(std::size_t i = 0) const;
  const Formula& lhs() const { return child(0); }
  const Formula& rhs() const { return child(1); }

  /// Address of the shared node; stable while any copy is alive.
  const void* identity() const noexcept { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

/// Worm over an arbitrary order: leftmost entry is the outermost diamond; the
/// empty worm is T.
struct Worm {
  std::vector<Modal> modals;

  bool empty() const noexcept { return modals.empty(); }
  std::size_t size() const noexcept { return modals.size(); }
  friend bool operator==(const Worm&, const Worm&) = default;
};

Formula parse(std::string_view text, const OrderProvider& provider);
std::string print(const Formula& f);

Formula to_formula(const Worm& w);
/// nullopt when f is not a nest of diamonds over T.
std::optional<Worm> as_worm(const Formula& f);
/// Accepts the formula grammar, or a compact digit string such as `102` when
/// every modal of the provider with a one-digit token is meant.
Worm parse_worm(std::string_view text, const OrderProvider& provider);

bool is_closed(const Formula& f);

/// Distinct modals in order of first occurrence.
std::vector<Modal> modals_of(const Formula& f);
/// Number of symbols (tree nodes).
std::size_t length(const Formula& f);
/// Number of distinct modals.
std::size_t width(const Formula& f);
/// Modal depth/tree depth of the AST (leaves have depth 0).
std::size_t depth(const Formula& f);

/// Replaces every modal by `rename(modal)`.
template <class F>
Formula map_modals(const Formula& f, F&& rename);

}  // namespace glp

#include "glp/detail/syntax_impl.hpp"
