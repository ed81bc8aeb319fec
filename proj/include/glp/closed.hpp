#pragma once

// Decision procedure for the variable-free fragment. A closed formula is
// rewritten into a Boolean combination of worms, then into clauses
// A -> B_1 | ... | B_m over normal worms; it is provable iff every clause has
// some B_j entailed by A.
//
// Functions taking a bare Formula expect it over the naturals (a hatted
// formula); the overloads taking an OrderProvider relabel first.

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "glp/order.hpp"
#include "glp/syntax.hpp"
#include "glp/worm.hpp"

namespace glp {

/// AND positives & AND ~negatives. No literals means T.
struct WormDisjunct {
  std::vector<NWorm> positives;
  std::vector<NWorm> negatives;

  friend bool operator==(const WormDisjunct&, const WormDisjunct&) = default;
  friend auto operator<=>(const WormDisjunct&, const WormDisjunct&) = default;
};

/// Disjunction of WormDisjuncts. No disjuncts means F.
struct WormDNF {
  std::vector<WormDisjunct> disjuncts;

  static WormDNF top() { return WormDNF{{WormDisjunct{}}}; }
  static WormDNF bottom() { return WormDNF{}; }
  bool is_bottom() const noexcept { return disjuncts.empty(); }

  /// Every worm occurring in a literal.
  std::vector<NWorm> worms() const;
  friend bool operator==(const WormDNF&, const WormDNF&) = default;
};

/// antecedent -> OR succedents; an empty succedent list means antecedent -> F.
struct WormClause {
  NormalWorm antecedent;
  std::vector<NormalWorm> succedents;
};

struct Verdict {
  bool provable = false;
  /// Index of a clause with no entailed succedent; set iff not provable.
  std::optional<std::size_t> witness;
};

Formula to_formula(const WormDNF& d);
Formula to_formula(const WormClause& c);
Formula to_formula(const std::vector<WormClause>& clauses);

/// Cap on intermediate disjunct counts; exceeding it throws ResourceLimit.
inline constexpr std::size_t kMaxDisjuncts = 200000;
inline constexpr Level kUnboundedSignature = std::numeric_limits<Level>::max();

/// Rewrites <alpha>d as a WormDNF. Each output disjunct has exactly one
/// positive worm, beginning with alpha, and negated worms beginning below
/// alpha. Throws SignatureError if alpha or an entry is >= signature.
WormDNF diamond_dnf(Level alpha, const WormDNF& d,
                    Level signature = kUnboundedSignature);

/// Boolean combination of worms equivalent to f, using only modals of f.
/// Throws NotClosed.
WormDNF bcw(const Formula& f);

std::vector<WormClause> formula_wnf(const Formula& f);

Verdict decide(const std::vector<WormClause>& clauses);
Verdict decide(const Formula& f);
Verdict decide(const Formula& f, const OrderProvider& p);

bool is_consistent(const Formula& f);
bool is_consistent(const Formula& f, const OrderProvider& p);

/// A normal worm A with <0>f <-> A. Throws Inconsistent when ~f is provable.
NWorm zero_diamond_worm(const Formula& f);
/// Same over an arbitrary order; its least element plays the role of 0.
/// Throws SignatureError if the order has no least element.
Worm zero_diamond_worm(const Formula& f, const OrderProvider& p);

}  // namespace glp
