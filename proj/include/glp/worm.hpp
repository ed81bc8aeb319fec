#pragma once

// Worm calculus over a natural-number signature. Worms are written as the
// sequence of their modals, leftmost outermost: [0,2] is <0><2>T, and the
// empty worm is T.
//
// Everything here works on {0, 1, 2, ...} so that the successor alpha+1 of a
// pivot always exists; worms over other orders are relabelled first (see
// reduction.hpp).

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "glp/order.hpp"
#include "glp/syntax.hpp"

namespace glp {

using Level = std::uint32_t;

class NWorm {
 public:
  NWorm() = default;
  NWorm(std::initializer_list<Level> entries) : entries_(entries) {}
  explicit NWorm(std::vector<Level> entries) : entries_(std::move(entries)) {}

  const std::vector<Level>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  Level operator[](std::size_t i) const { return entries_[i]; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  std::optional<Level> min_modal() const;
  std::optional<Level> max_modal() const;
  /// True iff every entry is >= alpha, i.e. the worm lies in W_alpha.
  bool at_least(Level alpha) const;

  /// Concatenation: (*this) followed by `tail`, i.e. this worm wrapped
  /// around `tail`.
  NWorm then(const NWorm& tail) const;
  /// alpha followed by this worm, i.e. <alpha>(this).
  NWorm prefixed(Level alpha) const;

  friend bool operator==(const NWorm&, const NWorm&) = default;
  friend auto operator<=>(const NWorm&, const NWorm&) = default;

 private:
  std::vector<Level> entries_;
};

/// Compact text such as "102" when every entry is a single digit, otherwise
/// the formula form; the empty worm prints as "e".
std::string to_string(const NWorm& w);
/// <a1>...<an>T over the naturals provider.
Formula to_formula(const NWorm& w);
/// Reads back a worm from a formula over the naturals; nullopt if not a worm.
std::optional<NWorm> as_nworm(const Formula& f);

/// A worm split at its least modal:  blocks[0] pivot blocks[1] ... pivot
/// blocks[k-1], every block strictly above the pivot.
struct BlockDecomposition {
  Level pivot = 0;
  std::vector<NWorm> blocks;

  NWorm reassemble() const;
};

/// Throws EmptyWorm for the empty worm.
BlockDecomposition decompose(const NWorm& w);
/// Split at an explicit pivot that is <= every entry. A worm that does not
/// contain the pivot is a single block.
BlockDecomposition decompose_at(const NWorm& w, Level pivot);

/// A worm certified to be in worm normal form.
class NormalWorm {
 public:
  NormalWorm() = default;
  /// Throws NotNormal if `w` is not in WNF.
  static NormalWorm certify(NWorm w);

  const NWorm& worm() const noexcept { return worm_; }
  operator const NWorm&() const noexcept { return worm_; }

  friend bool operator==(const NormalWorm&, const NormalWorm&) = default;

 private:
  friend NormalWorm normalize(const NWorm&);
  struct Trusted {};
  NormalWorm(NWorm w, Trusted) : worm_(std::move(w)) {}
  NWorm worm_;
};

bool is_wnf(const NWorm& w);

/// The unique WNF equivalent to `w`. Length and modals never grow.
NormalWorm normalize(const NWorm& w);

/// Compares worms of W_alpha in the <_alpha order: Lt means b -> <alpha>a is
/// provable. Throws NotInFragment if an entry is below alpha.
Ordering worm_compare(Level alpha, const NormalWorm& a, const NormalWorm& b);
/// As above, normalising the inputs first.
Ordering worm_compare(Level alpha, const NWorm& a, const NWorm& b);

/// A worm provably equivalent to a & b; its modals are among those of a·b
/// and it is no longer than a·b. Not necessarily in WNF.
NWorm worm_conj(const NWorm& a, const NWorm& b);

/// Whether a -> b is provable.
bool worm_entails(const NWorm& a, const NWorm& b);

}  // namespace glp
