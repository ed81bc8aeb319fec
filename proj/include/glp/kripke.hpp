#pragma once

// Finite J-frames as a semantic oracle. A closed formula needs no valuation,
// so a model is just a frame: worlds plus one relation R_a per index a.
//
// J-frame conditions, for every index a and every b < a:
//   1. R_a is irreflexive and transitive;
//   2. x R_a y implies (x R_b z iff y R_b z) for all z;
//   3. x R_a y and y R_b z imply x R_a z.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "glp/order.hpp"
#include "glp/reduction.hpp"
#include "glp/syntax.hpp"
#include "glp/worm.hpp"

namespace glp {

/// An unchecked frame description, as read from a model file.
struct FrameCandidate {
  std::vector<std::string> worlds;
  std::map<Level, std::vector<std::pair<std::string, std::string>>> relations;
};

struct FrameViolation {
  int condition = 0;  // 1, 2 or 3
  std::string x, y, z;
  Level alpha = 0;
  std::optional<Level> beta;  // the lower index, for conditions 2 and 3

  std::string describe() const;
  friend bool operator==(const FrameViolation&, const FrameViolation&) = default;
};

/// Throws ParseError if a relation names an unknown world or a world name
/// repeats; otherwise reports the first violated condition, if any.
std::optional<FrameViolation> validate_frame(const FrameCandidate& frame);

/// A validated J-frame with at most kMaxModelWorlds worlds. Relations with
/// index above max_index() are empty.
class JModel {
 public:
  static constexpr std::size_t kMaxModelWorlds = 64;

  /// Throws FrameViolation (as an Error) or CapExceeded. `max_index` is
  /// raised to cover every relation mentioned.
  static JModel make(const FrameCandidate& frame, Level max_index = 0);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& worlds() const noexcept { return names_; }
  Level max_index() const noexcept { return max_index_; }
  /// World index by name; throws ParseError if unknown.
  std::size_t world(const std::string& name) const;

  /// Successors of world i under R_alpha, as a bit set.
  std::uint64_t successors(Level alpha, std::size_t i) const;
  bool related(Level alpha, std::size_t i, std::size_t j) const {
    return (successors(alpha, i) >> j) & 1U;
  }

  FrameCandidate frame() const;
  /// Same frame with a larger max_index.
  JModel widened(Level max_index) const;

 private:
  friend class FrameBuilder;
  std::vector<std::string> names_;
  Level max_index_ = 0;
  std::vector<std::vector<std::uint64_t>> succ_;  // [alpha][world]
};

/// `{"worlds":[...],"relations":{"0":[["x","y"]],...}}`, empty relations
/// omitted, indices in numeric order.
std::string to_json(const JModel& m);
/// Throws ParseError on malformed input and FrameViolation on a bad frame.
JModel model_from_json(const std::string& text);

/// The set of worlds where f holds, as a bit set. Throws NotClosed, and
/// SignatureError if a modal of f exceeds max_index().
std::uint64_t truth_set(const JModel& m, const Formula& f);
bool model_check(const JModel& m, std::size_t world, const Formula& f);
bool model_check(const JModel& m, const std::string& world, const Formula& f);

struct CheckResult {
  bool valid = true;
  std::optional<std::size_t> refuting_world;  // the lowest refuting world
};
CheckResult is_valid_on(const JModel& m, const Formula& f);

inline constexpr unsigned kDefaultMaxWorlds = 5;
inline constexpr unsigned kHardMaxWorlds = 6;

/// Calls `visit` on every J-frame with exactly `worlds` worlds and relations
/// 0..max_index, in a fixed order, until it returns false. Worlds are named
/// x, y, z, u, v, w. Throws CapExceeded above kHardMaxWorlds.
void for_each_frame(unsigned worlds, Level max_index,
                    const std::function<bool(const JModel&)>& visit);
std::vector<JModel> enumerate_frames(unsigned worlds, Level max_index);

struct Countermodel {
  JModel model;
  std::size_t world = 0;
  Formula target;  // the formula refuted at `world`
};

/// Searches frames of 1..max_worlds worlds for one refuting
/// reduction_target(f, p, bridge). Not finding one proves nothing.
/// Throws NotClosed and CapExceeded.
std::optional<Countermodel> countermodel_search(const Formula& f, const OrderProvider& p,
                                                unsigned max_worlds = kDefaultMaxWorlds,
                                                Bridge bridge = Bridge::NPlus);

}  // namespace glp
