#include "glp/kripke.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <mutex>
#include <unordered_map>

#include <json.hpp>

#include "glp/error.hpp"

namespace glp {

namespace {

using Mask = std::uint64_t;

Mask bit(std::size_t i) { return Mask{1} << i; }

Mask full_mask(std::size_t n) { return n >= 64 ? ~Mask{0} : bit(n) - 1; }

struct IndexedFrame {
  std::vector<std::string> names;
  std::vector<std::vector<Mask>> succ;  // [alpha][world]
  Level top = 0;
};

IndexedFrame index_frame(const FrameCandidate& frame) {
  IndexedFrame out;
  out.names = frame.worlds;
  if (out.names.size() > JModel::kMaxModelWorlds)
    throw Error(ErrorKind::CapExceeded,
                "model has " + std::to_string(out.names.size()) + " worlds; at most " +
                    std::to_string(JModel::kMaxModelWorlds) + " are supported");
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < out.names.size(); ++i)
    if (!index.emplace(out.names[i], i).second)
      throw Error(ErrorKind::ParseError, "world '" + out.names[i] + "' listed twice");
  if (!frame.relations.empty()) out.top = frame.relations.rbegin()->first;
  out.succ.assign(out.top + 1, std::vector<Mask>(out.names.size(), 0));
  for (const auto& [alpha, pairs] : frame.relations) {
    for (const auto& [a, b] : pairs) {
      auto ia = index.find(a);
      auto ib = index.find(b);
      if (ia == index.end() || ib == index.end())
        throw Error(ErrorKind::ParseError,
                    "relation " + std::to_string(alpha) + " mentions unknown world '" +
                        (ia == index.end() ? a : b) + "'");
      out.succ[alpha][ia->second] |= bit(ib->second);
    }
  }
  return out;
}

std::optional<FrameViolation> check_conditions(const std::vector<std::string>& names,
                                               const std::vector<std::vector<Mask>>& succ) {
  const std::size_t n = names.size();
  auto violation = [&](int cond, std::size_t x, std::size_t y, std::size_t z, Level a,
                       std::optional<Level> b) {
    return FrameViolation{cond, names[x], names[y], names[z], a, b};
  };
  for (Level a = 0; a < succ.size(); ++a) {
    const auto& r = succ[a];
    for (std::size_t x = 0; x < n; ++x) {
      if (r[x] & bit(x)) return violation(1, x, x, x, a, std::nullopt);
      for (std::size_t y = 0; y < n; ++y) {
        if (!(r[x] & bit(y))) continue;
        Mask missing = r[y] & ~r[x];
        if (missing) return violation(1, x, y, std::countr_zero(missing), a, std::nullopt);
      }
    }
    for (Level b = 0; b < a; ++b) {
      const auto& lower = succ[b];
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          if (!(r[x] & bit(y))) continue;
          Mask differ = lower[x] ^ lower[y];
          if (differ) return violation(2, x, y, std::countr_zero(differ), a, b);
          Mask escaped = lower[y] & ~r[x];
          if (escaped) return violation(3, x, y, std::countr_zero(escaped), a, b);
        }
      }
    }
  }
  return std::nullopt;
}

constexpr std::array<const char*, kHardMaxWorlds> kWorldNames{"x", "y", "z", "u", "v", "w"};

using Order = std::array<std::uint8_t, kHardMaxWorlds>;  // successor sets

// Every irreflexive transitive relation on n labelled points, each one
// obtained from one on the first n-1 points by placing point n-1.
const std::vector<Order>& strict_orders(unsigned n) {
  static std::mutex lock;
  static std::vector<std::vector<Order>> cache{{Order{}}};
  std::lock_guard guard(lock);
  while (cache.size() <= n) {
    const unsigned k = static_cast<unsigned>(cache.size()) - 1;
    std::vector<Order> next;
    for (const Order& r : cache[k]) {
      for (unsigned up = 0; up < (1U << k); ++up) {
        bool up_closed = true;
        for (unsigned s = 0; s < k && up_closed; ++s)
          if ((up >> s & 1U) && (r[s] & ~up)) up_closed = false;
        if (!up_closed) continue;
        for (unsigned down = 0; down < (1U << k); ++down) {
          if (down & up) continue;
          bool ok = true;
          for (unsigned p = 0; p < k && ok; ++p) {
            if (!(down >> p & 1U)) continue;
            if ((r[p] & up) != up) ok = false;
          }
          for (unsigned q = 0; q < k && ok; ++q)
            if (!(down >> q & 1U) && (r[q] & down)) ok = false;
          if (!ok) continue;
          Order o = r;
          o[k] = static_cast<std::uint8_t>(up);
          for (unsigned p = 0; p < k; ++p)
            if (down >> p & 1U) o[p] |= static_cast<std::uint8_t>(1U << k);
          next.push_back(o);
        }
      }
    }
    cache.push_back(std::move(next));
  }
  return cache[n];
}

}  // namespace

class FrameBuilder {
 public:
  static JModel build(std::vector<std::string> names, std::vector<std::vector<Mask>> succ,
                      Level max_index) {
    JModel m;
    m.names_ = std::move(names);
    m.max_index_ = max_index;
    m.succ_ = std::move(succ);
    m.succ_.resize(max_index + 1, std::vector<Mask>(m.names_.size(), 0));
    return m;
  }
};

std::string FrameViolation::describe() const {
  std::string out = "condition " + std::to_string(condition) + " fails for R_" +
                    std::to_string(alpha);
  if (beta) out += " and R_" + std::to_string(*beta);
  out += " at (" + x + ", " + y + ", " + z + ")";
  return out;
}

std::optional<FrameViolation> validate_frame(const FrameCandidate& frame) {
  IndexedFrame f = index_frame(frame);
  return check_conditions(f.names, f.succ);
}

JModel JModel::make(const FrameCandidate& frame, Level max_index) {
  IndexedFrame f = index_frame(frame);
  if (auto v = check_conditions(f.names, f.succ))
    throw Error(ErrorKind::FrameViolation, v->describe());
  return FrameBuilder::build(std::move(f.names), std::move(f.succ),
                             std::max(max_index, f.top));
}

std::size_t JModel::world(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw Error(ErrorKind::ParseError, "unknown world '" + name + "'");
  return static_cast<std::size_t>(it - names_.begin());
}

std::uint64_t JModel::successors(Level alpha, std::size_t i) const {
  if (alpha > max_index_) return 0;
  return succ_[alpha][i];
}

FrameCandidate JModel::frame() const {
  FrameCandidate out;
  out.worlds = names_;
  for (Level a = 0; a <= max_index_; ++a) {
    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j)
        if (related(a, i, j)) pairs.emplace_back(names_[i], names_[j]);
    if (!pairs.empty()) out.relations.emplace(a, std::move(pairs));
  }
  return out;
}

JModel JModel::widened(Level max_index) const {
  if (max_index <= max_index_) return *this;
  return FrameBuilder::build(names_, succ_, max_index);
}

std::string to_json(const JModel& m) {
  nlohmann::ordered_json j;
  j["worlds"] = m.worlds();
  nlohmann::ordered_json rel = nlohmann::ordered_json::object();
  for (const auto& [alpha, pairs] : m.frame().relations) {
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& [a, b] : pairs) list.push_back({a, b});
    rel[std::to_string(alpha)] = std::move(list);
  }
  j["relations"] = std::move(rel);
  return j.dump();
}

JModel model_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("model file: ") + e.what());
  }
  auto fail = [](const std::string& what) {
    throw Error(ErrorKind::ParseError, "model file: " + what);
  };
  if (!j.is_object() || !j.contains("worlds") || !j["worlds"].is_array())
    fail("expected an object with a \"worlds\" array");
  FrameCandidate frame;
  for (const auto& w : j["worlds"]) {
    if (!w.is_string()) fail("world names must be strings");
    frame.worlds.push_back(w.get<std::string>());
  }
  if (j.contains("relations")) {
    if (!j["relations"].is_object()) fail("\"relations\" must be an object");
    for (const auto& [key, pairs] : j["relations"].items()) {
      if (key.empty() || key.size() > 9 ||
          !std::all_of(key.begin(), key.end(), [](char c) { return c >= '0' && c <= '9'; }))
        fail("relation index '" + key + "' is not a natural number");
      if (!pairs.is_array()) fail("relation " + key + " must be an array of pairs");
      auto& out = frame.relations[static_cast<Level>(std::stoul(key))];
      for (const auto& p : pairs) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
          fail("relation " + key + " must contain [\"a\",\"b\"] pairs");
        out.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
      }
    }
  }
  return JModel::make(frame);
}

namespace {

class Evaluator {
 public:
  explicit Evaluator(const JModel& m) : m_(m), all_(full_mask(m.size())) {}

  Mask eval(const Formula& f) {
    if (auto it = memo_.find(f.identity()); it != memo_.end()) return it->second;
    Mask out = compute(f);
    memo_.emplace(f.identity(), out);
    return out;
  }

 private:
  Mask diamond(const Modal& modal, Mask target) {
    Level a = level_of(modal);
    if (a > m_.max_index())
      throw Error(ErrorKind::SignatureError,
                  "modality " + std::to_string(a) + " exceeds the model's index " +
                      std::to_string(m_.max_index()));
    Mask out = 0;
    for (std::size_t i = 0; i < m_.size(); ++i)
      if (m_.successors(a, i) & target) out |= bit(i);
    return out;
  }

  Mask compute(const Formula& f) {
    switch (f.kind()) {
      case NodeKind::Top: return all_;
      case NodeKind::Bot: return 0;
      case NodeKind::Var:
        throw Error(ErrorKind::NotClosed, "propositional variable '" + f.name() + "'");
      case NodeKind::Not: return all_ & ~eval(f.child());
      case NodeKind::And: return eval(f.lhs()) & eval(f.rhs());
      case NodeKind::Or: return eval(f.lhs()) | eval(f.rhs());
      case NodeKind::Imp: return (all_ & ~eval(f.lhs())) | eval(f.rhs());
      case NodeKind::Dia: return diamond(f.modal(), eval(f.child()));
      case NodeKind::Box: return all_ & ~diamond(f.modal(), all_ & ~eval(f.child()));
    }
    return 0;
  }

  const JModel& m_;
  Mask all_;
  std::unordered_map<const void*, Mask> memo_;
};

}  // namespace

std::uint64_t truth_set(const JModel& m, const Formula& f) { return Evaluator(m).eval(f); }

bool model_check(const JModel& m, std::size_t world, const Formula& f) {
  if (world >= m.size())
    throw Error(ErrorKind::ParseError, "world index " + std::to_string(world) + " out of range");
  return (truth_set(m, f) >> world) & 1U;
}

bool model_check(const JModel& m, const std::string& world, const Formula& f) {
  return model_check(m, m.world(world), f);
}

CheckResult is_valid_on(const JModel& m, const Formula& f) {
  Mask refuted = full_mask(m.size()) & ~truth_set(m, f);
  if (!refuted) return {};
  return {false, static_cast<std::size_t>(std::countr_zero(refuted))};
}

namespace {

class FrameWalker {
 public:
  FrameWalker(unsigned n, Level max_index, const std::function<bool(const JModel&)>& visit)
      : n_(n), top_(max_index), visit_(visit), orders_(strict_orders(n)) {
    for (unsigned i = 0; i < n; ++i) names_.emplace_back(kWorldNames[i]);
  }

  void run() { level(0); }

 private:
  // Returns false once the visitor asked to stop.
  bool level(Level a) {
    if (a > top_) return visit_(FrameBuilder::build(names_, succ_, top_));
    // Condition 2: R_a only links worlds that agree on every lower relation.
    std::array<Mask, kHardMaxWorlds> allowed{};
    for (unsigned x = 0; x < n_; ++x)
      for (unsigned y = 0; y < n_; ++y) {
        bool same = std::all_of(succ_.begin(), succ_.end(),
                                [&](const auto& r) { return r[x] == r[y]; });
        if (same) allowed[x] |= bit(y);
      }
    for (const Order& o : orders_) {
      bool ok = true;
      for (unsigned x = 0; x < n_ && ok; ++x) {
        if (o[x] & ~allowed[x]) ok = false;
        // Condition 3: x R_a y and y R_b z give x R_a z.
        for (unsigned y = 0; y < n_ && ok; ++y) {
          if (!(o[x] >> y & 1U)) continue;
          for (const auto& r : succ_)
            if (r[y] & ~Mask{o[x]}) ok = false;
        }
      }
      if (!ok) continue;
      std::vector<Mask> rel(n_);
      for (unsigned x = 0; x < n_; ++x) rel[x] = o[x];
      succ_.push_back(std::move(rel));
      bool go_on = level(a + 1);
      succ_.pop_back();
      if (!go_on) return false;
    }
    return true;
  }

  unsigned n_;
  Level top_;
  const std::function<bool(const JModel&)>& visit_;
  const std::vector<Order>& orders_;
  std::vector<std::string> names_;
  std::vector<std::vector<Mask>> succ_;
};

void require_world_cap(unsigned worlds) {
  if (worlds > kHardMaxWorlds)
    throw Error(ErrorKind::CapExceeded, "frame search is limited to " +
                                            std::to_string(kHardMaxWorlds) + " worlds, got " +
                                            std::to_string(worlds));
}

}  // namespace

void for_each_frame(unsigned worlds, Level max_index,
                    const std::function<bool(const JModel&)>& visit) {
  require_world_cap(worlds);
  if (worlds == 0) return;
  FrameWalker(worlds, max_index, visit).run();
}

std::vector<JModel> enumerate_frames(unsigned worlds, Level max_index) {
  std::vector<JModel> out;
  for_each_frame(worlds, max_index, [&](const JModel& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

std::optional<Countermodel> countermodel_search(const Formula& f, const OrderProvider& p,
                                                unsigned max_worlds, Bridge bridge) {
  require_world_cap(max_worlds);
  Formula target = reduction_target(f, p, bridge);
  std::size_t signature = hat(f, p).map.size();
  Level max_index = signature == 0 ? 0 : static_cast<Level>(signature - 1);
  std::optional<Countermodel> found;
  for (unsigned n = 1; n <= max_worlds && !found; ++n) {
    for_each_frame(n, max_index, [&](const JModel& m) {
      CheckResult r = is_valid_on(m, target);
      if (r.valid) return true;
      found = Countermodel{m, *r.refuting_world, target};
      return false;
    });
  }
  return found;
}

}  // namespace glp
