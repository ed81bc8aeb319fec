#include "glp/closed.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "glp/error.hpp"
#include "glp/reduction.hpp"

namespace glp {

std::vector<NWorm> WormDNF::worms() const {
  std::vector<NWorm> out;
  for (const auto& d : disjuncts) {
    out.insert(out.end(), d.positives.begin(), d.positives.end());
    out.insert(out.end(), d.negatives.begin(), d.negatives.end());
  }
  return out;
}

Formula to_formula(const WormDNF& d) {
  std::vector<Formula> disjuncts;
  for (const auto& dj : d.disjuncts) {
    std::vector<Formula> lits;
    for (const auto& p : dj.positives) lits.push_back(to_formula(p));
    for (const auto& n : dj.negatives) lits.push_back(Formula::neg(to_formula(n)));
    disjuncts.push_back(Formula::conj_all(lits));
  }
  return Formula::disj_all(disjuncts);
}

Formula to_formula(const WormClause& c) {
  std::vector<Formula> rhs;
  for (const auto& b : c.succedents) rhs.push_back(to_formula(b.worm()));
  return Formula::imp(to_formula(c.antecedent.worm()), Formula::disj_all(rhs));
}

Formula to_formula(const std::vector<WormClause>& clauses) {
  std::vector<Formula> parts;
  for (const auto& c : clauses) parts.push_back(to_formula(c));
  return Formula::conj_all(parts);
}

namespace {

// Literals are kept as normal worms so that duplicates and complementary
// pairs are recognised; the Boolean structure itself is left alone.
bool add_literal(std::vector<NWorm>& lits, const NWorm& w) {
  if (std::find(lits.begin(), lits.end(), w) != lits.end()) return false;
  lits.push_back(w);
  return true;
}

// Returns false when the disjunct became F.
bool add_positive(WormDisjunct& d, const NWorm& w) {
  if (w.empty()) return true;
  if (std::find(d.negatives.begin(), d.negatives.end(), w) != d.negatives.end())
    return false;
  add_literal(d.positives, w);
  return true;
}

bool add_negative(WormDisjunct& d, const NWorm& w) {
  if (w.empty()) return false;
  if (std::find(d.positives.begin(), d.positives.end(), w) != d.positives.end())
    return false;
  add_literal(d.negatives, w);
  return true;
}

class DnfAccumulator {
 public:
  void add(WormDisjunct d) {
    if (!seen_.insert(d).second) return;
    out_.disjuncts.push_back(std::move(d));
    if (out_.disjuncts.size() > kMaxDisjuncts)
      throw Error(ErrorKind::ResourceLimit,
                  "Boolean combination exceeds " + std::to_string(kMaxDisjuncts) +
                      " disjuncts");
  }
  WormDNF take() { return std::move(out_); }

 private:
  std::set<WormDisjunct> seen_;
  WormDNF out_;
};

WormDNF disjunction(const WormDNF& a, const WormDNF& b) {
  DnfAccumulator acc;
  for (const auto& d : a.disjuncts) acc.add(d);
  for (const auto& d : b.disjuncts) acc.add(d);
  return acc.take();
}

WormDNF conjunction(const WormDNF& a, const WormDNF& b) {
  DnfAccumulator acc;
  for (const auto& x : a.disjuncts) {
    for (const auto& y : b.disjuncts) {
      WormDisjunct d = x;
      bool alive = true;
      for (const auto& p : y.positives) alive = alive && add_positive(d, p);
      for (const auto& n : y.negatives) alive = alive && add_negative(d, n);
      if (alive) acc.add(std::move(d));
    }
  }
  return acc.take();
}

WormDNF negation(const WormDNF& a) {
  WormDNF result = WormDNF::top();
  for (const auto& d : a.disjuncts) {
    WormDNF flipped;
    for (const auto& p : d.positives) flipped.disjuncts.push_back({{}, {p}});
    for (const auto& n : d.negatives) flipped.disjuncts.push_back({{n}, {}});
    result = conjunction(result, flipped);
    if (result.is_bottom()) break;
  }
  return result;
}

void check_signature(const NWorm& w, Level signature) {
  if (signature == kUnboundedSignature) return;
  for (Level e : w)
    if (e >= signature)
      throw Error(ErrorKind::SignatureError,
                  "worm " + to_string(w) + " leaves the signature {0.." +
                      std::to_string(signature - 1) + "}");
}

// w = high·low with high in W_alpha and low empty or starting below alpha.
std::pair<NWorm, NWorm> split_at_level(const NWorm& w, Level alpha) {
  auto it = std::find_if(w.begin(), w.end(), [alpha](Level e) { return e < alpha; });
  return {NWorm(std::vector<Level>(w.begin(), it)),
          NWorm(std::vector<Level>(it, w.end()))};
}

std::optional<WormDisjunct> diamond_of_disjunct(Level alpha, const WormDisjunct& d) {
  NWorm high;
  std::vector<NWorm> low_positive;
  for (const auto& p : d.positives) {
    auto [h, l] = split_at_level(p, alpha);
    high = worm_conj(high, h);
    if (!l.empty()) low_positive.push_back(l);
  }
  high = normalize(high);

  // ~(h·l) is ~h | ~l. A branch keeping ~h with h not entailed by `high`
  // vanishes under the diamond and subsumes the branch keeping ~l; when h is
  // entailed only ~l survives (or the disjunct is F if l is empty).
  std::vector<NWorm> low_negative;
  for (const auto& n : d.negatives) {
    auto [h, l] = split_at_level(n, alpha);
    if (h.empty()) {
      low_negative.push_back(normalize(l));
    } else if (worm_entails(high, h)) {
      if (l.empty()) return std::nullopt;
      low_negative.push_back(normalize(l));
    }
  }

  NWorm positive = high.prefixed(alpha);
  for (const auto& l : low_positive) positive = worm_conj(positive, l);
  WormDisjunct out;
  out.positives.push_back(normalize(positive));
  for (const auto& l : low_negative) {
    if (!add_negative(out, l)) return std::nullopt;
  }
  return out;
}

class BcwBuilder {
 public:
  WormDNF build(const Formula& f, bool positive) {
    auto key = std::make_pair(f.identity(), positive);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    WormDNF out = compute(f, positive);
    memo_.emplace(key, out);
    return out;
  }

 private:
  WormDNF compute(const Formula& f, bool positive) {
    switch (f.kind()) {
      case NodeKind::Top:
        return positive ? WormDNF::top() : WormDNF::bottom();
      case NodeKind::Bot:
        return positive ? WormDNF::bottom() : WormDNF::top();
      case NodeKind::Var:
        throw Error(ErrorKind::NotClosed, "propositional variable '" + f.name() + "'");
      case NodeKind::Not:
        return build(f.child(), !positive);
      case NodeKind::And:
        return positive ? conjunction(build(f.lhs(), true), build(f.rhs(), true))
                        : disjunction(build(f.lhs(), false), build(f.rhs(), false));
      case NodeKind::Or:
        return positive ? disjunction(build(f.lhs(), true), build(f.rhs(), true))
                        : conjunction(build(f.lhs(), false), build(f.rhs(), false));
      case NodeKind::Imp:
        return positive ? disjunction(build(f.lhs(), false), build(f.rhs(), true))
                        : conjunction(build(f.lhs(), true), build(f.rhs(), false));
      case NodeKind::Dia: {
        WormDNF d = diamond_dnf(level_of(f.modal()), build(f.child(), true));
        return positive ? d : negation(d);
      }
      case NodeKind::Box: {
        // [a]g = ~<a>~g
        WormDNF d = diamond_dnf(level_of(f.modal()), build(f.child(), false));
        return positive ? negation(d) : d;
      }
    }
    return WormDNF::bottom();
  }

  std::map<std::pair<const void*, bool>, WormDNF> memo_;
};

void require_closed(const Formula& f) {
  if (!is_closed(f))
    throw Error(ErrorKind::NotClosed, "formula has propositional variables: " + print(f));
}

}  // namespace

WormDNF diamond_dnf(Level alpha, const WormDNF& d, Level signature) {
  if (signature != kUnboundedSignature && alpha >= signature)
    throw Error(ErrorKind::SignatureError,
                "modality " + std::to_string(alpha) + " outside the signature");
  for (const auto& w : d.worms()) check_signature(w, signature);
  DnfAccumulator acc;
  for (const auto& dj : d.disjuncts) {
    if (auto out = diamond_of_disjunct(alpha, dj)) acc.add(std::move(*out));
  }
  return acc.take();
}

WormDNF bcw(const Formula& f) {
  require_closed(f);
  return BcwBuilder().build(f, true);
}

std::vector<WormClause> formula_wnf(const Formula& f) {
  require_closed(f);
  // f <-> AND over disjuncts D of ~f of ~D, and ~(P & AND ~N_j) is P -> OR N_j.
  WormDNF negated = BcwBuilder().build(f, false);
  std::vector<WormClause> clauses;
  for (const auto& d : negated.disjuncts) {
    NWorm antecedent;
    for (const auto& p : d.positives) antecedent = worm_conj(antecedent, p);
    WormClause clause;
    clause.antecedent = normalize(antecedent);
    for (const auto& n : d.negatives) {
      NormalWorm b = normalize(n);
      if (std::find(clause.succedents.begin(), clause.succedents.end(), b) ==
          clause.succedents.end())
        clause.succedents.push_back(std::move(b));
    }
    clauses.push_back(std::move(clause));
  }
  return clauses;
}

Verdict decide(const std::vector<WormClause>& clauses) {
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    const auto& c = clauses[i];
    // A clause A -> F never holds: every worm is consistent.
    bool holds = std::any_of(c.succedents.begin(), c.succedents.end(),
                             [&](const NormalWorm& b) {
                               return worm_entails(c.antecedent.worm(), b.worm());
                             });
    if (!holds) return Verdict{false, i};
  }
  return Verdict{true, std::nullopt};
}

Verdict decide(const Formula& f) { return decide(formula_wnf(f)); }

Verdict decide(const Formula& f, const OrderProvider& p) {
  require_closed(f);
  return decide(hat(f, p).formula);
}

bool is_consistent(const Formula& f) { return !decide(Formula::neg(f)).provable; }

bool is_consistent(const Formula& f, const OrderProvider& p) {
  return !decide(Formula::neg(f), p).provable;
}

NWorm zero_diamond_worm(const Formula& f) {
  WormDNF d = diamond_dnf(0, bcw(f));
  if (d.is_bottom())
    throw Error(ErrorKind::Inconsistent, "formula is inconsistent: " + print(f));
  // Below 0 there is nothing, so every disjunct is a single worm beginning
  // with 0; these are linearly ordered by entailment and the weakest one is
  // equivalent to the whole disjunction.
  NWorm weakest = d.disjuncts.front().positives.front();
  for (const auto& dj : d.disjuncts) {
    const NWorm& w = dj.positives.front();
    if (worm_entails(weakest, w)) weakest = w;
  }
  return normalize(weakest);
}

Worm zero_diamond_worm(const Formula& f, const OrderProvider& p) {
  require_closed(f);
  auto least = p.least();
  if (!least)
    throw Error(ErrorKind::SignatureError, "order " + p.id() + " has no least element");
  auto h = hat(f, p, {p.parse(*least)});
  return unhat_worm(zero_diamond_worm(h.formula), h.map);
}

}  // namespace glp
