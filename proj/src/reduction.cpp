#include "glp/reduction.hpp"

#include <algorithm>
#include <functional>

#include "glp/error.hpp"

namespace glp {

Level level_of(const Modal& m) {
  if (m.provider() != naturals()->id() && !m.provider().starts_with("finite:"))
    throw Error(ErrorKind::SignatureError,
                "modal '" + m.token() + "' of order " + m.provider() +
                    " is not a natural-number index");
  if (m.token().size() > 9)
    throw Error(ErrorKind::SignatureError, "modal index too large: " + m.token());
  return static_cast<Level>(std::stoul(m.token()));
}

Modal natural_modal(Level level) {
  return Modal(std::to_string(level), naturals()->id());
}

HattedFormula hat(const Formula& f, const OrderProvider& p,
                  const std::vector<Modal>& extra) {
  auto modals = modals_of(f);
  modals.insert(modals.end(), extra.begin(), extra.end());
  HattedFormula out;
  out.map = signature_of(p, std::move(modals));
  out.formula = map_modals(f, [&](const Modal& m) {
    return natural_modal(static_cast<Level>(out.map.index_of(m)));
  });
  return out;
}

Formula unhat(const Formula& hatted, const SignatureMap& map) {
  return map_modals(hatted, [&](const Modal& m) { return map.modal_at(level_of(m)); });
}

Formula unhat(const HattedFormula& h) { return unhat(h.formula, h.map); }

NWorm hat_worm(const Worm& w, const SignatureMap& map) {
  std::vector<Level> out;
  for (const auto& m : w.modals) out.push_back(static_cast<Level>(map.index_of(m)));
  return NWorm(std::move(out));
}

Worm unhat_worm(const NWorm& w, const SignatureMap& map) {
  Worm out;
  for (Level e : w) out.modals.push_back(map.modal_at(e));
  return out;
}

namespace {

Formula negation_of(const Formula& f) {
  switch (f.kind()) {
    case NodeKind::Top: return Formula::bot();
    case NodeKind::Bot: return Formula::top();
    case NodeKind::Not: return f.child();
    default: return Formula::neg(f);
  }
}

}  // namespace

std::vector<BoxedSubformula> boxed_subformulas(const Formula& f) {
  std::vector<BoxedSubformula> found;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    if (g.kind() == NodeKind::Box)
      found.push_back({level_of(g.modal()), g.child()});
    else if (g.kind() == NodeKind::Dia)
      found.push_back({level_of(g.modal()), negation_of(g.child())});
    for (std::size_t i = 0; i < g.arity(); ++i) walk(g.child(i));
  };
  walk(f);

  std::vector<std::pair<BoxedSubformula, std::string>> keyed;
  for (auto& b : found) {
    std::string key = print(b.body);
    keyed.emplace_back(std::move(b), std::move(key));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
    if (x.first.modal != y.first.modal) return x.first.modal < y.first.modal;
    return x.second < y.second;
  });
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const auto& x, const auto& y) {
                            return x.first.modal == y.first.modal &&
                                   x.first.body == y.first.body;
                          }),
              keyed.end());
  std::vector<BoxedSubformula> out;
  for (auto& k : keyed) out.push_back(std::move(k.first));
  return out;
}

Formula n_plus(const Formula& f) {
  auto boxed = boxed_subformulas(f);
  std::vector<Formula> bridges;
  for (std::size_t i = 0; i < boxed.size(); ++i)
    for (std::size_t j = i + 1; j < boxed.size(); ++j)
      bridges.push_back(
          Formula::imp(Formula::box(natural_modal(boxed[i].modal), boxed[i].body),
                       Formula::box(natural_modal(boxed[j].modal), boxed[i].body)));
  Formula n = Formula::conj_all(bridges);

  std::vector<Formula> parts{n};
  std::vector<Level> seen;
  for (const auto& b : boxed) {
    if (std::find(seen.begin(), seen.end(), b.modal) != seen.end()) continue;
    seen.push_back(b.modal);
    parts.push_back(Formula::box(natural_modal(b.modal), n));
  }
  return Formula::conj_all(parts);
}

Formula m_plus(const Formula& f) {
  auto boxed = boxed_subformulas(f);
  if (boxed.empty()) return Formula::top();
  Level top = boxed.back().modal;
  std::vector<Formula> bridges;
  for (const auto& b : boxed)
    for (Level k = b.modal + 1; k <= top; ++k)
      bridges.push_back(Formula::imp(Formula::box(natural_modal(b.modal), b.body),
                                     Formula::box(natural_modal(k), b.body)));
  Formula m = Formula::conj_all(bridges);

  std::vector<Formula> parts{m};
  for (Level k = 0; k <= top; ++k) parts.push_back(Formula::box(natural_modal(k), m));
  return Formula::conj_all(parts);
}

Formula reduction_target(const Formula& f, const OrderProvider& p, Bridge bridge) {
  if (!is_closed(f))
    throw Error(ErrorKind::NotClosed, "formula has propositional variables: " + print(f));
  auto h = hat(f, p);
  Formula premise = bridge == Bridge::NPlus ? n_plus(h.formula) : m_plus(h.formula);
  return Formula::imp(premise, h.formula);
}

}  // namespace glp
