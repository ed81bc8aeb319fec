#pragma once

namespace glp {

template <class F>
Formula map_modals(const Formula& f, F&& rename) {
  switch (f.kind()) {
    case NodeKind::Top:
    case NodeKind::Bot:
    case NodeKind::Var:
      return f;
    case NodeKind::Not:
      return Formula::neg(map_modals(f.child(), rename));
    case NodeKind::And:
      return Formula::conj(map_modals(f.lhs(), rename), map_modals(f.rhs(), rename));
    case NodeKind::Or:
      return Formula::disj(map_modals(f.lhs(), rename), map_modals(f.rhs(), rename));
    case NodeKind::Imp:
      return Formula::imp(map_modals(f.lhs(), rename), map_modals(f.rhs(), rename));
    case NodeKind::Box:
      return Formula::box(rename(f.modal()), map_modals(f.child(), rename));
    case NodeKind::Dia:
      return Formula::dia(rename(f.modal()), map_modals(f.child(), rename));
  }
  return f;
}

}  // namespace glp
