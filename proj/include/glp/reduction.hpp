#pragma once

// Relabelling formulas onto an initial segment of the naturals, and the
// bridge formulas that reduce provability to validity on finite J-frames.

#include <vector>

#include "glp/order.hpp"
#include "glp/syntax.hpp"
#include "glp/worm.hpp"

namespace glp {

/// A formula whose modals were relabelled order-isomorphically onto
/// {0, ..., n-1}; `map` sends index i back to the original modal.
struct HattedFormula {
  Formula formula;
  SignatureMap map;
};

/// `extra` modals join the signature even if they do not occur in `f`.
HattedFormula hat(const Formula& f, const OrderProvider& p,
                  const std::vector<Modal>& extra = {});
Formula unhat(const HattedFormula& h);
Formula unhat(const Formula& hatted, const SignatureMap& map);

NWorm hat_worm(const Worm& w, const SignatureMap& map);
Worm unhat_worm(const NWorm& w, const SignatureMap& map);

/// Index of a modal of the naturals (or a finite order) as a level.
Level level_of(const Modal& m);
Modal natural_modal(Level level);

struct BoxedSubformula {
  Level modal;
  Formula body;  // the formula under the box
};

/// The boxed subformulas [m]body of f, diamonds <m>g contributing [m]~g;
/// duplicates removed, sorted by modal and then by printed body.
std::vector<BoxedSubformula> boxed_subformulas(const Formula& f);

/// N+(f) = N(f) & AND_i [m_i]N(f), with
/// N(f) = AND_{i<j} ([m_i]f_i -> [m_j]f_i). Uses only the modals of f.
Formula n_plus(const Formula& f);
/// M+(f) = M(f) & AND_{k<=max} [k]M(f), with
/// M(f) = AND_i AND_{m_i<k<=max} ([m_i]f_i -> [k]f_i).
Formula m_plus(const Formula& f);

enum class Bridge { NPlus, MPlus };

/// bridge(hat(f)) -> hat(f): the formula handed to the J-frame oracle.
/// Throws NotClosed.
Formula reduction_target(const Formula& f, const OrderProvider& p,
                         Bridge bridge = Bridge::NPlus);

}  // namespace glp
