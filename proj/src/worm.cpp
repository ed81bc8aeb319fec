#include "glp/worm.hpp"

#include <algorithm>

#include "glp/error.hpp"

namespace glp {

std::optional<Level> NWorm::min_modal() const {
  if (entries_.empty()) return std::nullopt;
  return *std::min_element(entries_.begin(), entries_.end());
}

std::optional<Level> NWorm::max_modal() const {
  if (entries_.empty()) return std::nullopt;
  return *std::max_element(entries_.begin(), entries_.end());
}

bool NWorm::at_least(Level alpha) const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [alpha](Level e) { return e >= alpha; });
}

NWorm NWorm::then(const NWorm& tail) const {
  std::vector<Level> out = entries_;
  out.insert(out.end(), tail.entries_.begin(), tail.entries_.end());
  return NWorm(std::move(out));
}

NWorm NWorm::prefixed(Level alpha) const {
  std::vector<Level> out;
  out.reserve(entries_.size() + 1);
  out.push_back(alpha);
  out.insert(out.end(), entries_.begin(), entries_.end());
  return NWorm(std::move(out));
}

std::string to_string(const NWorm& w) {
  if (w.empty()) return "e";
  if (std::all_of(w.begin(), w.end(), [](Level e) { return e < 10; })) {
    std::string out;
    for (Level e : w) out += static_cast<char>('0' + e);
    return out;
  }
  return print(to_formula(w));
}

Formula to_formula(const NWorm& w) {
  Formula f = Formula::top();
  const std::string id = naturals()->id();
  for (auto it = w.entries().rbegin(); it != w.entries().rend(); ++it)
    f = Formula::dia(Modal(std::to_string(*it), id), f);
  return f;
}

std::optional<NWorm> as_nworm(const Formula& f) {
  auto w = as_worm(f);
  if (!w) return std::nullopt;
  std::vector<Level> out;
  for (const auto& m : w->modals) {
    if (m.provider() != naturals()->id() && !m.provider().starts_with("finite:"))
      throw Error(ErrorKind::SignatureError,
                  "worm modal '" + m.token() + "' is not a natural number");
    if (m.token().size() > 9)
      throw Error(ErrorKind::SignatureError, "modal index too large: " + m.token());
    out.push_back(static_cast<Level>(std::stoul(m.token())));
  }
  return NWorm(std::move(out));
}

// ---------------------------------------------------------------------------
// Block structure

NWorm BlockDecomposition::reassemble() const {
  std::vector<Level> out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i > 0) out.push_back(pivot);
    out.insert(out.end(), blocks[i].begin(), blocks[i].end());
  }
  return NWorm(std::move(out));
}

BlockDecomposition decompose_at(const NWorm& w, Level pivot) {
  BlockDecomposition d;
  d.pivot = pivot;
  std::vector<Level> current;
  for (Level e : w) {
    if (e == pivot) {
      d.blocks.emplace_back(std::move(current));
      current.clear();
    } else {
      current.push_back(e);
    }
  }
  d.blocks.emplace_back(std::move(current));
  return d;
}

BlockDecomposition decompose(const NWorm& w) {
  auto pivot = w.min_modal();
  if (!pivot) throw Error(ErrorKind::EmptyWorm, "cannot decompose the empty worm");
  return decompose_at(w, *pivot);
}

namespace {

// Joins blocks listed left to right with the pivot between neighbours.
NWorm join(const std::vector<NWorm>& blocks, Level pivot) {
  BlockDecomposition d{pivot, blocks};
  return d.reassemble();
}

// Both arguments in WNF. Normal forms of W_alpha are compared block by block
// at their joint minimum, from the right, shorter block lists first; the
// answer does not depend on alpha as long as both worms lie in W_alpha.
Ordering compare_normal(const NWorm& a, const NWorm& b) {
  if (a == b) return Ordering::Eq;
  if (a.empty()) return Ordering::Lt;
  if (b.empty()) return Ordering::Gt;
  Level pivot = std::min(*a.min_modal(), *b.min_modal());
  if (*a.max_modal() == pivot && *b.max_modal() == pivot)
    return a.size() < b.size() ? Ordering::Lt : Ordering::Gt;
  auto da = decompose_at(a, pivot);
  auto db = decompose_at(b, pivot);
  std::size_t i = da.blocks.size();
  std::size_t j = db.blocks.size();
  while (i > 0 && j > 0) {
    --i;
    --j;
    Ordering c = compare_normal(da.blocks[i], db.blocks[j]);
    if (c != Ordering::Eq) return c;
  }
  if (i == 0 && j == 0) return Ordering::Eq;
  return i == 0 ? Ordering::Lt : Ordering::Gt;
}

NWorm normal_form(const NWorm& w) {
  if (w.empty()) return w;
  auto d = decompose(w);
  // Built from the right; suffix.back() is the leftmost block so far.
  std::vector<NWorm> suffix;
  for (auto it = d.blocks.rbegin(); it != d.blocks.rend(); ++it) {
    NWorm head = normal_form(*it);
    // head pivot S pivot rest  <->  head pivot rest  whenever head >_{pivot+1} S;
    // with S empty this also collapses repeated pivots.
    while (!suffix.empty() && compare_normal(head, suffix.back()) == Ordering::Gt)
      suffix.pop_back();
    suffix.push_back(std::move(head));
  }
  std::reverse(suffix.begin(), suffix.end());
  return join(suffix, d.pivot);
}

bool wnf(const NWorm& w) {
  if (w.empty()) return true;
  auto d = decompose(w);
  for (const auto& b : d.blocks)
    if (!wnf(b)) return false;
  for (std::size_t i = 0; i + 1 < d.blocks.size(); ++i)
    if (compare_normal(d.blocks[i], d.blocks[i + 1]) == Ordering::Gt) return false;
  return true;
}

struct HeadTail {
  NWorm head;
  std::optional<NWorm> tail;  // the part after the first pivot, if any
};

HeadTail split_head(const NWorm& w, Level pivot) {
  auto it = std::find(w.begin(), w.end(), pivot);
  HeadTail out;
  out.head = NWorm(std::vector<Level>(w.begin(), it));
  if (it != w.end()) out.tail = NWorm(std::vector<Level>(it + 1, w.end()));
  return out;
}

// Both arguments in WNF.
NWorm conj_normal(const NWorm& a, const NWorm& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  Level pivot = std::min(*a.min_modal(), *b.min_modal());
  auto sa = split_head(a, pivot);
  auto sb = split_head(b, pivot);
  NWorm head = conj_normal(sa.head, sb.head);
  // Keep the stronger of <pivot>tail_a and <pivot>tail_b.
  const NWorm* tail = nullptr;
  if (sa.tail && sb.tail)
    tail = compare_normal(*sa.tail, *sb.tail) == Ordering::Lt ? &*sb.tail : &*sa.tail;
  else if (sa.tail)
    tail = &*sa.tail;
  else
    tail = &*sb.tail;
  return head.then(tail->prefixed(pivot));
}

void require_fragment(Level alpha, const NWorm& w) {
  if (!w.at_least(alpha))
    throw Error(ErrorKind::NotInFragment,
                "worm " + to_string(w) + " has an entry below " + std::to_string(alpha));
}

}  // namespace

NormalWorm NormalWorm::certify(NWorm w) {
  if (!wnf(w))
    throw Error(ErrorKind::NotNormal, "worm " + to_string(w) + " is not in WNF");
  return NormalWorm(std::move(w), Trusted{});
}

bool is_wnf(const NWorm& w) { return wnf(w); }

NormalWorm normalize(const NWorm& w) {
  return NormalWorm(normal_form(w), NormalWorm::Trusted{});
}

Ordering worm_compare(Level alpha, const NormalWorm& a, const NormalWorm& b) {
  require_fragment(alpha, a.worm());
  require_fragment(alpha, b.worm());
  return compare_normal(a.worm(), b.worm());
}

Ordering worm_compare(Level alpha, const NWorm& a, const NWorm& b) {
  require_fragment(alpha, a);
  require_fragment(alpha, b);
  return compare_normal(normal_form(a), normal_form(b));
}

NWorm worm_conj(const NWorm& a, const NWorm& b) {
  return conj_normal(normal_form(a), normal_form(b));
}

bool worm_entails(const NWorm& a, const NWorm& b) {
  NWorm na = normal_form(a);
  return na == normal_form(conj_normal(na, normal_form(b)));
}

}  // namespace glp
