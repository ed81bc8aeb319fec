#include "glp/order.hpp"

#include <algorithm>
#include <cctype>

#include "glp/error.hpp"

namespace glp {

std::string_view to_string(Ordering ord) {
  switch (ord) {
    case Ordering::Lt: return "Lt";
    case Ordering::Eq: return "Eq";
    case Ordering::Gt: return "Gt";
  }
  return "?";
}

Ordering flip(Ordering ord) {
  if (ord == Ordering::Lt) return Ordering::Gt;
  if (ord == Ordering::Gt) return Ordering::Lt;
  return Ordering::Eq;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

// Canonical decimal numeral without sign or leading zeros.
std::string canonical_numeral(std::string_view digits, std::string_view whole) {
  if (digits.empty())
    throw Error(ErrorKind::ParseError,
                "expected a numeral, got '" + std::string(whole) + "'");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw Error(ErrorKind::ParseError,
                  "expected a numeral, got '" + std::string(whole) + "'");
  }
  auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return "0";
  return std::string(digits.substr(first));
}

Ordering compare_numerals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return a.size() < b.size() ? Ordering::Lt : Ordering::Gt;
  int c = a.compare(b);
  if (c < 0) return Ordering::Lt;
  if (c > 0) return Ordering::Gt;
  return Ordering::Eq;
}

// Position of the first comma not nested inside parentheses.
std::size_t top_level_comma(std::string_view s) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    else if (s[i] == ')') --depth;
    else if (s[i] == ',' && depth == 0) return i;
  }
  return std::string_view::npos;
}

}  // namespace

Modal OrderProvider::parse(std::string_view token) const {
  return Modal(canonicalize(token), id());
}

std::string OrderProvider::print(const Modal& m) const {
  require_own(m);
  return m.token();
}

void OrderProvider::require_own(const Modal& m) const {
  if (m.provider() != id())
    throw Error(ErrorKind::ProviderMismatch,
                "modal '" + m.token() + "' belongs to order '" + m.provider() +
                    "', not '" + id() + "'");
}

Ordering OrderProvider::compare(const Modal& a, const Modal& b) const {
  require_own(a);
  require_own(b);
  return compare_tokens(a.token(), b.token());
}

// FiniteOrder

std::string FiniteOrder::id() const { return "finite:" + std::to_string(size_); }

std::string FiniteOrder::canonicalize(std::string_view token) const {
  auto t = trim(token);
  std::string c = canonical_numeral(t, token);
  if (compare_numerals(c, std::to_string(size_)) != Ordering::Lt)
    throw Error(ErrorKind::ParseError,
                "token " + c + " outside finite order of size " +
                    std::to_string(size_));
  return c;
}

Ordering FiniteOrder::compare_tokens(std::string_view a,
                                     std::string_view b) const {
  return compare_numerals(a, b);
}

std::optional<std::string> FiniteOrder::least() const {
  if (size_ == 0) return std::nullopt;
  return "0";
}

// Naturals

std::string Naturals::canonicalize(std::string_view token) const {
  return canonical_numeral(trim(token), token);
}

Ordering Naturals::compare_tokens(std::string_view a, std::string_view b) const {
  return compare_numerals(a, b);
}

// Integers

std::string Integers::canonicalize(std::string_view token) const {
  auto t = trim(token);
  bool negative = !t.empty() && t.front() == '-';
  if (negative) t.remove_prefix(1);
  std::string mag = canonical_numeral(t, token);
  if (negative && mag != "0") return "-" + mag;
  return mag;
}

Ordering Integers::compare_tokens(std::string_view a, std::string_view b) const {
  bool na = !a.empty() && a.front() == '-';
  bool nb = !b.empty() && b.front() == '-';
  if (na != nb) return na ? Ordering::Lt : Ordering::Gt;
  if (!na) return compare_numerals(a, b);
  return compare_numerals(b.substr(1), a.substr(1));
}

// LexPair

std::string LexPair::id() const {
  auto wrap = [](const std::string& s) {
    return s.find(',') == std::string::npos ? s : "(" + s + ")";
  };
  return "lexpair:" + wrap(first_->id()) + "," + wrap(second_->id());
}

std::string LexPair::canonicalize(std::string_view token) const {
  auto t = trim(token);
  if (t.size() < 2 || t.front() != '(' || t.back() != ')')
    throw Error(ErrorKind::ParseError,
                "expected a pair '(a,b)', got '" + std::string(token) + "'");
  auto inner = t.substr(1, t.size() - 2);
  auto comma = top_level_comma(inner);
  if (comma == std::string_view::npos)
    throw Error(ErrorKind::ParseError,
                "expected a pair '(a,b)', got '" + std::string(token) + "'");
  return "(" + first_->canonicalize(inner.substr(0, comma)) + "," +
         second_->canonicalize(inner.substr(comma + 1)) + ")";
}

std::pair<std::string_view, std::string_view> LexPair::split(
    std::string_view canonical) const {
  auto inner = canonical.substr(1, canonical.size() - 2);
  auto comma = top_level_comma(inner);
  return {inner.substr(0, comma), inner.substr(comma + 1)};
}

Ordering LexPair::compare_tokens(std::string_view a, std::string_view b) const {
  auto [a1, a2] = split(a);
  auto [b1, b2] = split(b);
  Ordering head = first_->compare_tokens(a1, b1);
  if (head != Ordering::Eq) return head;
  return second_->compare_tokens(a2, b2);
}

std::optional<std::string> LexPair::least() const {
  auto l1 = first_->least();
  auto l2 = second_->least();
  if (!l1 || !l2) return std::nullopt;
  return "(" + *l1 + "," + *l2 + ")";
}

const ProviderPtr& naturals() {
  static const ProviderPtr instance = std::make_shared<Naturals>();
  return instance;
}

ProviderPtr make_provider(std::string_view spec) {
  auto s = trim(spec);
  while (s.size() >= 2 && s.front() == '(' && s.back() == ')')
    s = trim(s.substr(1, s.size() - 2));
  if (s == "omega" || s == "nat") return naturals();
  if (s == "int") return std::make_shared<Integers>();
  if (s.starts_with("finite:")) {
    auto n = canonical_numeral(trim(s.substr(7)), spec);
    if (n.size() > 9)
      throw Error(ErrorKind::ParseError, "finite order too large: " + n);
    return std::make_shared<FiniteOrder>(std::stoul(n));
  }
  if (s.starts_with("lexpair:")) {
    auto rest = s.substr(8);
    auto comma = top_level_comma(rest);
    if (comma == std::string_view::npos)
      throw Error(ErrorKind::ParseError,
                  "lexpair needs two orders: '" + std::string(spec) + "'");
    return std::make_shared<LexPair>(make_provider(rest.substr(0, comma)),
                                     make_provider(rest.substr(comma + 1)));
  }
  throw Error(ErrorKind::ParseError, "unknown order '" + std::string(spec) +
                                         "' (expected finite:N, omega, int "
                                         "or lexpair:<o1>,<o2>)");
}

Ordering compare_modals(const OrderProvider& p, const Modal& a, const Modal& b) {
  return p.compare(a, b);
}

// SignatureMap

std::optional<std::size_t> SignatureMap::find(const Modal& m) const {
  auto it = std::find(elements_.begin(), elements_.end(), m);
  if (it == elements_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::size_t SignatureMap::index_of(const Modal& m) const {
  if (auto i = find(m)) return *i;
  throw Error(ErrorKind::SignatureError,
              "modal '" + m.token() + "' is not in the signature");
}

const Modal& SignatureMap::modal_at(std::size_t index) const {
  if (index >= elements_.size())
    throw Error(ErrorKind::SignatureError,
                "index " + std::to_string(index) + " outside signature of size " +
                    std::to_string(elements_.size()));
  return elements_[index];
}

SignatureMap signature_of(const OrderProvider& p, std::vector<Modal> modals) {
  for (const auto& m : modals) p.require_own(m);
  std::sort(modals.begin(), modals.end(), [&](const Modal& a, const Modal& b) {
    return p.compare_tokens(a.token(), b.token()) == Ordering::Lt;
  });
  modals.erase(std::unique(modals.begin(), modals.end()), modals.end());
  SignatureMap map;
  map.elements_ = std::move(modals);
  return map;
}

}  // namespace glp
