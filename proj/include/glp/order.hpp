#pragma once

// Linear orders of modalities. The rest of the library only ever asks a
// provider to compare tokens that occur in its input, so orders may be dense,
// infinite, or not well-founded.

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace glp {

enum class Ordering { Lt, Eq, Gt };

std::string_view to_string(Ordering ord);
Ordering flip(Ordering ord);

/// An element of some order, identified by its canonical token and the id of
/// the provider that produced it.
class Modal {
 public:
  Modal(std::string token, std::string provider)
      : token_(std::move(token)), provider_(std::move(provider)) {}

  const std::string& token() const noexcept { return token_; }
  const std::string& provider() const noexcept { return provider_; }

  friend bool operator==(const Modal&, const Modal&) = default;
  // Container ordering only; the order-theoretic comparison lives on the
  // provider.
  friend auto operator<=>(const Modal&, const Modal&) = default;

 private:
  std::string token_;
  std::string provider_;
};

class OrderProvider {
 public:
  virtual ~OrderProvider() = default;

  /// Identifier in CLI syntax, e.g. "omega", "finite:3", "lexpair:omega,int".
  virtual std::string id() const = 0;

  /// Canonical form of a token; throws Error{ParseError} if malformed.
  virtual std::string canonicalize(std::string_view token) const = 0;

  /// Compares two canonical tokens.
  virtual Ordering compare_tokens(std::string_view a,
                                  std::string_view b) const = 0;

  /// Canonical token of the least element, if the order has one.
  virtual std::optional<std::string> least() const = 0;

  Modal parse(std::string_view token) const;
  std::string print(const Modal& m) const;

  /// Throws ProviderMismatch if either modal belongs to another provider.
  Ordering compare(const Modal& a, const Modal& b) const;
  bool less(const Modal& a, const Modal& b) const {
    return compare(a, b) == Ordering::Lt;
  }

  void require_own(const Modal& m) const;
};

using ProviderPtr = std::shared_ptr<const OrderProvider>;

/// {0, ..., n-1} with the usual order.
class FiniteOrder final : public OrderProvider {
 public:
  explicit FiniteOrder(std::size_t size) : size_(size) {}
  std::string id() const override;
  std::string canonicalize(std::string_view token) const override;
  Ordering compare_tokens(std::string_view a,
                          std::string_view b) const override;
  std::optional<std::string> least() const override;
  std::size_t size() const noexcept { return size_; }

 private:
  std::size_t size_;
};

/// The naturals; tokens are decimal numerals of unbounded size.
class Naturals final : public OrderProvider {
 public:
  std::string id() const override { return "omega"; }
  std::string canonicalize(std::string_view token) const override;
  Ordering compare_tokens(std::string_view a,
                          std::string_view b) const override;
  std::optional<std::string> least() const override { return "0"; }
};

/// The integers: a linear order with no least element.
class Integers final : public OrderProvider {
 public:
  std::string id() const override { return "int"; }
  std::string canonicalize(std::string_view token) const override;
  Ordering compare_tokens(std::string_view a,
                          std::string_view b) const override;
  std::optional<std::string> least() const override { return std::nullopt; }
};

/// Lexicographic product; tokens are written "(a,b)".
class LexPair final : public OrderProvider {
 public:
  LexPair(ProviderPtr first, ProviderPtr second)
      : first_(std::move(first)), second_(std::move(second)) {}
  std::string id() const override;
  std::string canonicalize(std::string_view token) const override;
  Ordering compare_tokens(std::string_view a,
                          std::string_view b) const override;
  std::optional<std::string> least() const override;

 private:
  std::pair<std::string_view, std::string_view> split(
      std::string_view canonical) const;

  ProviderPtr first_;
  ProviderPtr second_;
};

/// Shared instance of the naturals; hatted formulas live over it.
const ProviderPtr& naturals();

/// Builds a provider from `finite:N | omega | int | lexpair:<o1>,<o2>`.
/// Nested pairs may be parenthesised: `lexpair:(lexpair:omega,omega),int`.
ProviderPtr make_provider(std::string_view spec);

Ordering compare_modals(const OrderProvider& p, const Modal& a,
                        const Modal& b);

/// A finite set of modals listed in strictly increasing order together with
/// the bijection onto {0, ..., n-1}.
class SignatureMap {
 public:
  SignatureMap() = default;

  const std::vector<Modal>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }

  /// Throws SignatureError if `m` is not listed.
  std::size_t index_of(const Modal& m) const;
  std::optional<std::size_t> find(const Modal& m) const;
  /// Throws SignatureError if out of range.
  const Modal& modal_at(std::size_t index) const;

 private:
  friend SignatureMap signature_of(const OrderProvider&, std::vector<Modal>);
  std::vector<Modal> elements_;
};

SignatureMap signature_of(const OrderProvider& p, std::vector<Modal> modals);

}  // namespace glp
