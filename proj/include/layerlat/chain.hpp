#pragma once

// The involutive FL_e-chain of a bunch of layer groups. The carrier is the
// disjoint union of the layers L_u, where L_u = G_u for u outside I and
// L_u = G_u plus a dotted copy of H_u for u in I. A dotted copy sits just
// below its original in the order.

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "layerlat/bunch.hpp"

namespace layerlat {

struct ChainElement {
  std::size_t layer = 0;
  GElem g;
  bool dotted = false;

  friend bool operator==(const ChainElement &, const ChainElement &) = default;
};

struct Bounds {
  ChainElement top;
  ChainElement bottom;
};

class ElementStream;

class Chain {
public:
  /// Takes the bunch as is; use checked() to validate first.
  explicit Chain(Bunch b) : bunch_(std::move(b)) {}
  /// Validates the bunch, throwing InvalidBunch with the first violation.
  static Chain checked(Bunch b, const ValidationConfig &cfg = {});

  const Bunch &bunch() const noexcept { return bunch_; }

  /// Throws InvalidElement unless x is a point of the carrier.
  void require(const ChainElement &x) const;
  bool contains(const ChainElement &x) const;

  /// zeta_{u->v}: the transition applied to the group part, dropping the dot.
  GElem zeta(std::size_t v, const ChainElement &x) const;

  std::strong_ordering compare(const ChainElement &x, const ChainElement &y) const;
  bool less(const ChainElement &x, const ChainElement &y) const { return compare(x, y) < 0; }

  ChainElement mul(const ChainElement &x, const ChainElement &y) const;
  ChainElement negate(const ChainElement &x) const;
  ChainElement residuum(const ChainElement &x, const ChainElement &y) const;

  ChainElement unit() const;
  ChainElement falsum() const;

  /// Top and bottom when the chain is bounded: either the one-element chain,
  /// or the greatest layer is in I with a trivial group.
  std::optional<Bounds> bounds() const;
  bool is_bounded() const { return bounds().has_value(); }
  bool is_trivial() const;
  /// Number of elements; nullopt when infinite.
  std::optional<std::size_t> size() const;

  ElementStream elements() const;
  /// The first `count` elements of the enumeration (fewer if finite).
  std::vector<ChainElement> first_elements(std::size_t count) const;
  /// All elements in ascending order; throws InfiniteChain when infinite.
  std::vector<ChainElement> sorted_elements() const;

  /// `layer:g` or `layer:d:g`.
  std::string format(const ChainElement &x) const;
  ChainElement parse(std::string_view text) const;

private:
  Bunch bunch_;
};

/// Layer-wise dovetailing: round k emits the k-th group element of every
/// layer that has one, each followed by its dotted copy when it lies in H_u.
class ElementStream {
public:
  explicit ElementStream(const Chain &c);
  std::optional<ChainElement> next();

private:
  const Chain *chain_;
  std::size_t round_ = 0;
  std::size_t layer_ = 0;
  std::optional<ChainElement> pending_dot_;
};

} // namespace layerlat
