#pragma once

// Rational placements of bounded chains in [0,1] and the sup-extended
// product approximated on them.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "layerlat/chain.hpp"

namespace layerlat {

struct Placed {
  ChainElement x;
  Rational q;
};

/// Strictly increasing in both the chain order and q.
class RationalPlacement {
public:
  const std::vector<Placed> &pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }

  std::optional<Rational> find(const Chain &c, const ChainElement &x) const;
  /// q of the greatest placed element <= x; 0 when none is.
  Rational floor(const Chain &c, const ChainElement &x) const;
  /// Places x at the midpoint of its placed neighbours. Returns false when
  /// x was already placed or has no placed neighbour on one side.
  bool place_midpoint(const Chain &c, const ChainElement &x);
  void pin(const ChainElement &x, Rational q);

private:
  std::vector<Placed> pairs_;
};

/// bottom |-> 0, top |-> 1, then the enumeration in order, each element at
/// the midpoint of its current neighbours, until `prefix` elements are
/// placed (or the chain runs out). Throws Unbounded when the chain has no
/// top and bottom, InvalidElement when it is trivial.
RationalPlacement cantor_map(const Chain &c, std::size_t prefix);

/// The placement grown by up to `depth` products x*y of initially placed
/// elements, taken in a fixed order.
RationalPlacement extend_products(const Chain &c, const RationalPlacement &p, std::size_t depth);

/// max over placed x, y with q(x) < a and q(y) < b of floor(x*y), after
/// extend_products(depth); 0 when no such pair exists. Nondecreasing in a,
/// b and depth.
Rational sup_extend(const Chain &c, const RationalPlacement &p, const Rational &a,
                    const Rational &b, std::size_t depth);

/// One `element,numerator,denominator` line per placed element.
std::string placement_csv(const Chain &c, const RationalPlacement &p);

} // namespace layerlat
