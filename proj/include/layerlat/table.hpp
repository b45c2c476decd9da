#pragma once

// Finite chains given extensionally. The carrier is {0, ..., n-1} in
// ascending order; `product[i][j]` is the index of i*j.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "layerlat/chain.hpp"
#include "layerlat/serialize.hpp"

namespace layerlat {

struct CayleyTable {
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> product;
  std::size_t unit = 0;
  std::size_t falsum = 0;

  std::size_t mul(std::size_t x, std::size_t y) const { return product[x][y]; }

  friend bool operator==(const CayleyTable &, const CayleyTable &) = default;
};

/// Checks shape and index ranges; throws ParseError naming the offender.
void check_shape(const CayleyTable &t);

/// `n,unit,falsum` followed by n rows of n indices.
std::string format_table_csv(const CayleyTable &t);
CayleyTable parse_table_csv(std::string_view text);

/// Greatest v with x*v <= z. Throws NotResiduated when no v qualifies.
std::size_t brute_residuum(const CayleyTable &t, std::size_t x, std::size_t z);

/// A chain rendered as a table, together with the elements it lists.
struct Tabulation {
  CayleyTable table;
  std::vector<ChainElement> elements; // ascending
  bool clipped = false;
};

/// Full table of a finite chain. For an infinite chain `window` must be
/// given: the first `window` enumerated elements are sorted, and products
/// and constants falling outside are clamped down to the greatest listed
/// element below them (or the least listed element when none is below).
/// Throws InfiniteChain for an infinite chain without a window.
Tabulation tabulate(const Chain &c, std::optional<std::size_t> window = std::nullopt);

Json tabulation_to_json(const Chain &c, const Tabulation &t);
/// Graphviz rendering of the order (covering edges) with t and f marked.
std::string tabulation_to_dot(const Chain &c, const Tabulation &t);

} // namespace layerlat
