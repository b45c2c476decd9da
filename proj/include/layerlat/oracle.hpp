#pragma once

// Brute-force ground truth on finite carriers, independent of the layered
// representation.

#include <cstddef>
#include <optional>
#include <vector>

#include "layerlat/bunch.hpp"
#include "layerlat/report.hpp"
#include "layerlat/table.hpp"

namespace layerlat {

struct AxiomVerdict {
  Report report;
  /// Set when the table is an odd or even involutive FL_e-chain.
  std::optional<BunchType> type;
};

/// Exhaustive check of the chain axioms: shape, commutativity,
/// associativity, unit, monotonicity, residuation, involutivity of
/// x -> f, and the odd/even classification. Never throws.
AxiomVerdict check_flea_axioms(const CayleyTable &t);

inline constexpr std::size_t kDefaultEnumerationBound = 7;

/// Every odd or even involutive FL_e-chain on n elements. Distinct tables
/// on a fixed chain are never isomorphic, so the list has no duplicates.
/// Throws BoundExceeded when n is 0 or above `bound`.
std::vector<CayleyTable> enumerate_finite_chains(std::size_t n,
                                                 std::size_t bound = kDefaultEnumerationBound);

/// Every valid bunch with trivial layer groups whose chain has n elements,
/// over all class assignments of all skeleton sizes.
std::vector<Bunch> finite_bunches(std::size_t n);

/// Tables of the chains of finite_bunches(n).
std::vector<CayleyTable> reconstructed_finite_tables(std::size_t n);

} // namespace layerlat
