#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "layerlat/chain.hpp"
#include "layerlat/report.hpp"

namespace layerlat {

struct LawConfig {
  std::size_t triples = 10000;
  /// Enumerated elements seeding the sample pool (negations are added).
  std::size_t pool = 48;
  std::uint64_t seed = 0;
};

/// Sample pool used by the law checks: the first `pool` enumerated elements
/// together with their residual complements, deduplicated.
std::vector<ChainElement> sample_pool(const Chain &c, std::size_t pool);

/// Total order, commutative monoid with unit t, monotonicity, adjointness,
/// involution, closure of the carrier, and the odd/even constant relations.
/// Finite chains small enough for the triple budget are checked exhaustively.
Report check_chain_laws(const Chain &c, const LawConfig &cfg = {});

} // namespace layerlat
