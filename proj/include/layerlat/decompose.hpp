#pragma once

// From a chain back to its bunch of layer groups: exact decomposition of
// finite tables, round-trip verification, and identity checks of the
// decomposition equations on symbolic chains.

#include <cstddef>
#include <vector>

#include "layerlat/chain.hpp"
#include "layerlat/report.hpp"
#include "layerlat/table.hpp"

namespace layerlat {

struct DecompositionResult {
  Bunch bunch;
  /// Element index of the table -> point of the reconstructed chain.
  std::vector<ChainElement> layer_assignment;
};

/// Throws NotInvolutive, NotOddOrEven or AxiomFailure (with the witness)
/// when the table is rejected by check_flea_axioms.
DecompositionResult decompose_table(const CayleyTable &t);

struct RoundTrip {
  DecompositionResult decomposition;
  /// image[i] = index of layer_assignment[i] in the reconstructed table.
  std::vector<std::size_t> image;
  std::size_t cells_compared = 0;
};

/// Decomposes, rebuilds the chain, and checks that layer_assignment is an
/// order and product preserving bijection fixing t and f. Throws
/// RoundTripMismatch naming the first differing cell.
RoundTrip roundtrip_table(const CayleyTable &t);

/// Rechecks the decomposition equations as identities on a symbolic chain:
/// x -> x names the layer, u-invertibility singles out G_u against the
/// dotted copies, multiplication by an idempotent realizes the transitions,
/// and each dotted element is its original times ~u. Samples are the first
/// `samples` enumerated elements; finite chains are covered exhaustively.
Report recover_bunch_samples(const Chain &c, std::size_t samples);

} // namespace layerlat
