#pragma once

// Skeleton insertions and gap filling for odd chains.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "layerlat/chain.hpp"
#include "layerlat/embed.hpp"

namespace layerlat {

struct InsertionReceipt {
  Bunch new_bunch;
  std::string new_layer;
  std::size_t new_index = 0;
  /// Coordinatewise identity from the old bunch into new_bunch.
  EmbeddingSpec iota;
  /// G_v -> new layer group: the identity, or the retraction onto H_v when
  /// only the subgroup was copied.
  Hom phi = Hom::identity(OGroup::trivial());

  /// Old layer index -> index in new_bunch.
  std::size_t remap(std::size_t old_index) const {
    return old_index < new_index ? old_index : old_index + 1;
  }
  /// The image of an old chain element.
  ChainElement carry(const ChainElement &x) const {
    return {remap(x.layer), x.g, x.dotted};
  }
  /// The copy of g in the new layer. Throws InvalidElement when g was not
  /// copied.
  ChainElement witness(const GElem &g, bool dotted = false) const {
    return {new_index, phi.apply(g), dotted};
  }
};

/// New layer v+K right above v: a copy of G_v in I with H = G_v, reached
/// from v by the identity. The witness of y is the upper cover of (v, y).
/// Throws LayerClassError when v is in J.
InsertionReceipt insert_above(const Bunch &b, std::size_t v);

/// New layer v-K right below v, mapping into v by the identity. When v is
/// in I with H_v a proper subgroup, only H_v is copied and mapped in by
/// inclusion, since transitions into v must land in H_v. The witness of y
/// is the lower cover of (v, y). Throws LeastLayerError at t.
InsertionReceipt insert_below(const Bunch &b, std::size_t v);

/// Smallest positive K with `base+K` (or `base-K`) unused in b.
std::string fresh_label(const Bunch &b, const std::string &base, char sign);

struct GapFillResult {
  std::string case_tag; // 1a 1b 1c 1d 1e 2a 2b 2c
  InsertionReceipt receipt;
  ChainElement witness;
};

/// Extends an odd chain so that some new element lies strictly between x
/// and y. Throws EvenTypeUnsupported for even chains and NotLess unless
/// x < y.
GapFillResult fill_gap(const Chain &c, const ChainElement &x, const ChainElement &y);

struct TraceRecord {
  std::string case_tag;
  std::string inserted_layer;
  LayerClass inserted_class = LayerClass::I;
  std::string x;
  std::string y;
  std::string witness;
};

struct DensifyResult {
  Bunch bunch;
  std::vector<TraceRecord> trace;
  /// The materialized elements at the end, ascending, in the final chain.
  std::vector<ChainElement> elements;
  /// Positions in `elements` of the original prefix.
  std::vector<std::size_t> original;
};

/// Takes the first `prefix` elements and, for `rounds` passes, fills every
/// pair (taken as it stood at the start of the pass) that has no
/// materialized element strictly between. Throws EvenTypeUnsupported.
DensifyResult densify_driver(const Chain &c, std::size_t prefix, std::size_t rounds);

/// One pass over `pairs` (indices into `elements`, each pair ascending):
/// fills every pair with no element of `elements` strictly between,
/// adding the witnesses. `original` gives the positions of the input
/// elements. Throws EvenTypeUnsupported.
DensifyResult separate_pairs(const Chain &c, std::vector<ChainElement> elements,
                             const std::vector<std::pair<std::size_t, std::size_t>> &pairs);

/// Every inserted layer went to I.
bool preserves_idempotent_symmetry(const std::vector<TraceRecord> &trace);
/// The source has no J-layer and every inserted layer went to I.
bool preserves_idempotent_symmetry(const Bunch &source, const std::vector<TraceRecord> &trace);

Json trace_to_json(const std::vector<TraceRecord> &trace);

} // namespace layerlat
