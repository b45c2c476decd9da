#pragma once

// Embeddings between chains, checked through the layer groups.

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "layerlat/chain.hpp"
#include "layerlat/report.hpp"
#include "layerlat/serialize.hpp"

namespace layerlat {

struct EmbeddingSpec {
  std::map<std::string, std::string> skeleton_map;
  std::map<std::string, Hom> layer_maps;
};

/// The coordinatewise identity from `src` into `dst`, where `layer_index`
/// maps each source layer index to its index in dst.
EmbeddingSpec identity_embedding(const Bunch &src, const Bunch &dst,
                                 const std::vector<std::size_t> &layer_index);

/// Throws TypeMismatch unless every source layer has a target layer and a
/// hom from G_u to the group of its image.
void check_typing(const Bunch &src, const Bunch &dst, const EmbeddingSpec &e);

/// (u, g, dotted) |-> (skeleton_map(u), layer_maps[u](g), dotted).
ChainElement map_element(const Bunch &src, const Bunch &dst, const EmbeddingSpec &e,
                         const ChainElement &x);

/// Clauses E1 (skeleton order embedding fixing t and the classes), layer
/// maps (injective o-homomorphisms), E2a (transitions commute), E2b (H and
/// its complement are preserved), E2c (the lower cover of the unit is kept
/// on J-layers), and a direct check that the element map preserves order,
/// product and complement. Throws TypeMismatch on ill-typed layer maps.
Report check_embedding(const Chain &src, const Chain &dst, const EmbeddingSpec &e,
                       std::size_t samples = 200);

/// {"skeleton_map":{"t":"t",...}, "layer_maps":{"t":"id",...}}
Json embedding_to_json(const EmbeddingSpec &e);
EmbeddingSpec embedding_from_json(const Json &j, const Bunch &src, const Bunch &dst);
EmbeddingSpec parse_embedding(std::string_view text, const Bunch &src, const Bunch &dst);

} // namespace layerlat
