#pragma once

// Bunches of layer groups: a finite totally ordered skeleton of layers with
// least layer t, a partition of the skeleton into the classes O, J and I, an
// abelian o-group per layer, a subgroup per I-layer, and transitions stored on
// covering pairs of the skeleton. Transitions between arbitrary layers are
// composed on demand.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "layerlat/ogroup.hpp"
#include "layerlat/report.hpp"

namespace layerlat {

enum class LayerClass { O, J, I };

enum class BunchType { Odd, EvenNonIdemF, EvenIdemF };

std::string_view to_string(LayerClass c);
std::string_view to_string(BunchType t);
LayerClass parse_layer_class(std::string_view s);

struct Layer {
  std::string name;
  LayerClass cls = LayerClass::I;
  OGroup group;
  std::optional<Subgroup> subgroup; // present exactly for I-layers

  friend bool operator==(const Layer &, const Layer &) = default;
};

class Bunch {
public:
  /// `steps[i]` maps layer i to layer i+1. Throws StructureError when the
  /// pieces do not fit together (sizes, hom typing, subgroup placement,
  /// duplicate names); semantic clauses are left to validate().
  Bunch(std::vector<Layer> layers, std::vector<Hom> steps);

  std::size_t size() const noexcept { return layers_.size(); }
  const Layer &layer(std::size_t i) const { return layers_.at(i); }
  const std::vector<Layer> &layers() const noexcept { return layers_; }
  const std::vector<Hom> &steps() const noexcept { return steps_; }
  const Hom &step(std::size_t i) const { return steps_.at(i); }

  /// Throws UnknownLayer.
  std::size_t index_of(std::string_view name) const;
  std::optional<std::size_t> find(std::string_view name) const;

  LayerClass class_of(std::size_t i) const { return layers_.at(i).cls; }
  const OGroup &group(std::size_t i) const { return layers_.at(i).group; }
  /// Membership in H_u; false for non-I layers.
  bool in_subgroup(std::size_t i, const GElem &g) const;

  /// Identity when u == v, else the composition of the consecutive steps.
  /// Throws LayerOrderError when u > v.
  Hom transition(std::size_t u, std::size_t v) const;
  /// Same map as transition(u, v), applied step by step.
  GElem apply_transition(std::size_t u, std::size_t v, const GElem &x) const;

  BunchType type() const;

  friend bool operator==(const Bunch &, const Bunch &) = default;

private:
  std::vector<Layer> layers_;
  std::vector<Hom> steps_;
};

struct ValidationConfig {
  /// Enumerated elements per layer used by the sampled clauses.
  std::size_t samples_per_layer = 100;
  /// Pairs fed to hom_check for each step.
  std::size_t hom_samples = 200;
  /// Above this many layers, (D2) is rechecked on consecutive triples only.
  std::size_t full_triple_limit = 12;
};

/// Checks (G1), (G2), (G3), (D1), (D2) and that every step is an
/// order-preserving homomorphism. Never throws on a semantic violation.
Report validate(const Bunch &b, const ValidationConfig &cfg = {});

/// Equality of bunches up to renaming of layers.
bool same_up_to_labels(const Bunch &a, const Bunch &b);

/// True when no layer is in J.
bool is_idempotent_symmetric(const Bunch &b);

} // namespace layerlat
