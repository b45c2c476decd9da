#include "layerlat/chain.hpp"

#include <algorithm>

#include "layerlat/errors.hpp"

namespace layerlat {

Chain Chain::checked(Bunch b, const ValidationConfig &cfg) {
  const Report r = validate(b, cfg);
  if (!r.ok()) {
    const auto f = r.failures().front();
    throw InvalidBunch(f.clause + ": " + f.detail);
  }
  return Chain(std::move(b));
}

bool Chain::contains(const ChainElement &x) const {
  if (x.layer >= bunch_.size())
    return false;
  if (!bunch_.group(x.layer).contains(x.g))
    return false;
  return !x.dotted || bunch_.in_subgroup(x.layer, x.g);
}

void Chain::require(const ChainElement &x) const {
  if (x.layer >= bunch_.size())
    throw InvalidElement("layer index " + std::to_string(x.layer) + " out of range");
  if (!bunch_.group(x.layer).contains(x.g))
    throw InvalidElement("'" + format_elem(x.g) + "' is not in the group of layer '" +
                         bunch_.layer(x.layer).name + "'");
  if (x.dotted && !bunch_.in_subgroup(x.layer, x.g))
    throw InvalidElement("dotted copies exist only for H-members of I-layers: " + format(x));
}

GElem Chain::zeta(std::size_t v, const ChainElement &x) const {
  return bunch_.apply_transition(x.layer, v, x.g);
}

std::strong_ordering Chain::compare(const ChainElement &x, const ChainElement &y) const {
  if (x == y)
    return std::strong_ordering::equal;
  const std::size_t u = x.layer;
  const std::size_t v = y.layer;
  const std::size_t w = std::max(u, v);
  const auto c = bunch_.group(w).compare(zeta(w, x), zeta(w, y));
  if (c != 0)
    return c;
  // Equal images at the common layer: the clauses deciding x < y.
  const bool lower_layer_then_undotted = u < v && !y.dotted;
  const bool dotted_below_original =
      u == v && bunch_.class_of(u) == LayerClass::I && x.dotted && !y.dotted;
  const bool dotted_from_above = u > v && bunch_.class_of(u) == LayerClass::I && x.dotted;
  if (lower_layer_then_undotted || dotted_below_original || dotted_from_above)
    return std::strong_ordering::less;
  return std::strong_ordering::greater;
}

ChainElement Chain::mul(const ChainElement &x, const ChainElement &y) const {
  const std::size_t u = x.layer;
  const std::size_t v = y.layer;
  const std::size_t w = std::max(u, v);
  GElem p = bunch_.group(w).op(zeta(w, x), zeta(w, y));
  bool dotted = false;
  if (bunch_.class_of(w) == LayerClass::I) {
    if (u != v) {
      dotted = (u > v ? x : y).dotted;
    } else {
      const bool both_undotted_members = !x.dotted && !y.dotted &&
                                         bunch_.in_subgroup(u, x.g) &&
                                         bunch_.in_subgroup(u, y.g);
      dotted = bunch_.in_subgroup(w, p) && !both_undotted_members;
    }
  }
  return {w, std::move(p), dotted};
}

ChainElement Chain::negate(const ChainElement &x) const {
  const std::size_t u = x.layer;
  const OGroup &g = bunch_.group(u);
  GElem inv = g.inverse(x.g);
  switch (bunch_.class_of(u)) {
  case LayerClass::I:
    if (!x.dotted && bunch_.in_subgroup(u, x.g))
      return {u, std::move(inv), true};
    break;
  case LayerClass::J: {
    auto below = g.cover_down(inv);
    if (!below)
      throw CoverMissing("group of J-layer '" + bunch_.layer(u).name +
                         "' has no lower cover at " + format_elem(inv));
    return {u, std::move(*below), false};
  }
  case LayerClass::O:
    break;
  }
  return {u, std::move(inv), false};
}

ChainElement Chain::residuum(const ChainElement &x, const ChainElement &y) const {
  return negate(mul(x, negate(y)));
}

ChainElement Chain::unit() const { return {0, bunch_.group(0).unit(), false}; }

ChainElement Chain::falsum() const { return negate(unit()); }

bool Chain::is_trivial() const {
  const auto n = size();
  return n && *n == 1;
}

std::optional<std::size_t> Chain::size() const {
  std::size_t total = 0;
  for (std::size_t i = 0; i < bunch_.size(); ++i) {
    if (!bunch_.group(i).is_trivial())
      return std::nullopt;
    total += bunch_.class_of(i) == LayerClass::I ? 2 : 1;
  }
  return total;
}

std::optional<Bounds> Chain::bounds() const {
  if (is_trivial())
    return Bounds{unit(), unit()};
  const std::size_t top = bunch_.size() - 1;
  if (bunch_.class_of(top) != LayerClass::I || !bunch_.group(top).is_trivial())
    return std::nullopt;
  const GElem e = bunch_.group(top).unit();
  return Bounds{{top, e, false}, {top, e, true}};
}

ElementStream Chain::elements() const { return ElementStream(*this); }

std::vector<ChainElement> Chain::first_elements(std::size_t count) const {
  std::vector<ChainElement> out;
  ElementStream s(*this);
  while (out.size() < count) {
    auto x = s.next();
    if (!x)
      break;
    out.push_back(std::move(*x));
  }
  return out;
}

std::vector<ChainElement> Chain::sorted_elements() const {
  const auto n = size();
  if (!n)
    throw InfiniteChain("the chain has infinitely many elements");
  auto all = first_elements(*n);
  std::sort(all.begin(), all.end(),
            [this](const ChainElement &a, const ChainElement &b) { return less(a, b); });
  return all;
}

std::string Chain::format(const ChainElement &x) const {
  return bunch_.layer(x.layer).name + (x.dotted ? ":d:" : ":") + format_elem(x.g);
}

ChainElement Chain::parse(std::string_view text) const {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw ParseError("element", "expected 'layer:g' or 'layer:d:g', got '" +
                                    std::string(text) + "'");
  const auto name = text.substr(0, colon);
  auto rest = text.substr(colon + 1);
  const auto layer = bunch_.find(name);
  if (!layer)
    throw ParseError("element", "unknown layer '" + std::string(name) + "'");
  bool dotted = false;
  if (rest.starts_with("d:")) {
    dotted = true;
    rest.remove_prefix(2);
  }
  ChainElement x{*layer, bunch_.group(*layer).parse_elem(rest), dotted};
  if (!contains(x))
    throw ParseError("element", "'" + std::string(text) + "' is not an element of the chain");
  return x;
}

ElementStream::ElementStream(const Chain &c) : chain_(&c) {}

std::optional<ChainElement> ElementStream::next() {
  if (pending_dot_) {
    auto out = std::move(pending_dot_);
    pending_dot_.reset();
    return out;
  }
  const Bunch &b = chain_->bunch();
  for (;;) {
    if (layer_ == b.size()) {
      layer_ = 0;
      ++round_;
    }
    if (layer_ == 0) {
      bool any = false;
      for (std::size_t i = 0; i < b.size() && !any; ++i) {
        const auto n = b.group(i).size();
        any = !n || round_ < *n;
      }
      if (!any)
        return std::nullopt;
    }
    const std::size_t i = layer_++;
    const OGroup &g = b.group(i);
    if (const auto n = g.size(); n && round_ >= *n)
      continue;
    ChainElement x{i, g.nth(round_), false};
    if (b.in_subgroup(i, x.g))
      pending_dot_ = ChainElement{i, x.g, true};
    return x;
  }
}

} // namespace layerlat
