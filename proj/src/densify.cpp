#include "layerlat/densify.hpp"

#include <algorithm>
#include <numeric>

#include "layerlat/errors.hpp"

namespace layerlat {

namespace {

InsertionReceipt finish(const Bunch &old, Bunch nb, std::size_t at, Hom phi) {
  InsertionReceipt r{std::move(nb), {}, at, {}, std::move(phi)};
  r.new_layer = r.new_bunch.layer(at).name;
  std::vector<std::size_t> index(old.size());
  for (std::size_t i = 0; i < old.size(); ++i)
    index[i] = r.remap(i);
  r.iota = identity_embedding(old, r.new_bunch, index);
  return r;
}

Layer copy_layer(const Layer &v, std::string name) {
  return Layer{std::move(name), LayerClass::I, v.group, Subgroup::whole(v.group)};
}

} // namespace

std::string fresh_label(const Bunch &b, const std::string &base, char sign) {
  for (std::size_t k = 1;; ++k) {
    std::string name = base + sign + std::to_string(k);
    if (!b.find(name))
      return name;
  }
}

InsertionReceipt insert_above(const Bunch &b, std::size_t v) {
  if (v >= b.size())
    throw UnknownLayer("layer index " + std::to_string(v) + " out of range");
  if (b.class_of(v) == LayerClass::J)
    throw LayerClassError("cannot insert above '" + b.layer(v).name + "', which is in J");
  std::vector<Layer> layers = b.layers();
  std::vector<Hom> steps = b.steps();
  layers.insert(layers.begin() + static_cast<std::ptrdiff_t>(v) + 1,
                copy_layer(b.layer(v), fresh_label(b, b.layer(v).name, '+')));
  steps.insert(steps.begin() + static_cast<std::ptrdiff_t>(v), Hom::identity(b.group(v)));
  return finish(b, Bunch(std::move(layers), std::move(steps)), v + 1, Hom::identity(b.group(v)));
}

InsertionReceipt insert_below(const Bunch &b, std::size_t v) {
  if (v >= b.size())
    throw UnknownLayer("layer index " + std::to_string(v) + " out of range");
  if (v == 0)
    throw LeastLayerError("cannot insert below the least layer '" + b.layer(0).name + "'");
  std::vector<Layer> layers = b.layers();
  std::vector<Hom> steps = b.steps();
  const Layer &lv = b.layer(v);
  const std::string name = fresh_label(b, lv.name, '-');
  const auto at = static_cast<std::ptrdiff_t>(v);
  if (lv.cls != LayerClass::I || lv.subgroup->kind() == Subgroup::Kind::Whole) {
    layers.insert(layers.begin() + at, copy_layer(lv, name));
    // prev -> v becomes prev -> v-K, followed by the identity into v.
    steps.insert(steps.begin() + at, Hom::identity(lv.group));
    return finish(b, Bunch(std::move(layers), std::move(steps)), v, Hom::identity(lv.group));
  }
  const Subgroup &h = *lv.subgroup;
  const OGroup g = h.carrier();
  layers.insert(layers.begin() + at, Layer{name, LayerClass::I, g, Subgroup::whole(g)});
  steps[v - 1] = Hom::compose(Hom::restrict(h), steps[v - 1]);
  steps.insert(steps.begin() + at, Hom::include(h));
  return finish(b, Bunch(std::move(layers), std::move(steps)), v, Hom::restrict(h));
}

GapFillResult fill_gap(const Chain &c, const ChainElement &x, const ChainElement &y) {
  const Bunch &b = c.bunch();
  if (b.type() != BunchType::Odd)
    throw EvenTypeUnsupported("gaps of even chains cannot be filled (f < t is a gap)");
  c.require(x);
  c.require(y);
  if (!c.less(x, y))
    throw NotLess(c.format(x) + " is not below " + c.format(y));
  const std::size_t u = x.layer;
  const std::size_t v = y.layer;
  const std::size_t w = std::max(u, v);
  const GElem a = c.zeta(w, x);
  const GElem bb = c.zeta(w, y);

  auto done = [](std::string tag, InsertionReceipt r, ChainElement wit) {
    return GapFillResult{std::move(tag), std::move(r), std::move(wit)};
  };

  if (!(a == bb)) {
    if (u == 0 && v == 0) {
      auto r = insert_above(b, 0);
      auto wit = r.witness(x.g);
      return done("1a", std::move(r), std::move(wit));
    }
    if (v > 0 && !y.dotted) {
      auto r = insert_below(b, v);
      if (r.phi.kind() != Hom::Kind::Restrict || r.phi.subgroup().contains(y.g)) {
        auto wit = r.witness(y.g);
        return done("1b", std::move(r), std::move(wit));
      }
      // y.g lies outside H_v, so it has no copy below v. Use a copy of x
      // instead: its image at v is in H_v whenever u < v or x is dotted.
      if (u < v || (u == v && x.dotted)) {
        auto wit = r.witness(c.zeta(v, x));
        return done("1e", std::move(r), std::move(wit));
      }
      if (!x.dotted && b.class_of(u) != LayerClass::J) {
        auto above = insert_above(b, u);
        auto wit = above.witness(x.g);
        return done("1e", std::move(above), std::move(wit));
      }
      auto below = insert_below(b, u);
      if (x.dotted) {
        auto wit = below.witness(x.g, true);
        return done("1e", std::move(below), std::move(wit));
      }
      // x undotted on a J-layer above v: the dotted copy of its cover sits
      // above x and, being dotted, below anything on lower layers mapping
      // to that cover.
      auto wit = below.witness(*b.group(u).cover_up(x.g), true);
      return done("1e", std::move(below), std::move(wit));
    }
    if (v > 0) {
      auto r = insert_above(b, v);
      auto wit = r.witness(y.g, true);
      return done("1c", std::move(r), std::move(wit));
    }
    // y on the least layer, x strictly higher: a dotted copy of y's image
    // right below u sits above x and, being dotted, below y.
    auto r = insert_below(b, u);
    auto wit = r.witness(bb, true);
    return done("1d", std::move(r), std::move(wit));
  }
  if (u < v) {
    auto r = insert_below(b, v);
    auto wit = r.witness(y.g);
    return done("2a", std::move(r), std::move(wit));
  }
  if (u == v) {
    auto r = insert_below(b, v);
    auto wit = r.witness(y.g);
    return done("2b", std::move(r), std::move(wit));
  }
  auto r = insert_below(b, u);
  auto wit = r.witness(a, true);
  return done("2c", std::move(r), std::move(wit));
}

namespace {

class Densifier {
public:
  Densifier(const Chain &c, std::vector<ChainElement> m)
      : cur_(c), m_(std::move(m)), n0_(m_.size()) {
    if (c.bunch().type() != BunchType::Odd)
      throw EvenTypeUnsupported("only odd chains can be densified");
  }

  std::vector<std::size_t> sorted_ids() const {
    std::vector<std::size_t> ids(m_.size());
    std::iota(ids.begin(), ids.end(), 0);
    std::sort(ids.begin(), ids.end(),
              [&](std::size_t i, std::size_t j) { return cur_.less(m_[i], m_[j]); });
    return ids;
  }

  void separate(std::size_t i, std::size_t j) {
    const ChainElement x = m_[i];
    const ChainElement y = m_[j];
    const bool separated = std::any_of(m_.begin(), m_.end(), [&](const ChainElement &z) {
      return cur_.less(x, z) && cur_.less(z, y);
    });
    if (separated)
      return;
    GapFillResult g = fill_gap(cur_, x, y);
    for (auto &z : m_)
      z = g.receipt.carry(z);
    Chain next(g.receipt.new_bunch);
    trace_.push_back(TraceRecord{g.case_tag, g.receipt.new_layer,
                                 next.bunch().class_of(g.receipt.new_index), cur_.format(x),
                                 cur_.format(y), next.format(g.witness)});
    m_.push_back(g.witness);
    cur_ = std::move(next);
  }

  DensifyResult result() {
    DensifyResult out{cur_.bunch(), std::move(trace_), {}, {}};
    const auto ids = sorted_ids();
    std::vector<std::size_t> pos(m_.size());
    for (std::size_t k = 0; k < ids.size(); ++k) {
      out.elements.push_back(m_[ids[k]]);
      pos[ids[k]] = k;
    }
    for (std::size_t i = 0; i < n0_; ++i)
      out.original.push_back(pos[i]);
    return out;
  }

private:
  Chain cur_;
  std::vector<ChainElement> m_;
  std::size_t n0_;
  std::vector<TraceRecord> trace_;
};

} // namespace

DensifyResult separate_pairs(const Chain &c, std::vector<ChainElement> elements,
                             const std::vector<std::pair<std::size_t, std::size_t>> &pairs) {
  Densifier d(c, std::move(elements));
  for (const auto &[i, j] : pairs)
    d.separate(i, j);
  return d.result();
}

DensifyResult densify_driver(const Chain &c, std::size_t prefix, std::size_t rounds) {
  Densifier d(c, c.first_elements(prefix));
  for (std::size_t round = 0; round < rounds; ++round) {
    const auto ids = d.sorted_ids();
    for (std::size_t p = 0; p < ids.size(); ++p)
      for (std::size_t q = p + 1; q < ids.size(); ++q)
        d.separate(ids[p], ids[q]);
  }
  DensifyResult out = d.result();
  std::sort(out.original.begin(), out.original.end());
  return out;
}

bool preserves_idempotent_symmetry(const std::vector<TraceRecord> &trace) {
  return std::all_of(trace.begin(), trace.end(),
                     [](const TraceRecord &r) { return r.inserted_class == LayerClass::I; });
}

bool preserves_idempotent_symmetry(const Bunch &source, const std::vector<TraceRecord> &trace) {
  return is_idempotent_symmetric(source) && preserves_idempotent_symmetry(trace);
}

Json trace_to_json(const std::vector<TraceRecord> &trace) {
  Json out = Json::array();
  for (const auto &r : trace)
    out.push_back({{"case_tag", r.case_tag},
                   {"inserted_layer", r.inserted_layer},
                   {"inserted_class", std::string(to_string(r.inserted_class))},
                   {"x", r.x},
                   {"y", r.y},
                   {"witness", r.witness}});
  return out;
}

} // namespace layerlat
