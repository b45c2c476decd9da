#include "layerlat/bunch.hpp"

#include <algorithm>
#include <set>

#include "layerlat/errors.hpp"

namespace layerlat {

std::string_view to_string(LayerClass c) {
  switch (c) {
  case LayerClass::O:
    return "O";
  case LayerClass::J:
    return "J";
  case LayerClass::I:
    return "I";
  }
  return "?";
}

std::string_view to_string(BunchType t) {
  switch (t) {
  case BunchType::Odd:
    return "Odd";
  case BunchType::EvenNonIdemF:
    return "EvenNonIdemF";
  case BunchType::EvenIdemF:
    return "EvenIdemF";
  }
  return "?";
}

LayerClass parse_layer_class(std::string_view s) {
  if (s == "O" || s == "o")
    return LayerClass::O;
  if (s == "J" || s == "j")
    return LayerClass::J;
  if (s == "I" || s == "i")
    return LayerClass::I;
  throw ParseError("partition", "unknown layer class '" + std::string(s) + "'");
}

Bunch::Bunch(std::vector<Layer> layers, std::vector<Hom> steps)
    : layers_(std::move(layers)), steps_(std::move(steps)) {
  if (layers_.empty())
    throw StructureError("the skeleton must not be empty");
  if (steps_.size() + 1 != layers_.size())
    throw StructureError("expected " + std::to_string(layers_.size() - 1) +
                         " steps, got " + std::to_string(steps_.size()));
  std::set<std::string> names;
  for (const auto &l : layers_) {
    if (l.name.empty() || l.name.find(':') != std::string::npos)
      throw StructureError("invalid layer name '" + l.name + "'");
    if (!names.insert(l.name).second)
      throw StructureError("duplicate layer name '" + l.name + "'");
    if (l.cls == LayerClass::I && !l.subgroup)
      throw StructureError("I-layer '" + l.name + "' has no subgroup");
    if (l.cls != LayerClass::I && l.subgroup)
      throw StructureError("subgroup given for non-I layer '" + l.name + "'");
    if (l.subgroup && !(l.subgroup->ambient() == l.group))
      throw StructureError("subgroup of '" + l.name + "' lives in " +
                           l.subgroup->ambient().describe() + ", layer group is " +
                           l.group.describe());
  }
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (!(steps_[i].source() == layers_[i].group) ||
        !(steps_[i].target() == layers_[i + 1].group))
      throw StructureError("step " + layers_[i].name + "->" + layers_[i + 1].name +
                           " has type " + steps_[i].source().describe() + " -> " +
                           steps_[i].target().describe());
  }
}

std::optional<std::size_t> Bunch::find(std::string_view name) const {
  for (std::size_t i = 0; i < layers_.size(); ++i)
    if (layers_[i].name == name)
      return i;
  return std::nullopt;
}

std::size_t Bunch::index_of(std::string_view name) const {
  if (auto i = find(name))
    return *i;
  throw UnknownLayer("'" + std::string(name) + "'");
}

bool Bunch::in_subgroup(std::size_t i, const GElem &g) const {
  const Layer &l = layers_.at(i);
  return l.subgroup && l.subgroup->contains(g);
}

Hom Bunch::transition(std::size_t u, std::size_t v) const {
  if (u >= size() || v >= size())
    throw UnknownLayer("index out of range");
  if (u > v)
    throw LayerOrderError(layers_[u].name + " is above " + layers_[v].name);
  Hom h = Hom::identity(layers_[u].group);
  for (std::size_t i = u; i < v; ++i)
    h = i == u ? steps_[i] : Hom::compose(steps_[i], h);
  return h;
}

GElem Bunch::apply_transition(std::size_t u, std::size_t v, const GElem &x) const {
  if (u >= size() || v >= size())
    throw UnknownLayer("index out of range");
  if (u > v)
    throw LayerOrderError(layers_[u].name + " is above " + layers_[v].name);
  GElem y = x;
  for (std::size_t i = u; i < v; ++i)
    y = steps_[i].apply(y);
  return y;
}

BunchType Bunch::type() const {
  switch (layers_.front().cls) {
  case LayerClass::O:
    return BunchType::Odd;
  case LayerClass::J:
    return BunchType::EvenNonIdemF;
  case LayerClass::I:
    return BunchType::EvenIdemF;
  }
  return BunchType::Odd;
}

namespace {

std::vector<GElem> layer_samples(const OGroup &g, std::size_t count) {
  std::vector<GElem> out;
  GroupStream s(g);
  while (out.size() < count) {
    auto x = s.next();
    if (!x)
      break;
    out.push_back(std::move(*x));
  }
  return out;
}

Method method_for(const OGroup &g) { return g.size() ? Method::Proved : Method::Tested; }

} // namespace

Report validate(const Bunch &b, const ValidationConfig &cfg) {
  Report report;
  const std::size_t n = b.size();

  std::vector<std::vector<GElem>> samples(n);
  for (std::size_t i = 0; i < n; ++i)
    samples[i] = layer_samples(b.group(i), cfg.samples_per_layer);

  {
    auto &c = report.clause("G1 (kappa_o within {t})");
    for (std::size_t i = 1; i < n; ++i) {
      ++c.checked;
      if (b.class_of(i) == LayerClass::O && c.passed) {
        c.passed = false;
        c.detail = "layer '" + b.layer(i).name + "' is in kappa_o but is not t";
      }
    }
  }

  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Hom &h = b.step(i);
    const auto outcome = hom_check(h, cfg.hom_samples);
    report.add({"step " + b.layer(i).name + "->" + b.layer(i + 1).name +
                    " is an o-homomorphism",
                outcome.ok, method_for(h.source()), outcome.checked, outcome.failure});
  }

  report.add({"D1 (identity transitions)", true, Method::Proved, n,
              "transition(u,u) is the identity hom by construction"});

  {
    Method m = Method::Proved;
    for (std::size_t i = 0; i < n; ++i)
      if (!b.group(i).size())
        m = Method::Tested;
    ClauseResult c{"D2 (transitions compose)", true, m, 0, {}};
    const bool all_triples = n <= cfg.full_triple_limit;
    for (std::size_t u = 0; u < n && c.passed; ++u) {
      for (std::size_t v = u; v < n && c.passed; ++v) {
        if (!all_triples && v > u + 1)
          break;
        for (std::size_t w = v; w < n && c.passed; ++w) {
          if (!all_triples && w > v + 1)
            break;
          const Hom direct = b.transition(u, w);
          for (const auto &x : samples[u]) {
            ++c.checked;
            const GElem composed =
                b.apply_transition(v, w, b.apply_transition(u, v, x));
            if (!(b.group(w).compare(direct.apply(x), composed) == 0)) {
              c.passed = false;
              c.detail = "at " + b.layer(u).name + "->" + b.layer(v).name + "->" +
                         b.layer(w).name + ", element " + format_elem(x);
              break;
            }
          }
        }
      }
    }
    if (!all_triples && c.passed)
      c.detail = "consecutive triples only";
    report.add(std::move(c));
  }

  {
    ClauseResult c{"G3 (transitions into I-layers land in H)", true, Method::Proved, 0, {}};
    for (std::size_t v = 0; v < n && c.passed; ++v) {
      if (b.class_of(v) != LayerClass::I)
        continue;
      const bool whole = b.layer(v).subgroup->kind() == Subgroup::Kind::Whole;
      for (std::size_t u = 0; u < v && c.passed; ++u) {
        const Hom h = b.transition(u, v);
        ++c.checked;
        if (whole || h.is_constant())
          continue;
        if (!b.group(u).size())
          c.method = Method::Tested;
        for (const auto &x : samples[u]) {
          ++c.checked;
          const GElem y = b.apply_transition(u, v, x);
          if (!b.in_subgroup(v, y)) {
            c.passed = false;
            c.detail = b.layer(u).name + "->" + b.layer(v).name + " maps " +
                       format_elem(x) + " to " + format_elem(y) + " outside " +
                       b.layer(v).subgroup->describe();
            break;
          }
        }
      }
    }
    report.add(std::move(c));
  }

  {
    ClauseResult c{"G2 (J-layers discrete, transitions glue unit and its cover)", true,
                   Method::Proved, 0, {}};
    for (std::size_t u = 0; u < n && c.passed; ++u) {
      if (b.class_of(u) != LayerClass::J)
        continue;
      const OGroup &g = b.group(u);
      ++c.checked;
      if (g.is_trivial() || !g.is_discrete()) {
        c.passed = false;
        c.detail = "G_u is discrete and nontrivial fails for layer '" + b.layer(u).name +
                   "' (" + g.describe() + ")";
        break;
      }
      const GElem e = g.unit();
      const GElem below = *g.cover_down(e);
      for (std::size_t v = u + 1; v < n && c.passed; ++v) {
        ++c.checked;
        const GElem a = b.apply_transition(u, v, e);
        const GElem a_below = b.apply_transition(u, v, below);
        if (!(b.group(v).compare(a, a_below) == 0)) {
          c.passed = false;
          c.detail = b.layer(u).name + "->" + b.layer(v).name + " sends unit to " +
                     format_elem(a) + " but its lower cover to " + format_elem(a_below);
        }
      }
    }
    report.add(std::move(c));
  }

  return report;
}

bool same_up_to_labels(const Bunch &a, const Bunch &b) {
  if (a.size() != b.size())
    return false;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    const Hom &f = a.step(i);
    const Hom &g = b.step(i);
    // Two constant maps between the same groups agree.
    const bool constant = f.is_constant() && g.is_constant() && f.source() == g.source() &&
                          f.target() == g.target();
    if (!(f == g) && !constant)
      return false;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Layer &x = a.layer(i);
    const Layer &y = b.layer(i);
    if (x.cls != y.cls || !(x.group == y.group) || x.subgroup != y.subgroup)
      return false;
  }
  return true;
}

bool is_idempotent_symmetric(const Bunch &b) {
  return std::none_of(b.layers().begin(), b.layers().end(),
                      [](const Layer &l) { return l.cls == LayerClass::J; });
}

} // namespace layerlat
