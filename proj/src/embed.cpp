#include "layerlat/embed.hpp"

#include <algorithm>

#include "layerlat/errors.hpp"

namespace layerlat {

namespace {

std::vector<GElem> group_samples(const OGroup &g, std::size_t samples) {
  std::vector<GElem> out;
  GroupStream s(g);
  while (out.size() < samples) {
    auto x = s.next();
    if (!x)
      break;
    out.push_back(std::move(*x));
  }
  return out;
}

Method method_for(const OGroup &g) { return g.size() ? Method::Proved : Method::Tested; }

} // namespace

EmbeddingSpec identity_embedding(const Bunch &src, const Bunch &dst,
                                 const std::vector<std::size_t> &layer_index) {
  EmbeddingSpec e;
  for (std::size_t i = 0; i < src.size(); ++i) {
    const auto &l = src.layer(i);
    e.skeleton_map[l.name] = dst.layer(layer_index.at(i)).name;
    e.layer_maps.emplace(l.name, Hom::identity(l.group));
  }
  return e;
}

void check_typing(const Bunch &src, const Bunch &dst, const EmbeddingSpec &e) {
  for (const auto &l : src.layers()) {
    const auto sm = e.skeleton_map.find(l.name);
    if (sm == e.skeleton_map.end())
      throw TypeMismatch("skeleton_map has no image for layer '" + l.name + "'");
    const auto target = dst.find(sm->second);
    if (!target)
      throw TypeMismatch("skeleton_map sends '" + l.name + "' to unknown layer '" + sm->second +
                         "'");
    const auto lm = e.layer_maps.find(l.name);
    if (lm == e.layer_maps.end())
      throw TypeMismatch("no layer map for '" + l.name + "'");
    if (!(lm->second.source() == l.group) || !(lm->second.target() == dst.group(*target)))
      throw TypeMismatch("layer map for '" + l.name + "' is " + lm->second.describe() +
                         ", expected " + l.group.describe() + " -> " +
                         dst.group(*target).describe());
  }
}

ChainElement map_element(const Bunch &src, const Bunch &dst, const EmbeddingSpec &e,
                         const ChainElement &x) {
  const std::string &name = src.layer(x.layer).name;
  return {dst.index_of(e.skeleton_map.at(name)), e.layer_maps.at(name).apply(x.g), x.dotted};
}

Report check_embedding(const Chain &src, const Chain &dst, const EmbeddingSpec &e,
                       std::size_t samples) {
  const Bunch &a = src.bunch();
  const Bunch &b = dst.bunch();
  check_typing(a, b, e);
  std::vector<std::size_t> img(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    img[i] = b.index_of(e.skeleton_map.at(a.layer(i).name));
  auto lmap = [&](std::size_t i) -> const Hom & { return e.layer_maps.at(a.layer(i).name); };

  Report rep;
  {
    ClauseResult r{"E1", true, Method::Proved, 0, {}};
    if (img[0] != 0) {
      r.passed = false;
      r.detail = "least layer t goes to '" + b.layer(img[0]).name + "'";
    }
    for (std::size_t i = 0; i < a.size() && r.passed; ++i) {
      ++r.checked;
      if (i + 1 < a.size() && img[i] >= img[i + 1]) {
        r.passed = false;
        r.detail = "skeleton order not preserved at '" + a.layer(i).name + "'";
      } else if (a.class_of(i) != b.class_of(img[i])) {
        r.passed = false;
        r.detail = "layer '" + a.layer(i).name + "' in " + std::string(to_string(a.class_of(i))) +
                   " goes to '" + b.layer(img[i]).name + "' in " +
                   std::string(to_string(b.class_of(img[i])));
      }
    }
    rep.add(r);
  }
  {
    ClauseResult r{"layer maps", true, Method::Proved, 0, {}};
    for (std::size_t i = 0; i < a.size() && r.passed; ++i) {
      const Hom &h = lmap(i);
      if (method_for(a.group(i)) == Method::Tested)
        r.method = Method::Tested;
      const auto out = hom_check(h, samples);
      r.checked += out.checked;
      if (!out.ok) {
        r.passed = false;
        r.detail = a.layer(i).name + ": " + out.failure;
        break;
      }
      const GElem unit = b.group(img[i]).unit();
      for (const auto &g : group_samples(a.group(i), samples)) {
        ++r.checked;
        if (!(g == a.group(i).unit()) && h.apply(g) == unit) {
          r.passed = false;
          r.detail = a.layer(i).name + ": " + format_elem(g) + " is sent to the unit";
          break;
        }
      }
    }
    rep.add(r);
  }
  {
    ClauseResult r{"E2a", true, Method::Proved, 0, {}};
    for (std::size_t u = 0; u < a.size() && r.passed; ++u) {
      if (method_for(a.group(u)) == Method::Tested)
        r.method = Method::Tested;
      const auto gs = group_samples(a.group(u), samples);
      for (std::size_t v = u + 1; v < a.size() && r.passed; ++v)
        for (const auto &g : gs) {
          ++r.checked;
          const GElem lhs = lmap(v).apply(a.apply_transition(u, v, g));
          const GElem rhs = b.apply_transition(img[u], img[v], lmap(u).apply(g));
          if (!(lhs == rhs)) {
            r.passed = false;
            r.detail = a.layer(u).name + "->" + a.layer(v).name + " at " + format_elem(g) + ": " +
                       format_elem(lhs) + " vs " + format_elem(rhs);
            break;
          }
        }
    }
    rep.add(r);
  }
  {
    ClauseResult r{"E2b", true, Method::Proved, 0, {}};
    for (std::size_t u = 0; u < a.size() && r.passed; ++u) {
      if (a.class_of(u) != LayerClass::I)
        continue;
      if (method_for(a.group(u)) == Method::Tested)
        r.method = Method::Tested;
      for (const auto &g : group_samples(a.group(u), samples)) {
        ++r.checked;
        const bool in_src = a.in_subgroup(u, g);
        if (in_src != b.in_subgroup(img[u], lmap(u).apply(g))) {
          r.passed = false;
          r.detail = a.layer(u).name + ": " + format_elem(g) +
                     (in_src ? " is in H but its image is not" : " is outside H but its image is in");
          break;
        }
      }
    }
    rep.add(r);
  }
  {
    ClauseResult r{"E2c", true, Method::Proved, 0, {}};
    for (std::size_t u = 0; u < a.size() && r.passed; ++u) {
      if (a.class_of(u) != LayerClass::J)
        continue;
      ++r.checked;
      const auto below = a.group(u).cover_down(a.group(u).unit());
      const auto target = b.group(img[u]).cover_down(b.group(img[u]).unit());
      if (!below || !target || !(lmap(u).apply(*below) == *target)) {
        r.passed = false;
        r.detail = a.layer(u).name + ": lower cover of the unit " +
                   (below ? format_elem(*below) : std::string("(none)")) + " maps to " +
                   (below ? format_elem(lmap(u).apply(*below)) : std::string("(none)")) +
                   ", expected " + (target ? format_elem(*target) : std::string("(none)"));
      }
    }
    rep.add(r);
  }
  {
    const bool finite = src.size().has_value();
    ClauseResult r{"element map", true, finite ? Method::Proved : Method::Tested, 0, {}};
    const auto xs = finite ? src.first_elements(*src.size())
                           : src.first_elements(std::min<std::size_t>(samples, 64));
    auto fail = [&](std::string why) {
      if (r.passed) {
        r.passed = false;
        r.detail = std::move(why);
      }
    };
    auto iota = [&](const ChainElement &x) { return map_element(a, b, e, x); };
    std::vector<ChainElement> ys;
    for (const auto &x : xs) {
      ys.push_back(iota(x));
      if (!dst.contains(ys.back()))
        fail(src.format(x) + " maps outside the target carrier");
    }
    if (r.passed) {
      if (!(iota(src.unit()) == dst.unit()))
        fail("t is not preserved");
      if (!(iota(src.falsum()) == dst.falsum()))
        fail("f is not preserved");
    }
    for (std::size_t i = 0; i < xs.size() && r.passed; ++i) {
      ++r.checked;
      if (!(iota(src.negate(xs[i])) == dst.negate(ys[i])))
        fail("complement not preserved at " + src.format(xs[i]));
      for (std::size_t j = 0; j < xs.size() && r.passed; ++j) {
        ++r.checked;
        if ((src.compare(xs[i], xs[j]) <=> 0) != (dst.compare(ys[i], ys[j]) <=> 0))
          fail("order not preserved at " + src.format(xs[i]) + ", " + src.format(xs[j]));
        else if (!(iota(src.mul(xs[i], xs[j])) == dst.mul(ys[i], ys[j])))
          fail("product not preserved at " + src.format(xs[i]) + ", " + src.format(xs[j]));
      }
    }
    rep.add(r);
  }
  return rep;
}

Json embedding_to_json(const EmbeddingSpec &e) {
  Json j;
  j["skeleton_map"] = Json::object();
  for (const auto &[k, v] : e.skeleton_map)
    j["skeleton_map"][k] = v;
  j["layer_maps"] = Json::object();
  for (const auto &[k, h] : e.layer_maps)
    j["layer_maps"][k] = hom_to_json(h);
  return j;
}

EmbeddingSpec embedding_from_json(const Json &j, const Bunch &src, const Bunch &dst) {
  if (!j.is_object())
    throw ParseError("(root)", "expected an object");
  for (const char *f : {"skeleton_map", "layer_maps"})
    if (!j.contains(f) || !j.at(f).is_object())
      throw ParseError(f, "missing or not an object");
  EmbeddingSpec e;
  for (const auto &[k, v] : j.at("skeleton_map").items()) {
    if (!v.is_string())
      throw ParseError("skeleton_map." + k, "expected a layer name");
    e.skeleton_map[k] = v.get<std::string>();
  }
  for (const auto &[k, v] : j.at("layer_maps").items()) {
    const auto u = src.find(k);
    if (!u)
      throw ParseError("layer_maps." + k, "unknown source layer");
    const auto sm = e.skeleton_map.find(k);
    if (sm == e.skeleton_map.end())
      throw ParseError("layer_maps." + k, "layer has no skeleton_map entry");
    const auto target = dst.find(sm->second);
    if (!target)
      throw ParseError("skeleton_map." + k, "unknown target layer '" + sm->second + "'");
    e.layer_maps.emplace(k, hom_from_json(v, src.group(*u), dst.group(*target), "layer_maps." + k));
  }
  return e;
}

EmbeddingSpec parse_embedding(std::string_view text, const Bunch &src, const Bunch &dst) {
  return embedding_from_json(parse_json_text(text), src, dst);
}

} // namespace layerlat
