#include "layerlat/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "layerlat/errors.hpp"

namespace layerlat {

namespace {

std::string show(const Json &j) { return j.dump(); }

std::int64_t positive_int(const Json &j, const std::string &field) {
  if (!j.is_number_integer() || j.get<std::int64_t>() <= 0)
    throw ParseError(field, "expected a positive integer, got " + show(j));
  return j.get<std::int64_t>();
}

const Json &single_key(const Json &j, const char *key, const std::string &field) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(field, std::string("expected an object with key '") + key + "', got " +
                                show(j));
  return j.at(key);
}

std::optional<std::string> object_tag(const Json &j) {
  if (!j.is_object() || j.empty())
    return std::nullopt;
  for (const char *key : {"lex", "scale_int", "compose", "int_multiples", "include", "restrict"})
    if (j.contains(key))
      return std::string(key);
  return std::nullopt;
}

std::optional<OGroup> infer_target(const Json &j, const OGroup &source);
std::optional<OGroup> infer_source(const Json &j, const OGroup &target);

std::optional<OGroup> infer_target(const Json &j, const OGroup &source) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "id")
      return source;
    if (s == "int_to_rat")
      return OGroup::rationals();
    if (s == "project_first" && source.kind() == OGroup::Kind::Lex)
      return source.left();
    return std::nullopt;
  }
  const auto tag = object_tag(j);
  if (tag == "scale_int")
    return OGroup::integers();
  if (tag == "restrict")
    return subgroup_from_json(j.at("restrict"), source, "restrict").carrier();
  if (tag == "compose" && j.at("compose").is_array() && j.at("compose").size() == 2) {
    std::optional<OGroup> mid;
    if (j.contains("via"))
      mid = group_from_json(j.at("via"), "via");
    else
      mid = infer_target(j.at("compose")[1], source);
    if (mid)
      return infer_target(j.at("compose")[0], *mid);
  }
  return std::nullopt;
}

std::optional<OGroup> infer_source(const Json &j, const OGroup &target) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "id")
      return target;
    if (s == "int_to_rat")
      return OGroup::integers();
    if (s == "inject_first" && target.kind() == OGroup::Kind::Lex)
      return target.left();
    return std::nullopt;
  }
  const auto tag = object_tag(j);
  if (tag == "scale_int")
    return OGroup::integers();
  if (tag == "include")
    return subgroup_from_json(j.at("include"), target, "include").carrier();
  if (tag == "compose" && j.at("compose").is_array() && j.at("compose").size() == 2) {
    std::optional<OGroup> mid;
    if (j.contains("via"))
      mid = group_from_json(j.at("via"), "via");
    else
      mid = infer_source(j.at("compose")[0], target);
    if (mid)
      return infer_source(j.at("compose")[1], *mid);
  }
  return std::nullopt;
}

void require_types(bool ok, const std::string &field, const std::string &what,
                   const OGroup &s, const OGroup &t) {
  if (!ok)
    throw ParseError(field, what + " cannot map " + s.describe() + " to " + t.describe());
}

std::size_t line_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n')
      ++line;
  return line;
}

} // namespace

Json group_to_json(const OGroup &g) {
  switch (g.kind()) {
  case OGroup::Kind::Trivial:
    return "trivial";
  case OGroup::Kind::Int:
    return "int";
  case OGroup::Kind::Rat:
    return "rat";
  case OGroup::Kind::Lex:
    return Json{{"lex", Json::array({group_to_json(g.left()), group_to_json(g.right())})}};
  }
  return nullptr;
}

OGroup group_from_json(const Json &j, const std::string &field) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "trivial")
      return OGroup::trivial();
    if (s == "int")
      return OGroup::integers();
    if (s == "rat")
      return OGroup::rationals();
    throw ParseError(field, "unknown group '" + s + "'");
  }
  const Json &args = single_key(j, "lex", field);
  if (!args.is_array() || args.size() != 2)
    throw ParseError(field + ".lex", "expected a two-element array");
  return OGroup::lex(group_from_json(args[0], field + ".lex[0]"),
                     group_from_json(args[1], field + ".lex[1]"));
}

Json hom_to_json(const Hom &h) {
  switch (h.kind()) {
  case Hom::Kind::UnitMap:
    return "unit";
  case Hom::Kind::Identity:
    return "id";
  case Hom::Kind::ScaleInt:
    return Json{{"scale_int", h.factor()}};
  case Hom::Kind::IntToRat:
    return "int_to_rat";
  case Hom::Kind::InjectFirst:
    return "inject_first";
  case Hom::Kind::ProjectFirst:
    return "project_first";
  case Hom::Kind::Include:
    return Json{{"include", subgroup_to_json(h.subgroup())}};
  case Hom::Kind::Restrict:
    return Json{{"restrict", subgroup_to_json(h.subgroup())}};
  case Hom::Kind::Compose:
    return Json{{"compose", Json::array({hom_to_json(h.outer()), hom_to_json(h.inner())})},
                {"via", group_to_json(h.inner().target())}};
  }
  return nullptr;
}

Hom hom_from_json(const Json &j, const OGroup &source, const OGroup &target,
                  const std::string &field) {
  using K = OGroup::Kind;
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "unit")
      return Hom::unit_map(source, target);
    if (s == "id") {
      require_types(source == target, field, "id", source, target);
      return Hom::identity(source);
    }
    if (s == "int_to_rat") {
      require_types(source.kind() == K::Int && target.kind() == K::Rat, field, s, source,
                    target);
      return Hom::int_to_rat();
    }
    if (s == "inject_first") {
      require_types(target.kind() == K::Lex && target.left() == source, field, s, source,
                    target);
      return Hom::inject_first(source, target.right());
    }
    if (s == "project_first") {
      require_types(source.kind() == K::Lex && source.left() == target, field, s, source,
                    target);
      return Hom::project_first(source);
    }
    throw ParseError(field, "unknown hom '" + s + "'");
  }
  const auto tag = object_tag(j);
  if (tag == "scale_int") {
    const auto k = positive_int(j.at("scale_int"), field + ".scale_int");
    require_types(source.kind() == K::Int && target.kind() == K::Int, field, "scale_int",
                  source, target);
    return Hom::scale_int(k);
  }
  if (tag == "include") {
    Subgroup sub = subgroup_from_json(j.at("include"), target, field + ".include");
    require_types(sub.carrier() == source, field, "include", source, target);
    return Hom::include(std::move(sub));
  }
  if (tag == "restrict") {
    Subgroup sub = subgroup_from_json(j.at("restrict"), source, field + ".restrict");
    require_types(sub.carrier() == target, field, "restrict", source, target);
    return Hom::restrict(std::move(sub));
  }
  if (tag == "compose") {
    const Json &parts = j.at("compose");
    if (!parts.is_array() || parts.size() != 2)
      throw ParseError(field + ".compose", "expected [outer, inner]");
    std::optional<OGroup> mid;
    if (j.contains("via"))
      mid = group_from_json(j.at("via"), field + ".via");
    if (!mid)
      mid = infer_target(parts[1], source);
    if (!mid)
      mid = infer_source(parts[0], target);
    if (!mid)
      throw ParseError(field, "cannot infer the intermediate group of a composition; "
                              "add \"via\"");
    Hom inner = hom_from_json(parts[1], source, *mid, field + ".compose[1]");
    Hom outer = hom_from_json(parts[0], *mid, target, field + ".compose[0]");
    return Hom::compose(std::move(outer), std::move(inner));
  }
  throw ParseError(field, "unknown hom " + show(j));
}

Json subgroup_to_json(const Subgroup &s) {
  switch (s.kind()) {
  case Subgroup::Kind::Whole:
    return "whole";
  case Subgroup::Kind::IntMultiples:
    return Json{{"int_multiples", s.modulus()}};
  case Subgroup::Kind::IntInRat:
    return "int_in_rat";
  case Subgroup::Kind::FirstZero:
    return "first_zero";
  }
  return nullptr;
}

Subgroup subgroup_from_json(const Json &j, const OGroup &ambient, const std::string &field) {
  using K = OGroup::Kind;
  auto need = [&](bool ok, const std::string &what) {
    if (!ok)
      throw ParseError(field, what + " is not a subgroup of " + ambient.describe());
  };
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "whole")
      return Subgroup::whole(ambient);
    if (s == "int_in_rat") {
      need(ambient.kind() == K::Rat, s);
      return Subgroup::int_in_rat();
    }
    if (s == "first_zero") {
      need(ambient.kind() == K::Lex, s);
      return Subgroup::first_zero(ambient);
    }
    throw ParseError(field, "unknown subgroup '" + s + "'");
  }
  const auto k = positive_int(single_key(j, "int_multiples", field), field + ".int_multiples");
  need(ambient.kind() == K::Int, "int_multiples");
  return Subgroup::int_multiples(k);
}

Json bunch_to_json(const Bunch &b) {
  Json skeleton = Json::array();
  Json partition = Json::object();
  Json groups = Json::object();
  Json subgroups = Json::object();
  Json steps = Json::object();
  for (std::size_t i = 0; i < b.size(); ++i) {
    const Layer &l = b.layer(i);
    skeleton.push_back(l.name);
    partition[l.name] = std::string(to_string(l.cls));
    groups[l.name] = group_to_json(l.group);
    if (l.subgroup)
      subgroups[l.name] = subgroup_to_json(*l.subgroup);
    if (i + 1 < b.size())
      steps[l.name + "->" + b.layer(i + 1).name] = hom_to_json(b.step(i));
  }
  return Json{{"skeleton", skeleton},
              {"partition", partition},
              {"groups", groups},
              {"subgroups", subgroups},
              {"steps", steps}};
}

Bunch bunch_from_json(const Json &j) {
  if (!j.is_object())
    throw ParseError("document", "expected a JSON object");
  for (const char *key : {"skeleton", "partition", "groups"})
    if (!j.contains(key))
      throw ParseError(key, "missing field");
  const Json &skeleton = j.at("skeleton");
  if (!skeleton.is_array() || skeleton.empty())
    throw ParseError("skeleton", "expected a nonempty list of layer names");
  const Json empty = Json::object();
  const Json &partition = j.at("partition");
  const Json &groups = j.at("groups");
  const Json &subgroups = j.contains("subgroups") ? j.at("subgroups") : empty;
  const Json &steps = j.contains("steps") ? j.at("steps") : empty;
  for (const auto *m : {&partition, &groups, &subgroups, &steps})
    if (!m->is_object())
      throw ParseError("document", "partition, groups, subgroups and steps must be objects");

  std::vector<Layer> layers;
  for (std::size_t i = 0; i < skeleton.size(); ++i) {
    const std::string field = "skeleton[" + std::to_string(i) + "]";
    if (!skeleton[i].is_string())
      throw ParseError(field, "layer names must be strings");
    Layer l;
    l.name = skeleton[i].get<std::string>();
    for (const auto &prior : layers)
      if (prior.name == l.name)
        throw ParseError(field, "duplicate layer '" + l.name + "'");
    if (!partition.contains(l.name) || !partition.at(l.name).is_string())
      throw ParseError("partition." + l.name, "missing class for layer");
    try {
      l.cls = parse_layer_class(partition.at(l.name).get<std::string>());
    } catch (const ParseError &) {
      throw ParseError("partition." + l.name,
                       "unknown class " + show(partition.at(l.name)));
    }
    if (!groups.contains(l.name))
      throw ParseError("groups." + l.name, "missing group for layer");
    l.group = group_from_json(groups.at(l.name), "groups." + l.name);
    if (l.cls == LayerClass::I) {
      if (!subgroups.contains(l.name))
        throw ParseError("subgroups." + l.name, "missing subgroup for I-layer");
      l.subgroup = subgroup_from_json(subgroups.at(l.name), l.group, "subgroups." + l.name);
    } else if (subgroups.contains(l.name)) {
      throw ParseError("subgroups." + l.name, "subgroups are only allowed on I-layers");
    }
    layers.push_back(std::move(l));
  }
  for (const auto &[key, value] : partition.items())
    if (std::none_of(layers.begin(), layers.end(), [&](const Layer &l) { return l.name == key; }))
      throw ParseError("partition." + key, "layer not in skeleton");

  std::vector<Hom> homs;
  std::size_t used = 0;
  for (std::size_t i = 0; i + 1 < layers.size(); ++i) {
    const std::string key = layers[i].name + "->" + layers[i + 1].name;
    if (!steps.contains(key))
      throw ParseError("steps." + key, "missing step between consecutive layers");
    homs.push_back(hom_from_json(steps.at(key), layers[i].group, layers[i + 1].group,
                                 "steps." + key));
    ++used;
  }
  if (used != steps.size())
    throw ParseError("steps", "steps are only allowed between consecutive layers");
  try {
    return Bunch(std::move(layers), std::move(homs));
  } catch (const StructureError &e) {
    throw ParseError("document", e.what());
  } catch (const TypeMismatch &e) {
    throw ParseError("document", e.what());
  }
}

std::string serialize_bunch(const Bunch &b) { return bunch_to_json(b).dump(2) + "\n"; }

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError("line " + std::to_string(line_of(text, e.byte)), e.what());
  }
}

Bunch parse_bunch(std::string_view text) { return bunch_from_json(parse_json_text(text)); }

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace layerlat
