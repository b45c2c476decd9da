#pragma once

// JSON encodings of groups, homs, subgroups and bunch documents.
//
//   groups:    "trivial" | "int" | "rat" | {"lex":[G1,G2]}
//   homs:      "unit" | "id" | {"scale_int":k} | "int_to_rat" |
//              "inject_first" | "project_first" |
//              {"compose":[outer,inner]} with optional "via": G naming the
//              intermediate group when it cannot be inferred
//   subgroups: "whole" | {"int_multiples":k} | "int_in_rat" | "first_zero"
//
// A bunch document:
//   {"skeleton":["t","u"], "partition":{"t":"O","u":"I"},
//    "groups":{"t":"int","u":"int"}, "subgroups":{"u":"whole"},
//    "steps":{"t->u":"id"}}

#include <string>
#include <string_view>

#include <json.hpp>

#include "layerlat/bunch.hpp"

namespace layerlat {

using Json = nlohmann::ordered_json;

Json group_to_json(const OGroup &g);
/// `field` names the document location used in diagnostics.
OGroup group_from_json(const Json &j, const std::string &field);

Json hom_to_json(const Hom &h);
/// Types the hom against the given source and target groups.
Hom hom_from_json(const Json &j, const OGroup &source, const OGroup &target,
                  const std::string &field);

Json subgroup_to_json(const Subgroup &s);
Subgroup subgroup_from_json(const Json &j, const OGroup &ambient, const std::string &field);

Json bunch_to_json(const Bunch &b);
Bunch bunch_from_json(const Json &j);

std::string serialize_bunch(const Bunch &b);
/// Throws ParseError naming the line (syntax) or the field (structure).
Bunch parse_bunch(std::string_view text);

/// Parses JSON text, converting syntax errors to ParseError with a line.
Json parse_json_text(std::string_view text);

std::string read_file(const std::string &path);

} // namespace layerlat
