#include <doctest.h>

#include "layerlat/densify.hpp"
#include "layerlat/embed.hpp"
#include "layerlat/errors.hpp"
#include "layerlat/fixtures.hpp"

using namespace layerlat;
namespace fx = layerlat::fixtures;

namespace {

bool clause_failed(const Report &r, const std::string &name) {
  for (const auto &c : r.failures())
    if (c.clause == name)
      return true;
  return false;
}

} // namespace

TEST_CASE("identity into a one-insertion extension") {
  const InsertionReceipt rec = insert_below(fx::s3(), 1);
  const Chain src(fx::s3()), dst(rec.new_bunch);
  REQUIRE(dst.size() == std::size_t{5});
  const Report r = check_embedding(src, dst, rec.iota);
  for (const auto &f : r.failures())
    FAIL_CHECK(f.clause << ": " << f.detail);
  for (const auto &c : r.clauses())
    CHECK(c.method == Method::Proved);

  // The element map, checked by hand over the whole source.
  const auto xs = src.sorted_elements();
  std::vector<ChainElement> ys;
  for (const auto &x : xs)
    ys.push_back(map_element(src.bunch(), dst.bunch(), rec.iota, x));
  for (std::size_t i = 0; i + 1 < ys.size(); ++i)
    CHECK(dst.less(ys[i], ys[i + 1]));
}

TEST_CASE("swapping classes breaks E1") {
  // S3 into the two-layer even chain over trivial groups: t in O goes to an
  // I-layer.
  const OGroup E = OGroup::trivial();
  const Bunch even({{"t", LayerClass::I, E, Subgroup::whole(E)},
                    {"u", LayerClass::I, E, Subgroup::whole(E)}},
                   {Hom::unit_map(E, E)});
  EmbeddingSpec e;
  e.skeleton_map = {{"t", "t"}, {"u", "u"}};
  e.layer_maps.emplace("t", Hom::identity(E));
  e.layer_maps.emplace("u", Hom::identity(E));
  const Report r = check_embedding(Chain(fx::s3()), Chain(even), e);
  CHECK(clause_failed(r, "E1"));
}

TEST_CASE("doubling on a J-layer breaks E2c") {
  const Bunch ze = fx::ze();
  EmbeddingSpec e;
  e.skeleton_map = {{"t", "t"}};
  e.layer_maps.emplace("t", Hom::scale_int(2));
  const Report r = check_embedding(Chain(ze), Chain(ze), e, 100);
  CHECK(clause_failed(r, "E2c"));
  CHECK_FALSE(clause_failed(r, "E1"));
  CHECK_FALSE(clause_failed(r, "E2a"));
  // The single counterexample: the cover -1 of 0 goes to -2.
  CHECK(Hom::scale_int(2).apply(GElem::integer(-1)) == GElem::integer(-2));
}

TEST_CASE("subgroup preservation") {
  // LZ2 into LZ by the identity on both layers: H = 2Z is not preserved.
  EmbeddingSpec e;
  const OGroup Z = OGroup::integers();
  e.skeleton_map = {{"t", "t"}, {"u", "u"}};
  e.layer_maps.emplace("t", Hom::identity(Z));
  e.layer_maps.emplace("u", Hom::identity(Z));
  const Report r = check_embedding(Chain(fx::lz2()), Chain(fx::lz()), e, 50);
  CHECK(clause_failed(r, "E2b"));
  CHECK(clause_failed(r, "E2a"));
}

TEST_CASE("ill-typed layer maps") {
  EmbeddingSpec e;
  e.skeleton_map = {{"t", "t"}, {"u", "u"}};
  e.layer_maps.emplace("t", Hom::int_to_rat());
  e.layer_maps.emplace("u", Hom::identity(OGroup::trivial()));
  CHECK_THROWS_AS(check_embedding(Chain(fx::zb()), Chain(fx::zb()), e), TypeMismatch);
  e.skeleton_map.erase("u");
  CHECK_THROWS_AS(check_embedding(Chain(fx::zb()), Chain(fx::zb()), e), TypeMismatch);
}

TEST_CASE("embedding json") {
  const Bunch lz = fx::lz();
  const std::string text = R"({"skeleton_map":{"t":"t","u":"u"},
    "layer_maps":{"t":"id","u":{"scale_int":1}}})";
  const EmbeddingSpec e = parse_embedding(text, lz, lz);
  CHECK(e.skeleton_map.at("u") == "u");
  const EmbeddingSpec back = embedding_from_json(embedding_to_json(e), lz, lz);
  CHECK(back.skeleton_map == e.skeleton_map);
  CHECK(back.layer_maps.at("u") == e.layer_maps.at("u"));
  CHECK(check_embedding(Chain(lz), Chain(lz), e, 50).ok());
  CHECK_THROWS_AS(parse_embedding(R"({"skeleton_map":{}})", lz, lz), ParseError);
  CHECK_THROWS_AS(parse_embedding(R"({"skeleton_map":{"t":"t"},"layer_maps":{"w":"id"}})", lz, lz),
                  ParseError);
}
