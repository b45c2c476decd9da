#include <doctest.h>

#include "layerlat/densify.hpp"
#include "layerlat/errors.hpp"
#include "layerlat/fixtures.hpp"
#include "layerlat/standardize.hpp"

using namespace layerlat;
namespace fx = layerlat::fixtures;

namespace {

ChainElement eu(std::size_t layer, bool dotted = false) {
  return {layer, GElem::unit_mark(), dotted};
}
ChainElement el(std::size_t layer, long g) { return {layer, GElem::integer(g), false}; }

// Replays the midpoint rule on a list of already sorted reference points.
Rational midpoint(const Rational &a, const Rational &b) { return (a + b) / 2; }

} // namespace

TEST_CASE("cantor map on ZB") {
  const Chain zb(fx::zb());
  const RationalPlacement p3 = cantor_map(zb, 3);
  REQUIRE(p3.size() == 3);
  CHECK(*p3.find(zb, eu(1, true)) == Rational(0));
  CHECK(*p3.find(zb, eu(1)) == Rational(1));
  CHECK(*p3.find(zb, el(0, 0)) == midpoint(0, 1));
  const RationalPlacement p4 = cantor_map(zb, 4);
  CHECK(*p4.find(zb, el(0, 1)) == midpoint(Rational(1, 2), 1));
  CHECK(*p4.find(zb, el(0, 1)) == Rational(3, 4));
}

TEST_CASE("cantor map on S3") {
  const Chain s3(fx::s3());
  const RationalPlacement p = cantor_map(s3, 10);
  REQUIRE(p.size() == 3);
  CHECK(*p.find(s3, eu(1, true)) == Rational(0));
  CHECK(*p.find(s3, eu(0)) == Rational(1, 2));
  CHECK(*p.find(s3, eu(1)) == Rational(1));
}

TEST_CASE("cantor map rejects unbounded and trivial chains") {
  CHECK_THROWS_AS(cantor_map(Chain(fx::lz()), 5), Unbounded);
  CHECK_THROWS_AS(cantor_map(Chain(fx::ze()), 5), Unbounded);
  CHECK_THROWS_AS(
      cantor_map(Chain(Bunch({{"t", LayerClass::O, OGroup::trivial(), std::nullopt}}, {})), 5),
      InvalidElement);
}

TEST_CASE("placement is strictly order preserving") {
  const Chain zb(fx::zb());
  const RationalPlacement p = cantor_map(zb, 60);
  CHECK(p.size() == 60);
  const auto &v = p.pairs();
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      CHECK((zb.compare(v[i].x, v[j].x) <=> 0) == (boost::multiprecision::sign(v[i].q - v[j].q) <=> 0));
}

TEST_CASE("complement reverses the placed order") {
  const Chain zb(fx::zb());
  const RationalPlacement p = cantor_map(zb, 40);
  const auto &v = p.pairs();
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[i].q < v[j].q)
        CHECK(zb.less(zb.negate(v[j].x), zb.negate(v[i].x)));
}

TEST_CASE("sup extension") {
  const Chain zb(fx::zb());
  const RationalPlacement p = cantor_map(zb, 12);
  CHECK(sup_extend(zb, p, Rational(0), Rational(1, 2), 5) == Rational(0));
  CHECK(sup_extend(zb, p, Rational(1), Rational(0), 5) == Rational(0));

  // Products of elements below 1 stay at or below q(1*1) = q(2).
  const Rational q1 = *p.find(zb, el(0, 1));
  const auto q2 = p.find(zb, el(0, 2));
  REQUIRE(q2);
  const Rational s = sup_extend(zb, p, q1, q1, 20);
  CHECK(s <= *q2);
  // Every placed product of a pair strictly below q1 is at most s.
  for (const auto &x : p.pairs())
    for (const auto &y : p.pairs())
      if (x.q < q1 && y.q < q1)
        if (const auto qp = p.find(zb, zb.mul(x.x, y.x)))
          CHECK(*qp <= s);

  const std::vector<Rational> grid{Rational(0),    Rational(1, 8), Rational(1, 4), Rational(1, 2),
                                   Rational(5, 8), Rational(3, 4), Rational(7, 8), Rational(1)};
  for (std::size_t d : {0u, 4u, 16u})
    for (std::size_t i = 0; i + 1 < grid.size(); ++i)
      for (std::size_t j = 0; j < grid.size(); ++j) {
        CHECK(sup_extend(zb, p, grid[i], grid[j], d) <= sup_extend(zb, p, grid[i + 1], grid[j], d));
        CHECK(sup_extend(zb, p, grid[j], grid[i], d) <= sup_extend(zb, p, grid[j], grid[i + 1], d));
        CHECK(sup_extend(zb, p, grid[i], grid[j], d) <= sup_extend(zb, p, grid[i], grid[j], d + 3));
      }
}

TEST_CASE("placement csv") {
  const Chain zb(fx::zb());
  CHECK(placement_csv(zb, cantor_map(zb, 4)) == "u:d:e,0,1\nt:0,1,2\nt:1,3,4\nu:e,1,1\n");
  const OGroup Z = OGroup::integers();
  const Bunch lex({{"t", LayerClass::O, OGroup::lex(Z, Z), std::nullopt},
                   {"u", LayerClass::I, OGroup::trivial(), Subgroup::whole(OGroup::trivial())}},
                  {Hom::unit_map(OGroup::lex(Z, Z), OGroup::trivial())});
  const Chain c(lex);
  CHECK(placement_csv(c, cantor_map(c, 3)).find("\"t:(0,0)\",1,2") != std::string::npos);
}

TEST_CASE("densified S3 places with pinned endpoints") {
  const DensifyResult d = densify_driver(Chain(fx::s3()), 3, 4);
  const Chain c(d.bunch);
  REQUIRE(c.size());
  CHECK(*c.size() >= 50);
  const RationalPlacement p = cantor_map(c, 50);
  CHECK(p.size() == 50);
  CHECK(p.pairs().front().q == Rational(0));
  CHECK(p.pairs().back().q == Rational(1));
  CHECK(p.pairs().front().x == c.bounds()->bottom);
  CHECK(p.pairs().back().x == c.bounds()->top);
}
