#include <doctest.h>

#include <random>

#include "brute.hpp"
#include "layerlat/errors.hpp"
#include "layerlat/fixtures.hpp"
#include "layerlat/laws.hpp"
#include "layerlat/oracle.hpp"

using namespace layerlat;
namespace fx = layerlat::fixtures;

namespace {

ChainElement el(std::size_t layer, long g, bool dotted = false) {
  return {layer, GElem::integer(g), dotted};
}
ChainElement eu(std::size_t layer, bool dotted = false) {
  return {layer, GElem::unit_mark(), dotted};
}

} // namespace

TEST_CASE("zeta drops the dot") {
  const Chain s3(fx::s3());
  CHECK(s3.zeta(1, eu(1, true)) == GElem::unit_mark());
  const Chain zb(fx::zb());
  CHECK(zb.zeta(1, el(0, 5)) == GElem::unit_mark());
  CHECK(zb.zeta(0, el(0, 5)) == GElem::integer(5));
}

TEST_CASE("order") {
  const Chain s3(fx::s3());
  const ChainElement bot = eu(1, true), t = eu(0), top = eu(1);
  CHECK(s3.compare(bot, t) < 0);
  CHECK(s3.compare(t, top) < 0);
  CHECK(s3.compare(t, t) == 0);
  CHECK(s3.sorted_elements() == std::vector<ChainElement>{bot, t, top});

  const Chain lz(fx::lz());
  const std::vector<ChainElement> asc{el(1, 3, true), el(0, 3), el(1, 3), el(1, 4, true)};
  for (std::size_t i = 0; i < asc.size(); ++i)
    for (std::size_t j = 0; j < asc.size(); ++j)
      CHECK((lz.compare(asc[i], asc[j]) <=> 0) == (i <=> j));
}

TEST_CASE("products") {
  const Chain s3(fx::s3());
  for (const auto &x : s3.sorted_elements())
    CHECK(s3.mul(s3.unit(), x) == x);
  CHECK(s3.mul(eu(1, true), eu(1)) == eu(1, true));

  const Chain zb(fx::zb());
  CHECK(zb.mul(el(0, 3), eu(1, true)) == eu(1, true));

  const Chain lz2(fx::lz2());
  CHECK(lz2.mul(el(1, 3), el(1, 2, true)) == el(1, 5));
  CHECK(lz2.mul(el(1, 2), el(1, 2, true)) == el(1, 4, true));
  CHECK(lz2.mul(el(1, 2), el(1, 4)) == el(1, 6));
  CHECK(lz2.mul(el(0, 1), el(1, 3)) == el(1, 5));
}

TEST_CASE("complements and residua") {
  const Chain s3(fx::s3());
  CHECK(s3.negate(s3.unit()) == s3.unit());

  const Chain ze(fx::ze());
  const auto f = brute::int_residuum(0, -1, -10, 10);
  REQUIRE(f);
  CHECK(*f == -1);
  CHECK(ze.falsum() == el(0, -1));
  const auto neg3 = brute::int_residuum(3, -1, -10, 10);
  CHECK(*neg3 == -4);
  CHECK(ze.negate(el(0, 3)) == el(0, *neg3));
  CHECK(ze.residuum(el(0, 2), el(0, 5)) == el(0, *brute::int_residuum(2, 5, -10, 10)));
  for (long x = -5; x <= 5; ++x)
    for (long z = -5; z <= 5; ++z)
      CHECK(ze.residuum(el(0, x), el(0, z)) == el(0, *brute::int_residuum(x, z, -20, 20)));

  const Chain lz(fx::lz());
  CHECK(lz.negate(el(1, 5)) == el(1, -5, true));
  CHECK(lz.negate(lz.negate(el(1, 5))) == el(1, 5));

  CHECK(s3.residuum(eu(1), eu(1, true)) == eu(1, true));
  for (const auto &y : s3.sorted_elements())
    CHECK(s3.residuum(s3.unit(), y) == y);

  const Chain two(Bunch({{"t", LayerClass::I, OGroup::trivial(), Subgroup::whole(OGroup::trivial())}},
                        {}));
  CHECK(two.falsum() == eu(0, true));
  CHECK(two.sorted_elements() == std::vector<ChainElement>{eu(0, true), eu(0)});
}

TEST_CASE("boundedness") {
  const Chain zb(fx::zb());
  const auto b = zb.bounds();
  REQUIRE(b);
  CHECK(b->top == eu(1));
  CHECK(b->bottom == eu(1, true));
  // Everything enumerated lies between the stated bounds.
  for (const auto &x : zb.first_elements(200)) {
    CHECK_FALSE(zb.less(b->top, x));
    CHECK_FALSE(zb.less(x, b->bottom));
  }

  const Chain lz(fx::lz());
  CHECK_FALSE(lz.is_bounded());
  // Any candidate top (u,k) is beaten by (u,k+1).
  for (long k = -5; k <= 5; ++k)
    CHECK(lz.less(el(1, k), el(1, k + 1)));

  const Chain one(Bunch({{"t", LayerClass::O, OGroup::trivial(), std::nullopt}}, {}));
  CHECK(one.is_bounded());
  CHECK(one.is_trivial());
}

TEST_CASE("enumeration") {
  const Chain s3(fx::s3());
  CHECK(s3.first_elements(10).size() == 3);
  const Chain zb(fx::zb());
  CHECK(zb.first_elements(4) == std::vector<ChainElement>{el(0, 0), eu(1), eu(1, true), el(0, 1)});
  const Chain lz(fx::lz());
  const auto xs = lz.first_elements(200);
  for (long k = -20; k <= 20; ++k) {
    CHECK(std::find(xs.begin(), xs.end(), el(1, k)) != xs.end());
    CHECK(std::find(xs.begin(), xs.end(), el(1, k, true)) != xs.end());
  }
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      REQUIRE_FALSE(xs[i] == xs[j]);
}

TEST_CASE("element text") {
  const Chain lz(fx::lz());
  CHECK(lz.format(el(1, 3, true)) == "u:d:3");
  CHECK(lz.parse("u:d:3") == el(1, 3, true));
  CHECK(lz.parse("t:-2") == el(0, -2));
  CHECK_THROWS_AS(lz.parse("t:d:2"), ParseError);
  CHECK_THROWS_AS(lz.parse("w:2"), ParseError);
  CHECK_THROWS_AS(lz.parse("t2"), ParseError);
  const Chain lz2(fx::lz2());
  CHECK_THROWS_AS(lz2.parse("u:d:3"), ParseError);
  CHECK_THROWS_AS(lz2.require(el(1, 3, true)), InvalidElement);
}

TEST_CASE("chain laws on fixtures and random bunches") {
  std::vector<Bunch> all{fx::s3(), fx::zb(), fx::ze(), fx::lz(), fx::lz2()};
  std::mt19937_64 rng(5);
  for (int k = 0; k < 8; ++k)
    all.push_back(fx::random_bunch(rng));
  for (const auto &b : all) {
    LawConfig cfg;
    cfg.triples = 2000;
    const Report r = check_chain_laws(Chain(b), cfg);
    for (const auto &f : r.failures())
      FAIL_CHECK(f.clause << ": " << f.detail);
  }
}

TEST_CASE("finite chains match the brute-force axiom check") {
  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto &b : finite_bunches(n)) {
      const Chain c(b);
      const auto els = c.sorted_elements();
      brute::Table m(els.size(), std::vector<std::size_t>(els.size()));
      auto idx = [&](const ChainElement &x) {
        return static_cast<std::size_t>(std::find(els.begin(), els.end(), x) - els.begin());
      };
      for (std::size_t i = 0; i < els.size(); ++i)
        for (std::size_t j = 0; j < els.size(); ++j)
          m[i][j] = idx(c.mul(els[i], els[j]));
      CHECK(brute::is_involutive_chain(m, idx(c.unit()), idx(c.falsum())));
      for (std::size_t i = 0; i < els.size(); ++i)
        CHECK(idx(c.negate(els[i])) == els.size() - 1 - i);
    }
}
