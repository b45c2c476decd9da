#include <doctest.h>

#include <random>

#include "layerlat/errors.hpp"
#include "layerlat/ogroup.hpp"

using namespace layerlat;

namespace {

GElem I(long v) { return GElem::integer(v); }
GElem Q(long p, long q) { return GElem::rational(Rational(p, q)); }
GElem P(GElem a, GElem b) { return GElem::pair(std::move(a), std::move(b)); }

std::vector<GElem> first(const OGroup &g, std::size_t n) {
  std::vector<GElem> out;
  GroupStream s(g);
  while (out.size() < n) {
    auto x = s.next();
    if (!x)
      break;
    out.push_back(*x);
  }
  return out;
}

std::vector<OGroup> all_groups() {
  const OGroup Z = OGroup::integers(), R = OGroup::rationals();
  return {OGroup::trivial(), Z, R, OGroup::lex(Z, Z), OGroup::lex(Z, R), OGroup::lex(R, Z),
          OGroup::lex(OGroup::lex(Z, Z), Z)};
}

} // namespace

TEST_CASE("compare") {
  CHECK(OGroup::integers().compare(I(2), I(5)) < 0);
  const OGroup L = OGroup::lex(OGroup::integers(), OGroup::integers());
  CHECK(L.compare(P(I(1), I(9)), P(I(2), I(0))) < 0);
  CHECK(OGroup::rationals().compare(Q(1, 3), Q(1, 3)) == 0);
  CHECK_THROWS_AS(OGroup::integers().compare(I(1), Q(1, 2)), TypeMismatch);
}

TEST_CASE("op, inverse and unit") {
  const OGroup Z = OGroup::integers();
  CHECK(Z.op(I(2), I(3)) == I(5));
  const OGroup L = OGroup::lex(Z, OGroup::rationals());
  CHECK(L.inverse(P(I(1), Q(1, 2))) == P(I(-1), Q(-1, 2)));
  for (const auto &g : all_groups())
    for (const auto &x : first(g, 20))
      CHECK(g.op(x, g.unit()) == x);
}

TEST_CASE("covers") {
  const OGroup Z = OGroup::integers();
  CHECK(*Z.cover_up(I(4)) == I(5));
  CHECK_FALSE(OGroup::rationals().cover_up(Q(1, 2)));
  CHECK_FALSE(OGroup::trivial().cover_up(GElem::unit_mark()));
  const OGroup L = OGroup::lex(Z, Z);
  const auto up = L.cover_up(P(I(0), I(7)));
  REQUIRE(up);
  CHECK(*up == P(I(0), I(8)));
  // No lex pair in a window lies strictly between (0,7) and (0,8).
  for (long a = -5; a <= 5; ++a)
    for (long b = -20; b <= 20; ++b) {
      const GElem z = P(I(a), I(b));
      CHECK_FALSE((L.compare(P(I(0), I(7)), z) < 0 && L.compare(z, *up) < 0));
    }
  CHECK_FALSE(OGroup::lex(Z, OGroup::rationals()).cover_up(P(I(0), Q(1, 2))));
}

TEST_CASE("discreteness") {
  const OGroup Z = OGroup::integers(), R = OGroup::rationals(), T = OGroup::trivial();
  CHECK_FALSE(T.is_discrete());
  CHECK(Z.is_discrete());
  CHECK_FALSE(R.is_discrete());
  CHECK(OGroup::lex(R, Z).is_discrete());
  CHECK_FALSE(OGroup::lex(Z, R).is_discrete());
  CHECK(OGroup::lex(Z, T).is_discrete());
  CHECK_FALSE(OGroup::lex(R, T).is_discrete());
}

TEST_CASE("enumeration") {
  CHECK(first(OGroup::trivial(), 5) == std::vector<GElem>{GElem::unit_mark()});
  CHECK(first(OGroup::integers(), 5) == std::vector<GElem>{I(0), I(1), I(-1), I(2), I(-2)});
  const OGroup L = OGroup::lex(OGroup::integers(), OGroup::integers());
  CHECK(first(L, 3) == std::vector<GElem>{P(I(0), I(0)), P(I(1), I(0)), P(I(0), I(1))});
  const auto qs = first(OGroup::rationals(), 7);
  CHECK(qs == std::vector<GElem>{Q(0, 1), Q(1, 1), Q(-1, 1), Q(1, 2), Q(-1, 2), Q(2, 1), Q(-2, 1)});
  for (const auto &g : all_groups()) {
    const auto xs = first(g, 300);
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = i + 1; j < xs.size(); ++j)
        REQUIRE_FALSE(xs[i] == xs[j]);
  }
}

TEST_CASE("group laws on sampled triples") {
  std::mt19937_64 rng(7);
  for (const auto &g : all_groups()) {
    const auto xs = first(g, 200);
    std::uniform_int_distribution<std::size_t> pick(0, xs.size() - 1);
    for (int k = 0; k < 1000; ++k) {
      const GElem &x = xs[pick(rng)], &y = xs[pick(rng)], &z = xs[pick(rng)];
      REQUIRE(g.op(x, y) == g.op(y, x));
      REQUIRE(g.op(g.op(x, y), z) == g.op(x, g.op(y, z)));
      REQUIRE(g.op(g.inverse(x), x) == g.unit());
      if (g.compare(x, y) <= 0)
        REQUIRE(g.compare(g.op(x, z), g.op(y, z)) <= 0);
      REQUIRE((g.compare(x, y) < 0) == (g.compare(y, x) > 0));
      if (g.compare(x, y) <= 0 && g.compare(y, z) <= 0)
        REQUIRE(g.compare(x, z) <= 0);
      if (g.is_discrete())
        REQUIRE(*g.cover_up(*g.cover_down(x)) == x);
    }
  }
}

TEST_CASE("homs") {
  CHECK(Hom::scale_int(2).apply(I(3)) == I(6));
  const OGroup Z = OGroup::integers();
  CHECK(Hom::unit_map(Z, OGroup::trivial()).apply(I(7)) == GElem::unit_mark());
  const Hom h = Hom::compose(Hom::int_to_rat(), Hom::scale_int(3));
  // The two stages by hand: 2 * 3 = 6, then 6 as a rational.
  const GElem stage1 = Hom::scale_int(3).apply(I(2));
  CHECK(stage1 == I(6));
  CHECK(h.apply(I(2)) == Q(6, 1));
  CHECK(h.apply(I(2)) == Hom::int_to_rat().apply(stage1));
  CHECK_THROWS_AS(Hom::compose(Hom::scale_int(2), Hom::int_to_rat()), TypeMismatch);

  const OGroup L = OGroup::lex(Z, Z);
  CHECK(Hom::inject_first(Z, Z).apply(I(4)) == P(I(4), I(0)));
  CHECK(Hom::project_first(L).apply(P(I(4), I(9))) == I(4));

  for (const Hom &k : {Hom::identity(Z), Hom::scale_int(3), Hom::int_to_rat(),
                       Hom::inject_first(Z, OGroup::rationals()), Hom::project_first(L),
                       Hom::unit_map(L, Z), h}) {
    const auto out = hom_check(k, 1000);
    CHECK_MESSAGE(out.ok, k.describe() << ": " << out.failure);
    CHECK(out.checked >= 1000);
  }
}

TEST_CASE("subgroups") {
  const auto two = Subgroup::int_multiples(2);
  CHECK(two.contains(I(4)));
  CHECK_FALSE(two.contains(I(3)));
  const OGroup L = OGroup::lex(OGroup::integers(), OGroup::integers());
  const auto fz = Subgroup::first_zero(L);
  CHECK(fz.contains(P(I(0), I(5))));
  CHECK_FALSE(fz.contains(P(I(1), I(5))));
  CHECK(Subgroup::int_in_rat().contains(Q(4, 1)));
  CHECK_FALSE(Subgroup::int_in_rat().contains(Q(1, 2)));
  CHECK_THROWS_AS(two.contains(Q(1, 2)), TypeMismatch);

  const std::vector<std::pair<Subgroup, OGroup>> subs{
      {two, OGroup::integers()},
      {Subgroup::int_in_rat(), OGroup::rationals()},
      {fz, L},
      {Subgroup::whole(OGroup::rationals()), OGroup::rationals()}};
  for (const auto &[s, g] : subs) {
    CHECK(s.contains(g.unit()));
    const auto xs = first(g, 60);
    for (const auto &x : xs) {
      if (!s.contains(x))
        continue;
      CHECK(s.contains(g.inverse(x)));
      for (const auto &y : xs)
        if (s.contains(y))
          CHECK(s.contains(g.op(x, y)));
    }
  }
}

TEST_CASE("subgroup carriers") {
  const OGroup L = OGroup::lex(OGroup::integers(), OGroup::rationals());
  const std::vector<Subgroup> subs{Subgroup::int_multiples(3), Subgroup::int_in_rat(),
                                   Subgroup::first_zero(L), Subgroup::whole(L)};
  for (const auto &s : subs) {
    const Hom in = Hom::include(s);
    const Hom out = Hom::restrict(s);
    CHECK(in.source() == s.carrier());
    CHECK(out.target() == s.carrier());
    CHECK(hom_check(in, 200).ok);
    for (const auto &x : first(s.carrier(), 40)) {
      CHECK(s.contains(in.apply(x)));
      CHECK(out.apply(in.apply(x)) == x);
    }
    for (const auto &y : first(s.ambient(), 40))
      if (s.contains(y))
        CHECK(in.apply(out.apply(y)) == y);
      else
        CHECK_THROWS_AS(out.apply(y), InvalidElement);
  }
  CHECK(Hom::include(Subgroup::int_multiples(3)).apply(I(-2)) == I(-6));
  CHECK(Hom::restrict(Subgroup::first_zero(L)).apply(P(I(0), Q(1, 2))) == Q(1, 2));
  CHECK_FALSE(Hom::include(Subgroup::int_multiples(2)) == Hom::include(Subgroup::int_multiples(3)));
}

TEST_CASE("element text") {
  const OGroup L = OGroup::lex(OGroup::integers(), OGroup::rationals());
  CHECK(format_elem(P(I(1), Q(2, 3))) == "(1,2/3)");
  CHECK(L.parse_elem("(1,2/3)") == P(I(1), Q(2, 3)));
  CHECK(OGroup::rationals().parse_elem("-1/2") == Q(-1, 2));
  CHECK(OGroup::rationals().parse_elem("3") == Q(3, 1));
  CHECK(OGroup::trivial().parse_elem("e") == GElem::unit_mark());
  CHECK_THROWS(OGroup::integers().parse_elem("1/2"));
  CHECK_THROWS(L.parse_elem("(1,2"));
  for (const auto &x : first(L, 50))
    CHECK(L.parse_elem(format_elem(x)) == x);
}
