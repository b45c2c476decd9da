#include <doctest.h>

#include <algorithm>
#include <random>

#include "brute.hpp"
#include "layerlat/decompose.hpp"
#include "layerlat/errors.hpp"
#include "layerlat/fixtures.hpp"
#include "layerlat/oracle.hpp"

using namespace layerlat;
namespace fx = layerlat::fixtures;

namespace {

// bottom < t < top with top*bottom = bottom, written out by hand.
CayleyTable s3_table() { return {3, {{0, 0, 0}, {0, 1, 2}, {0, 2, 2}}, 1, 1}; }

} // namespace

TEST_CASE("table csv") {
  const CayleyTable t = s3_table();
  CHECK(format_table_csv(t) == "3,1,1\n0,0,0\n0,1,2\n0,2,2\n");
  CHECK(parse_table_csv(format_table_csv(t)) == t);
  CHECK_THROWS_AS(parse_table_csv("3,1,1\n0,0,0\n0,1\n0,2,2\n"), ParseError);
  CHECK_THROWS_AS(parse_table_csv("2,0,0\n0,5\n0,1\n"), ParseError);
  CHECK_THROWS_AS(parse_table_csv("x\n"), ParseError);
}

TEST_CASE("tabulate reproduces the hand-written table") {
  CHECK(tabulate(Chain(fx::s3())).table == s3_table());
  CHECK_THROWS_AS(tabulate(Chain(fx::lz())), InfiniteChain);
}

TEST_CASE("brute residuum") {
  const CayleyTable t = s3_table();
  for (std::size_t z = 0; z < 3; ++z)
    CHECK(brute_residuum(t, t.unit, z) == z);
  CHECK(brute_residuum(t, 2, 0) == 0);

  const Tabulation w = tabulate(Chain(fx::ze()), 7);
  REQUIRE(w.table.n == 7);
  CHECK(w.clipped);
  // Window [-3..3] ascending, so index i holds the integer i - 3.
  for (std::size_t i = 0; i < 7; ++i)
    CHECK(w.elements[i] == ChainElement{0, GElem::integer(static_cast<long>(i) - 3), false});
  const auto expect = brute::clipped_residuum(2, 1, -3, 3);
  REQUIRE(expect);
  CHECK(*expect == -1);
  CHECK(static_cast<long>(brute_residuum(w.table, 5, 4)) - 3 == *expect);
}

TEST_CASE("axiom checker") {
  const auto v = check_flea_axioms(s3_table());
  CHECK(v.report.ok());
  CHECK(v.type == BunchType::Odd);

  CayleyTable bad = s3_table();
  bad.product[2][0] = bad.product[0][2] = 2;
  const auto w = check_flea_axioms(bad);
  CHECK_FALSE(w.type);
  bool witnessed = false;
  for (const auto &f : w.report.failures())
    witnessed |= f.clause == "monotonicity" || f.clause == "residuation";
  CHECK(witnessed);

  const auto one = check_flea_axioms({1, {{0}}, 0, 0});
  CHECK(one.type == BunchType::Odd);

  // Three-element Lukasiewicz chain: involutive but neither odd nor even.
  const CayleyTable luk{3, {{0, 0, 0}, {0, 0, 1}, {0, 1, 2}}, 2, 0};
  const auto l = check_flea_axioms(luk);
  CHECK_FALSE(l.type);
  CHECK_THROWS_AS(decompose_table(luk), NotOddOrEven);

  // Idempotent 3-chain with f = bottom: residuated but not involutive.
  const CayleyTable godel{3, {{0, 0, 0}, {0, 1, 1}, {0, 1, 2}}, 2, 0};
  CHECK_THROWS_AS(decompose_table(godel), NotInvolutive);
  CHECK_THROWS_AS(decompose_table(bad), AxiomFailure);
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_finite_chains(1).size() == 1);
  CHECK(check_flea_axioms(enumerate_finite_chains(1)[0]).type == BunchType::Odd);
  const auto two = enumerate_finite_chains(2);
  REQUIRE(two.size() == 1);
  CHECK(check_flea_axioms(two[0]).type == BunchType::EvenIdemF);
  const auto three = enumerate_finite_chains(3);
  REQUIRE(three.size() == 1);
  CHECK(three[0] == s3_table());
  CHECK_THROWS_AS(enumerate_finite_chains(8), BoundExceeded);
  CHECK_THROWS_AS(enumerate_finite_chains(0), BoundExceeded);
}

TEST_CASE("enumeration agrees with naive search") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto fast = enumerate_finite_chains(n);
    const auto slow = brute::naive_chains(n);
    REQUIRE(fast.size() == slow.size());
    for (const auto &s : slow) {
      const CayleyTable t{n, s.product, s.unit, s.falsum};
      CHECK(std::find(fast.begin(), fast.end(), t) != fast.end());
    }
  }
}

TEST_CASE("enumeration agrees with finite bunches") {
  for (std::size_t n = 1; n <= 7; ++n) {
    auto a = enumerate_finite_chains(n);
    auto b = reconstructed_finite_tables(n);
    CHECK(a.size() == 1);
    CHECK(a == b);
  }
}

TEST_CASE("decompose small tables") {
  const auto d = decompose_table(s3_table());
  CHECK(same_up_to_labels(d.bunch, fx::s3()));
  CHECK(d.layer_assignment ==
        std::vector<ChainElement>{{1, GElem::unit_mark(), true}, {0, GElem::unit_mark(), false},
                                  {1, GElem::unit_mark(), false}});

  const CayleyTable two{2, {{0, 0}, {0, 1}}, 1, 0};
  const auto d2 = decompose_table(two);
  REQUIRE(d2.bunch.size() == 1);
  CHECK(d2.bunch.class_of(0) == LayerClass::I);
  CHECK(d2.bunch.group(0).is_trivial());

  const auto d1 = decompose_table({1, {{0}}, 0, 0});
  REQUIRE(d1.bunch.size() == 1);
  CHECK(d1.bunch.class_of(0) == LayerClass::O);
}

TEST_CASE("round trips") {
  const auto rt = roundtrip_table(s3_table());
  CHECK(rt.image == std::vector<std::size_t>{0, 1, 2});
  CHECK(rt.cells_compared == 9);

  const CayleyTable two{2, {{0, 0}, {0, 1}}, 1, 0};
  const auto rt2 = roundtrip_table(two);
  CHECK(rt2.decomposition.layer_assignment ==
        std::vector<ChainElement>{{0, GElem::unit_mark(), true}, {0, GElem::unit_mark(), false}});

  const CayleyTable five = tabulate(Chain(fx::odd_sugihara(2))).table;
  const auto rt5 = roundtrip_table(five);
  CHECK(rt5.decomposition.bunch.size() == 3);
  CHECK(rt5.decomposition.bunch.class_of(1) == LayerClass::I);
  CHECK(rt5.decomposition.bunch.class_of(2) == LayerClass::I);

  for (std::size_t n = 1; n <= 9; ++n)
    for (const auto &b : finite_bunches(n)) {
      const auto r = roundtrip_table(tabulate(Chain(b)).table);
      CHECK(validate(r.decomposition.bunch).ok());
      CHECK(same_up_to_labels(r.decomposition.bunch, b));
    }
}

TEST_CASE("recover bunch identities") {
  std::vector<Bunch> all{fx::s3(), fx::zb(), fx::ze(), fx::lz(), fx::lz2()};
  std::mt19937_64 rng(9);
  for (int k = 0; k < 6; ++k)
    all.push_back(fx::random_bunch(rng));
  for (const auto &b : all) {
    const Report r = recover_bunch_samples(Chain(b), 1000);
    for (const auto &f : r.failures())
      FAIL_CHECK(f.clause << ": " << f.detail);
  }
  const Report s3 = recover_bunch_samples(Chain(fx::s3()), 10);
  for (const auto &c : s3.clauses())
    CHECK(c.method == Method::Proved);
}
