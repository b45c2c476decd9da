#include "layerlat/fixtures.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace layerlat::fixtures {

namespace {

const OGroup kTrivial = OGroup::trivial();
const OGroup kInt = OGroup::integers();
const OGroup kRat = OGroup::rationals();

Layer layer(std::string name, LayerClass cls, OGroup g,
            std::optional<Subgroup> h = std::nullopt) {
  if (cls == LayerClass::I && !h)
    h = Subgroup::whole(g);
  return Layer{std::move(name), cls, std::move(g), std::move(h)};
}

std::vector<OGroup> group_pool() {
  return {kTrivial,
          kInt,
          kRat,
          OGroup::lex(kInt, kInt),
          OGroup::lex(kInt, kRat),
          OGroup::lex(kRat, kInt)};
}

std::vector<Hom> basic_homs(const OGroup &s, const OGroup &t) {
  std::vector<Hom> out;
  if (s == t) {
    out.push_back(Hom::identity(s));
    if (s.kind() == OGroup::Kind::Int) {
      out.push_back(Hom::scale_int(2));
      out.push_back(Hom::scale_int(3));
    }
  }
  if (s.kind() == OGroup::Kind::Int && t.kind() == OGroup::Kind::Rat)
    out.push_back(Hom::int_to_rat());
  if (t.kind() == OGroup::Kind::Lex && t.left() == s)
    out.push_back(Hom::inject_first(s, t.right()));
  if (s.kind() == OGroup::Kind::Lex && s.left() == t)
    out.push_back(Hom::project_first(s));
  return out;
}

} // namespace

Bunch s3() {
  return Bunch({layer("t", LayerClass::O, kTrivial), layer("u", LayerClass::I, kTrivial)},
               {Hom::unit_map(kTrivial, kTrivial)});
}

Bunch zb() {
  return Bunch({layer("t", LayerClass::O, kInt), layer("u", LayerClass::I, kTrivial)},
               {Hom::unit_map(kInt, kTrivial)});
}

Bunch ze() { return Bunch({layer("t", LayerClass::J, kInt)}, {}); }

Bunch lz() {
  return Bunch({layer("t", LayerClass::O, kInt), layer("u", LayerClass::I, kInt)},
               {Hom::identity(kInt)});
}

Bunch lz2() {
  return Bunch({layer("t", LayerClass::O, kInt),
                layer("u", LayerClass::I, kInt, Subgroup::int_multiples(2))},
               {Hom::scale_int(2)});
}

Bunch odd_sugihara(std::size_t k) {
  std::vector<Layer> layers{layer("t", LayerClass::O, kTrivial)};
  std::vector<Hom> steps;
  for (std::size_t i = 1; i <= k; ++i) {
    layers.push_back(layer("u" + std::to_string(i), LayerClass::I, kTrivial));
    steps.push_back(Hom::unit_map(kTrivial, kTrivial));
  }
  return Bunch(std::move(layers), std::move(steps));
}

Bunch even_sugihara(std::size_t k) {
  if (k == 0)
    throw std::invalid_argument("even chains need at least one layer");
  std::vector<Layer> layers{layer("t", LayerClass::I, kTrivial)};
  std::vector<Hom> steps;
  for (std::size_t i = 1; i < k; ++i) {
    layers.push_back(layer("u" + std::to_string(i), LayerClass::I, kTrivial));
    steps.push_back(Hom::unit_map(kTrivial, kTrivial));
  }
  return Bunch(std::move(layers), std::move(steps));
}

std::vector<Hom> candidate_homs(const OGroup &source, const OGroup &target) {
  std::vector<Hom> out{Hom::unit_map(source, target)};
  for (auto &h : basic_homs(source, target))
    out.push_back(std::move(h));
  for (const auto &mid : group_pool()) {
    if (mid == source || mid == target)
      continue;
    for (const auto &inner : basic_homs(source, mid))
      for (const auto &outer : basic_homs(mid, target))
        out.push_back(Hom::compose(outer, inner));
  }
  return out;
}

Bunch random_bunch(std::mt19937_64 &rng, const RandomBunchOptions &opts) {
  const auto pool = group_pool();
  const std::vector<OGroup> discrete{kInt, OGroup::lex(kInt, kInt), OGroup::lex(kRat, kInt)};
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  ValidationConfig vcfg;
  vcfg.samples_per_layer = 60;
  vcfg.hom_samples = 60;

  for (int attempt = 0; attempt < 10000; ++attempt) {
    const std::size_t n = 1 + pick(opts.max_layers);
    std::vector<Layer> layers;
    for (std::size_t i = 0; i < n; ++i) {
      LayerClass cls;
      if (i == 0) {
        cls = opts.odd_only ? LayerClass::O
                            : std::array{LayerClass::O, LayerClass::O, LayerClass::J,
                                         LayerClass::I}[pick(4)];
        if (!opts.allow_j && cls == LayerClass::J)
          cls = LayerClass::O;
      } else {
        cls = opts.allow_j && pick(4) == 0 ? LayerClass::J : LayerClass::I;
      }
      OGroup g = cls == LayerClass::J ? discrete[pick(discrete.size())] : pool[pick(pool.size())];
      std::optional<Subgroup> h;
      if (cls == LayerClass::I) {
        std::vector<Subgroup> subs{Subgroup::whole(g)};
        if (g.kind() == OGroup::Kind::Int)
          subs.push_back(Subgroup::int_multiples(2 + static_cast<std::int64_t>(pick(2))));
        if (g.kind() == OGroup::Kind::Rat)
          subs.push_back(Subgroup::int_in_rat());
        if (g.kind() == OGroup::Kind::Lex)
          subs.push_back(Subgroup::first_zero(g));
        h = subs[pick(subs.size())];
      }
      layers.push_back(Layer{"L" + std::to_string(i), cls, std::move(g), std::move(h)});
    }
    layers.front().name = "t";
    std::vector<Hom> steps;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      auto cands = candidate_homs(layers[i].group, layers[i + 1].group);
      // Favour structure-carrying maps over the constant one.
      steps.push_back(cands.size() > 1 && pick(3) != 0 ? cands[1 + pick(cands.size() - 1)]
                                                       : cands[0]);
    }
    Bunch b(std::move(layers), std::move(steps));
    if (validate(b, vcfg).ok())
      return b;
  }
  throw std::runtime_error("random_bunch: no valid bunch found");
}

} // namespace layerlat::fixtures
