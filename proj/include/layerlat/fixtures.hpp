#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "layerlat/bunch.hpp"

namespace layerlat::fixtures {

/// Three-element odd Sugihara chain: t in O, u in I, both groups trivial.
Bunch s3();
/// t in O over Int, u in I trivial on top: a bounded chain.
Bunch zb();
/// One J-layer over Int: the even chain of the integers with f = -1.
Bunch ze();
/// t in O over Int, u in I over Int with H = Int, identity step.
Bunch lz();
/// As lz, but H_u = 2Z and the step doubles.
Bunch lz2();

/// Odd bunch with `k` trivial I-layers above t: the (2k+1)-element odd chain.
Bunch odd_sugihara(std::size_t k);
/// Even bunch of `k` >= 1 trivial I-layers: the 2k-element even chain.
Bunch even_sugihara(std::size_t k);

struct RandomBunchOptions {
  std::size_t max_layers = 4;
  bool odd_only = false;
  bool allow_j = true;
};

/// Rejection-samples a bunch that passes validate().
Bunch random_bunch(std::mt19937_64 &rng, const RandomBunchOptions &opts = {});

/// Every hom the generator may place between two groups.
std::vector<Hom> candidate_homs(const OGroup &source, const OGroup &target);

} // namespace layerlat::fixtures
