#pragma once

// Brute-force reference computations used by the tests. Nothing here calls
// the library's own decision procedures.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace brute {

/// max{v in [lo, hi] : x + v <= z} over the integers.
inline std::optional<std::int64_t> int_residuum(std::int64_t x, std::int64_t z, std::int64_t lo,
                                                std::int64_t hi) {
  std::optional<std::int64_t> best;
  for (std::int64_t v = lo; v <= hi; ++v)
    if (x + v <= z)
      best = v;
  return best;
}

/// Residuum over a window of the integers with products clamped into it,
/// the semantics of a clipped table: max{v : clamp(x + v) <= z}.
inline std::optional<std::int64_t> clipped_residuum(std::int64_t x, std::int64_t z,
                                                    std::int64_t lo, std::int64_t hi) {
  std::optional<std::int64_t> best;
  for (std::int64_t v = lo; v <= hi; ++v) {
    const std::int64_t p = std::clamp(x + v, lo, hi);
    if (p <= z)
      best = v;
  }
  return best;
}

using Table = std::vector<std::vector<std::size_t>>;

/// Direct check of the axioms of an involutive FL_e-chain on {0..n-1} with
/// the given unit and falsum.
inline bool is_involutive_chain(const Table &m, std::size_t unit, std::size_t f) {
  const std::size_t n = m.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (m[unit][x] != x)
      return false;
    for (std::size_t y = 0; y < n; ++y) {
      if (m[x][y] != m[y][x])
        return false;
      for (std::size_t z = 0; z < n; ++z) {
        if (m[m[x][y]][z] != m[x][m[y][z]])
          return false;
        if (y <= z && m[x][y] > m[x][z])
          return false;
      }
    }
  }
  // Residuation: {v : x*v <= z} has a greatest element and is a down-set.
  auto res = [&](std::size_t x, std::size_t z) -> std::optional<std::size_t> {
    std::optional<std::size_t> best;
    for (std::size_t v = 0; v < n; ++v)
      if (m[x][v] <= z)
        best = v;
    return best;
  };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t z = 0; z < n; ++z) {
      const auto r = res(x, z);
      if (!r)
        return false;
      for (std::size_t v = 0; v < n; ++v)
        if ((m[x][v] <= z) != (v <= *r))
          return false;
    }
  for (std::size_t x = 0; x < n; ++x)
    if (*res(*res(x, f), f) != x)
      return false;
  return true;
}

struct Found {
  Table product;
  std::size_t unit;
  std::size_t falsum;
};

/// All odd (f = t) or even (f just below t) involutive chains on n elements
/// by trying every commutative table with the unit row in place. Only
/// feasible for n <= 4.
inline std::vector<Found> naive_chains(std::size_t n) {
  std::vector<Found> out;
  for (std::size_t unit = 0; unit < n; ++unit) {
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        if (i != unit && j != unit)
          free.emplace_back(i, j);
    Table m(n, std::vector<std::size_t>(n, 0));
    for (std::size_t j = 0; j < n; ++j)
      m[unit][j] = m[j][unit] = j;
    std::function<void(std::size_t)> go = [&](std::size_t k) {
      if (k == free.size()) {
        for (std::size_t f : {unit, unit - 1}) {
          if (f >= n || (f != unit && unit == 0))
            continue;
          if (is_involutive_chain(m, unit, f))
            out.push_back({m, unit, f});
        }
        return;
      }
      const auto [i, j] = free[k];
      for (std::size_t v = 0; v < n; ++v) {
        m[i][j] = m[j][i] = v;
        go(k + 1);
      }
    };
    go(0);
  }
  return out;
}

} // namespace brute
