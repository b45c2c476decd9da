#include "layerlat/laws.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <random>

namespace layerlat {

std::vector<ChainElement> sample_pool(const Chain &c, std::size_t pool) {
  std::vector<ChainElement> out = c.first_elements(pool);
  const std::size_t n = out.size();
  for (std::size_t i = 0; i < n; ++i) {
    ChainElement y = c.negate(out[i]);
    if (std::find(out.begin(), out.end(), y) == out.end())
      out.push_back(std::move(y));
  }
  return out;
}

namespace {

using Triple = std::array<const ChainElement *, 3>;

struct TripleSource {
  const std::vector<ChainElement> &pool;
  bool exhaustive;
  std::size_t count;
  std::mt19937_64 rng;

  void for_each(const std::function<bool(const Triple &)> &f) {
    const std::size_t n = pool.size();
    if (exhaustive) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k)
            if (!f({&pool[i], &pool[j], &pool[k]}))
              return;
      return;
    }
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t s = 0; s < count; ++s)
      if (!f({&pool[pick(rng)], &pool[pick(rng)], &pool[pick(rng)]}))
        return;
  }
};

} // namespace

Report check_chain_laws(const Chain &c, const LawConfig &cfg) {
  Report report;
  const auto finite = c.size();
  const bool exhaustive = finite && (*finite) * (*finite) * (*finite) <= cfg.triples;
  const std::vector<ChainElement> pool =
      exhaustive ? c.first_elements(*finite) : sample_pool(c, cfg.pool);
  const Method method = exhaustive ? Method::Proved : Method::Tested;

  auto run = [&](const std::string &name, std::uint64_t salt,
                 const std::function<std::string(const ChainElement &, const ChainElement &,
                                                 const ChainElement &)> &law) {
    ClauseResult r{name, true, method, 0, {}};
    TripleSource src{pool, exhaustive, cfg.triples, std::mt19937_64(cfg.seed ^ salt)};
    src.for_each([&](const Triple &t) {
      ++r.checked;
      std::string failure = law(*t[0], *t[1], *t[2]);
      if (failure.empty())
        return true;
      r.passed = false;
      r.detail = failure + " at x=" + c.format(*t[0]) + ", y=" + c.format(*t[1]) +
                 ", z=" + c.format(*t[2]);
      return false;
    });
    report.add(std::move(r));
  };

  auto le = [&](const ChainElement &a, const ChainElement &b) { return c.compare(a, b) <= 0; };

  run("closure", 1, [&](const auto &x, const auto &y, const auto &) -> std::string {
    if (!c.contains(c.mul(x, y)))
      return "product leaves the carrier";
    if (!c.contains(c.negate(x)))
      return "complement leaves the carrier";
    return {};
  });
  run("total order", 2, [&](const auto &x, const auto &y, const auto &z) -> std::string {
    const auto xy = c.compare(x, y);
    if (xy != (0 <=> c.compare(y, x)))
      return "antisymmetry";
    if ((xy == 0) != (x == y))
      return "equality is not identity";
    if (le(x, y) && le(y, z) && !le(x, z))
      return "transitivity";
    return {};
  });
  run("commutativity", 3, [&](const auto &x, const auto &y, const auto &) -> std::string {
    return c.mul(x, y) == c.mul(y, x) ? "" : "xy != yx";
  });
  run("associativity", 4, [&](const auto &x, const auto &y, const auto &z) -> std::string {
    return c.mul(c.mul(x, y), z) == c.mul(x, c.mul(y, z)) ? "" : "(xy)z != x(yz)";
  });
  run("unit", 5, [&](const auto &x, const auto &, const auto &) -> std::string {
    return c.mul(c.unit(), x) == x && c.mul(x, c.unit()) == x ? "" : "tx != x";
  });
  run("monotonicity", 6, [&](const auto &x, const auto &y, const auto &z) -> std::string {
    if (le(x, y) && !le(c.mul(x, z), c.mul(y, z)))
      return "x <= y but xz > yz";
    return {};
  });
  run("adjointness", 7, [&](const auto &x, const auto &v, const auto &z) -> std::string {
    if (le(c.mul(x, v), z) != le(v, c.residuum(x, z)))
      return "xv <= z disagrees with v <= x->z";
    return {};
  });
  run("involution", 8, [&](const auto &x, const auto &, const auto &) -> std::string {
    return c.negate(c.negate(x)) == x ? "" : "~~x != x";
  });

  {
    const ChainElement t = c.unit();
    const ChainElement f = c.falsum();
    ClauseResult r{"constants", true, method, 0, {}};
    switch (c.bunch().type()) {
    case BunchType::Odd:
      r.passed = f == t;
      if (!r.passed)
        r.detail = "odd chain with f != t";
      break;
    case BunchType::EvenNonIdemF:
    case BunchType::EvenIdemF: {
      const bool idem = c.mul(f, f) == f;
      if (!c.less(f, t)) {
        r.passed = false;
        r.detail = "even chain with f not below t";
      } else if (idem != (c.bunch().type() == BunchType::EvenIdemF)) {
        r.passed = false;
        r.detail = "idempotency of f disagrees with the type";
      }
      for (const auto &x : pool) {
        ++r.checked;
        if (r.passed && c.less(f, x) && c.less(x, t)) {
          r.passed = false;
          r.detail = c.format(x) + " lies strictly between f and t";
        }
      }
      break;
    }
    }
    report.add(std::move(r));
  }
  return report;
}

} // namespace layerlat
