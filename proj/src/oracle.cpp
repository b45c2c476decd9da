#include "layerlat/oracle.hpp"

#include <algorithm>
#include <string>

#include "layerlat/errors.hpp"

namespace layerlat {

namespace {

std::string cell(std::size_t x, std::size_t y) {
  return std::to_string(x) + "*" + std::to_string(y);
}

void fail(ClauseResult &r, std::string detail) {
  if (r.passed) {
    r.passed = false;
    r.detail = std::move(detail);
  }
}

} // namespace

AxiomVerdict check_flea_axioms(const CayleyTable &t) {
  AxiomVerdict v;
  Report &rep = v.report;
  {
    ClauseResult r{"shape", true, Method::Proved, 1, {}};
    try {
      check_shape(t);
    } catch (const ParseError &e) {
      fail(r, e.what());
    }
    rep.add(r);
    if (!r.passed)
      return v;
  }
  const std::size_t n = t.n;
  rep.add({"total order", true, Method::Proved, n, "carrier listed in ascending order"});

  ClauseResult comm{"commutativity", true, Method::Proved, 0, {}};
  ClauseResult unit{"unit", true, Method::Proved, 0, {}};
  ClauseResult mono{"monotonicity", true, Method::Proved, 0, {}};
  for (std::size_t x = 0; x < n; ++x) {
    ++unit.checked;
    if (t.mul(t.unit, x) != x)
      fail(unit, "t*" + std::to_string(x) + " = " + std::to_string(t.mul(t.unit, x)));
    for (std::size_t y = 0; y < n; ++y) {
      ++comm.checked;
      if (t.mul(x, y) != t.mul(y, x))
        fail(comm, cell(x, y) + " != " + cell(y, x));
      ++mono.checked;
      if (y + 1 < n && t.mul(x, y) > t.mul(x, y + 1))
        fail(mono, cell(x, y) + " > " + cell(x, y + 1));
    }
  }
  rep.add(comm);
  rep.add(unit);
  rep.add(mono);

  ClauseResult assoc{"associativity", true, Method::Proved, 0, {}};
  for (std::size_t x = 0; x < n && assoc.passed; ++x)
    for (std::size_t y = 0; y < n && assoc.passed; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        ++assoc.checked;
        if (t.mul(t.mul(x, y), z) != t.mul(x, t.mul(y, z))) {
          fail(assoc, "(" + cell(x, y) + ")*" + std::to_string(z) + " differs at x=" +
                          std::to_string(x) + ", y=" + std::to_string(y) +
                          ", z=" + std::to_string(z));
          break;
        }
      }
  rep.add(assoc);

  ClauseResult resid{"residuation", true, Method::Proved, 0, {}};
  std::vector<std::vector<std::size_t>> res(n, std::vector<std::size_t>(n, 0));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t z = 0; z < n; ++z) {
      ++resid.checked;
      try {
        res[x][z] = brute_residuum(t, x, z);
      } catch (const NotResiduated &) {
        fail(resid, "no v with " + std::to_string(x) + "*v <= " + std::to_string(z));
        continue;
      }
      for (std::size_t w = 0; w < n; ++w)
        if ((t.mul(x, w) <= z) != (w <= res[x][z]))
          fail(resid, "{v : " + std::to_string(x) + "*v <= " + std::to_string(z) +
                          "} is not a down-set at v=" + std::to_string(w));
    }
  rep.add(resid);
  if (!resid.passed)
    return v;

  ClauseResult invol{"involutivity", true, Method::Proved, 0, {}};
  for (std::size_t x = 0; x < n; ++x) {
    ++invol.checked;
    const std::size_t nx = res[x][t.falsum];
    if (res[nx][t.falsum] != x)
      fail(invol, "~~" + std::to_string(x) + " = " + std::to_string(res[nx][t.falsum]));
  }
  rep.add(invol);

  ClauseResult kind{"odd or even", true, Method::Proved, 1, {}};
  if (t.falsum == t.unit) {
    kind.detail = "odd";
    if (rep.ok())
      v.type = BunchType::Odd;
  } else if (t.falsum + 1 == t.unit) {
    const bool idem = t.mul(t.falsum, t.falsum) == t.falsum;
    kind.detail = idem ? "even, f idempotent" : "even, f not idempotent";
    if (rep.ok())
      v.type = idem ? BunchType::EvenIdemF : BunchType::EvenNonIdemF;
  } else {
    fail(kind, "f = " + std::to_string(t.falsum) + " is neither t nor its lower cover " +
                   "(t = " + std::to_string(t.unit) + ")");
  }
  rep.add(kind);
  if (!rep.ok())
    v.type.reset();
  return v;
}

namespace {

constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

class TableSearch {
public:
  TableSearch(std::size_t n, std::size_t unit, std::size_t falsum)
      : n_(n), unit_(unit), falsum_(falsum), tab_(n, std::vector<std::size_t>(n, kUnset)) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        cells_.emplace_back(i, j);
  }

  void run(std::vector<CayleyTable> &out) {
    out_ = &out;
    assign(0);
  }

private:
  std::size_t get(std::size_t i, std::size_t j) const { return tab_[i][j]; }

  void set(std::size_t i, std::size_t j, std::size_t v) { tab_[i][j] = tab_[j][i] = v; }

  // Forced values: the unit row, and the bottom row since 0 is absorbing in
  // any residuated chain with a least element.
  std::optional<std::size_t> forced(std::size_t i, std::size_t j) const {
    if (i == unit_)
      return j;
    if (j == unit_)
      return i;
    if (i == 0 || j == 0)
      return 0;
    return std::nullopt;
  }

  bool associative_around(std::size_t i, std::size_t j) const {
    const std::size_t p = get(i, j);
    for (std::size_t z = 0; z < n_; ++z) {
      const std::size_t pz = get(p, z);
      if (pz == kUnset)
        continue;
      const std::size_t jz = get(j, z);
      if (jz != kUnset && get(i, jz) != kUnset && get(i, jz) != pz)
        return false;
      const std::size_t iz = get(i, z);
      if (iz != kUnset && get(j, iz) != kUnset && get(j, iz) != pz)
        return false;
    }
    return true;
  }

  void assign(std::size_t k) {
    if (k == cells_.size()) {
      CayleyTable t{n_, tab_, unit_, falsum_};
      if (check_flea_axioms(t).type)
        out_->push_back(std::move(t));
      return;
    }
    const auto [i, j] = cells_[k];
    std::size_t lo = 0;
    std::size_t hi = n_ - 1;
    if (i > 0)
      lo = std::max(lo, get(i - 1, j));
    if (j > i)
      lo = std::max(lo, get(i, j - 1));
    // An involutive finite chain has ~x = n-1-x, so x*(n-1-x) <= f < x*(n-x).
    if (i + j == n_ - 1)
      hi = std::min(hi, falsum_);
    if (i + j == n_)
      lo = std::max(lo, falsum_ + 1);
    if (const auto f = forced(i, j)) {
      lo = std::max(lo, *f);
      hi = std::min(hi, *f);
    }
    // Monotonicity against the unit row, which is already determined.
    if (i <= unit_)
      hi = std::min(hi, j);
    else
      lo = std::max(lo, j);
    if (j <= unit_)
      hi = std::min(hi, i);
    else
      lo = std::max(lo, i);
    for (std::size_t v = lo; v <= hi && v < n_; ++v) {
      set(i, j, v);
      if (associative_around(i, j))
        assign(k + 1);
    }
    set(i, j, kUnset);
  }

  std::size_t n_;
  std::size_t unit_;
  std::size_t falsum_;
  std::vector<std::vector<std::size_t>> tab_;
  std::vector<std::pair<std::size_t, std::size_t>> cells_;
  std::vector<CayleyTable> *out_ = nullptr;
};

} // namespace

std::vector<CayleyTable> enumerate_finite_chains(std::size_t n, std::size_t bound) {
  if (n == 0)
    throw BoundExceeded("chain size must be at least 1");
  if (n > bound)
    throw BoundExceeded("size " + std::to_string(n) + " exceeds the enumeration bound " +
                        std::to_string(bound));
  std::vector<CayleyTable> out;
  for (std::size_t unit = 0; unit < n; ++unit) {
    TableSearch(n, unit, unit).run(out);
    if (unit > 0)
      TableSearch(n, unit, unit - 1).run(out);
  }
  return out;
}

std::vector<Bunch> finite_bunches(std::size_t n) {
  std::vector<Bunch> out;
  const OGroup e = OGroup::trivial();
  for (std::size_t k = 1; k <= n; ++k) {
    std::size_t assignments = 1;
    for (std::size_t i = 0; i < k; ++i)
      assignments *= 3;
    for (std::size_t code = 0; code < assignments; ++code) {
      std::vector<Layer> layers;
      std::vector<Hom> steps;
      std::size_t size = 0;
      std::size_t c = code;
      for (std::size_t i = 0; i < k; ++i, c /= 3) {
        const auto cls = static_cast<LayerClass>(c % 3);
        std::optional<Subgroup> h;
        if (cls == LayerClass::I)
          h = Subgroup::whole(e);
        layers.push_back(Layer{i == 0 ? "t" : "u" + std::to_string(i), cls, e, h});
        if (i > 0)
          steps.push_back(Hom::unit_map(e, e));
        size += cls == LayerClass::I ? 2 : 1;
      }
      if (size != n)
        continue;
      Bunch b(std::move(layers), std::move(steps));
      if (validate(b).ok())
        out.push_back(std::move(b));
    }
  }
  return out;
}

std::vector<CayleyTable> reconstructed_finite_tables(std::size_t n) {
  std::vector<CayleyTable> out;
  for (auto &b : finite_bunches(n))
    out.push_back(tabulate(Chain(std::move(b))).table);
  return out;
}

} // namespace layerlat
