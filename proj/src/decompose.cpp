#include "layerlat/decompose.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "layerlat/errors.hpp"
#include "layerlat/oracle.hpp"

namespace layerlat {

namespace {

[[noreturn]] void reject(const AxiomVerdict &v) {
  const auto failures = v.report.failures();
  const ClauseResult &f = failures.front();
  const std::string msg = f.clause + ": " + f.detail;
  if (f.clause == "involutivity")
    throw NotInvolutive(msg);
  if (f.clause == "odd or even")
    throw NotOddOrEven(msg);
  throw AxiomFailure(msg);
}

std::string idx(std::size_t i) { return std::to_string(i); }

} // namespace

DecompositionResult decompose_table(const CayleyTable &t) {
  const AxiomVerdict verdict = check_flea_axioms(t);
  if (!verdict.type)
    reject(verdict);
  const std::size_t n = t.n;
  auto res = [&](std::size_t x, std::size_t z) { return brute_residuum(t, x, z); };
  auto neg = [&](std::size_t x) { return res(x, t.falsum); };

  // The skeleton: positive idempotents of the form x -> x.
  std::set<std::size_t> skel;
  std::vector<std::size_t> layer_of(n);
  for (std::size_t x = 0; x < n; ++x) {
    layer_of[x] = res(x, x);
    skel.insert(layer_of[x]);
  }
  const std::vector<std::size_t> kappa(skel.begin(), skel.end());
  if (kappa.front() != t.unit)
    throw AxiomFailure("least element of the skeleton is " + idx(kappa.front()) +
                       ", not t = " + idx(t.unit));

  const OGroup e = OGroup::trivial();
  std::vector<Layer> layers;
  std::vector<Hom> steps;
  std::vector<ChainElement> assignment(n);
  for (std::size_t k = 0; k < kappa.size(); ++k) {
    const std::size_t u = kappa[k];
    if (t.mul(u, u) != u)
      throw AxiomFailure("skeleton element " + idx(u) + " is not idempotent");
    LayerClass cls;
    if (u == t.unit) {
      if (*verdict.type == BunchType::Odd)
        cls = LayerClass::O;
      else
        cls = *verdict.type == BunchType::EvenIdemF ? LayerClass::I : LayerClass::J;
    } else {
      const std::size_t nu = neg(u);
      cls = t.mul(nu, nu) == nu ? LayerClass::I : LayerClass::J;
    }

    std::vector<std::size_t> L;
    for (std::size_t x = 0; x < n; ++x)
      if (layer_of[x] == u)
        L.push_back(x);
    // H_u: the u-invertible elements; their dotted copies are x * ~u.
    std::vector<std::size_t> H;
    std::set<std::size_t> Hdot;
    for (std::size_t x : L)
      if (t.mul(x, res(x, u)) == u)
        H.push_back(x);
    if (cls == LayerClass::I)
      for (std::size_t x : H)
        Hdot.insert(t.mul(x, neg(u)));
    std::vector<std::size_t> G;
    for (std::size_t x : L)
      if (!Hdot.count(x))
        G.push_back(x);
    if (G != std::vector<std::size_t>{u})
      throw AxiomFailure("layer group of " + idx(u) + " has " + idx(G.size()) +
                         " elements; a finite o-group must be trivial");
    // The layer product ((xy -> u) -> u) and inverse x -> u on G_u = {u}.
    if (res(res(t.mul(u, u), u), u) != u || res(u, u) != u)
      throw AxiomFailure("layer operation at " + idx(u) + " does not collapse to u");
    if (cls == LayerClass::J)
      throw AxiomFailure("layer " + idx(u) + " falls in J but its group is trivial");
    if (cls == LayerClass::I && (Hdot.size() != 1 || *Hdot.begin() == u))
      throw AxiomFailure("layer " + idx(u) + " lacks a single dotted copy of its unit");
    if (cls != LayerClass::I && L.size() != 1)
      throw AxiomFailure("layer " + idx(u) + " outside I has " + idx(L.size()) + " elements");

    std::optional<Subgroup> h;
    if (cls == LayerClass::I)
      h = Subgroup::whole(e);
    layers.push_back(Layer{k == 0 ? "t" : "u" + std::to_string(k), cls, e, h});
    if (k > 0) {
      // The transition from the layer below is x |-> u * x.
      if (t.mul(u, kappa[k - 1]) != u)
        throw AxiomFailure("transition into " + idx(u) + " does not hit its unit");
      steps.push_back(Hom::unit_map(e, e));
    }
    for (std::size_t x : L)
      assignment[x] = ChainElement{k, GElem::unit_mark(), x != u};
  }

  Bunch b(std::move(layers), std::move(steps));
  const Report r = validate(b);
  if (!r.ok())
    throw AxiomFailure("decomposed bunch fails " + r.failures().front().clause);
  return {std::move(b), std::move(assignment)};
}

RoundTrip roundtrip_table(const CayleyTable &t) {
  RoundTrip rt{decompose_table(t), {}, 0};
  const Chain c(rt.decomposition.bunch);
  const Tabulation back = tabulate(c);
  const auto &assign = rt.decomposition.layer_assignment;
  if (back.table.n != t.n)
    throw RoundTripMismatch("reconstruction has " + idx(back.table.n) + " elements, table has " +
                            idx(t.n));
  rt.image.resize(t.n);
  for (std::size_t i = 0; i < t.n; ++i) {
    const auto it = std::find(back.elements.begin(), back.elements.end(), assign[i]);
    if (it == back.elements.end())
      throw RoundTripMismatch("element " + idx(i) + " maps outside the reconstruction");
    rt.image[i] = static_cast<std::size_t>(it - back.elements.begin());
    if (i > 0 && rt.image[i] <= rt.image[i - 1])
      throw RoundTripMismatch("order not preserved at " + idx(i - 1) + " < " + idx(i));
  }
  if (rt.image[t.unit] != back.table.unit)
    throw RoundTripMismatch("unit not preserved");
  if (rt.image[t.falsum] != back.table.falsum)
    throw RoundTripMismatch("falsum not preserved");
  for (std::size_t i = 0; i < t.n; ++i)
    for (std::size_t j = 0; j < t.n; ++j) {
      ++rt.cells_compared;
      if (rt.image[t.mul(i, j)] != back.table.mul(rt.image[i], rt.image[j]))
        throw RoundTripMismatch("cell (" + idx(i) + "," + idx(j) + "): table gives " +
                                idx(t.mul(i, j)) + ", reconstruction gives " +
                                c.format(back.elements[back.table.mul(rt.image[i], rt.image[j])]));
    }
  return rt;
}

Report recover_bunch_samples(const Chain &c, std::size_t samples) {
  const Bunch &b = c.bunch();
  const bool finite = c.size().has_value();
  const auto xs = finite ? c.first_elements(*c.size()) : c.first_elements(samples);
  const Method m = finite ? Method::Proved : Method::Tested;

  ClauseResult layer{"x -> x is the layer unit", true, m, 0, {}};
  ClauseResult inv{"u-invertible elements form G_u", true, m, 0, {}};
  ClauseResult trans{"idempotents realize transitions", true, m, 0, {}};
  ClauseResult dots{"dotted copies are x * ~u", true, m, 0, {}};
  auto fail = [&](ClauseResult &r, const ChainElement &x, const std::string &why) {
    if (r.passed) {
      r.passed = false;
      r.detail = why + " at x=" + c.format(x);
    }
  };

  for (const auto &x : xs) {
    const std::size_t u = x.layer;
    const ChainElement U{u, b.group(u).unit(), false};
    const ChainElement notU = c.negate(U);

    ++layer.checked;
    if (!(c.residuum(x, x) == U))
      fail(layer, x, "x -> x = " + c.format(c.residuum(x, x)));

    ++inv.checked;
    const bool invertible = c.mul(x, c.residuum(x, U)) == U;
    const bool member = !x.dotted && (b.class_of(u) != LayerClass::I || b.in_subgroup(u, x.g));
    if (invertible != member)
      fail(inv, x, invertible ? "dotted or non-H element is u-invertible"
                              : "element of G_u is not u-invertible");
    if (b.class_of(u) == LayerClass::I) {
      const bool drops = c.less(c.mul(x, notU), x);
      if (drops != (!x.dotted && b.in_subgroup(u, x.g)))
        fail(inv, x, "x * ~u < x disagrees with membership in H_u");
    }

    for (std::size_t v = u; v < b.size(); ++v) {
      ++trans.checked;
      const ChainElement V{v, b.group(v).unit(), false};
      const ChainElement expect =
          v == u ? x : ChainElement{v, b.transition(u, v).apply(x.g), false};
      if (!(c.mul(V, x) == expect))
        fail(trans, x, "multiplying by the unit of " + b.layer(v).name + " gives " +
                           c.format(c.mul(V, x)));
    }

    if (x.dotted) {
      ++dots.checked;
      const ChainElement orig{u, x.g, false};
      if (!(c.mul(orig, notU) == x) || !(c.zeta(u, x) == x.g))
        fail(dots, x, "original times ~u gives " + c.format(c.mul(orig, notU)));
    }
  }

  Report r;
  r.add(layer);
  r.add(inv);
  r.add(trans);
  r.add(dots);
  return r;
}

} // namespace layerlat
