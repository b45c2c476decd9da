#include "layerlat/standardize.hpp"

#include <algorithm>
#include <sstream>

#include "layerlat/errors.hpp"

namespace layerlat {

namespace {

// First placed element not below x.
std::vector<Placed>::const_iterator lower(const Chain &c, const std::vector<Placed> &v,
                                          const ChainElement &x) {
  return std::lower_bound(v.begin(), v.end(), x,
                          [&](const Placed &p, const ChainElement &y) { return c.less(p.x, y); });
}

} // namespace

std::optional<Rational> RationalPlacement::find(const Chain &c, const ChainElement &x) const {
  const auto it = lower(c, pairs_, x);
  if (it != pairs_.end() && it->x == x)
    return it->q;
  return std::nullopt;
}

Rational RationalPlacement::floor(const Chain &c, const ChainElement &x) const {
  auto it = lower(c, pairs_, x);
  if (it != pairs_.end() && it->x == x)
    return it->q;
  if (it == pairs_.begin())
    return Rational(0);
  return std::prev(it)->q;
}

bool RationalPlacement::place_midpoint(const Chain &c, const ChainElement &x) {
  const auto it = lower(c, pairs_, x);
  if (it == pairs_.end() || it == pairs_.begin() || it->x == x)
    return false;
  const Rational q = (std::prev(it)->q + it->q) / 2;
  pairs_.insert(it, Placed{x, q});
  return true;
}

void RationalPlacement::pin(const ChainElement &x, Rational q) {
  pairs_.push_back(Placed{x, std::move(q)});
}

RationalPlacement cantor_map(const Chain &c, std::size_t prefix) {
  const auto bounds = c.bounds();
  if (!bounds)
    throw Unbounded("the greatest layer is not an I-layer with a trivial group");
  if (c.is_trivial())
    throw InvalidElement("a one-element chain cannot be placed with 0 != 1");
  RationalPlacement p;
  p.pin(bounds->bottom, Rational(0));
  p.pin(bounds->top, Rational(1));
  const auto total = c.size();
  auto s = c.elements();
  while (p.size() < prefix && (!total || p.size() < *total)) {
    auto x = s.next();
    if (!x)
      break;
    p.place_midpoint(c, *x);
  }
  return p;
}

RationalPlacement extend_products(const Chain &c, const RationalPlacement &p, std::size_t depth) {
  RationalPlacement out = p;
  const auto &base = p.pairs();
  std::size_t added = 0;
  for (std::size_t i = 0; i < base.size() && added < depth; ++i)
    for (std::size_t j = i; j < base.size() && added < depth; ++j)
      if (out.place_midpoint(c, c.mul(base[i].x, base[j].x)))
        ++added;
  return out;
}

Rational sup_extend(const Chain &c, const RationalPlacement &p, const Rational &a,
                    const Rational &b, std::size_t depth) {
  const RationalPlacement ext = extend_products(c, p, depth);
  Rational best(0);
  for (const auto &x : ext.pairs()) {
    if (!(x.q < a))
      break;
    for (const auto &y : ext.pairs()) {
      if (!(y.q < b))
        break;
      const Rational v = ext.floor(c, c.mul(x.x, y.x));
      if (v > best)
        best = v;
    }
  }
  return best;
}

std::string placement_csv(const Chain &c, const RationalPlacement &p) {
  std::ostringstream os;
  for (const auto &e : p.pairs()) {
    const std::string text = c.format(e.x);
    if (text.find(',') != std::string::npos)
      os << '"' << text << '"';
    else
      os << text;
    os << ',' << numerator(e.q) << ',' << denominator(e.q) << '\n';
  }
  return os.str();
}

} // namespace layerlat
