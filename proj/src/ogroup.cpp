#include "layerlat/ogroup.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include "layerlat/errors.hpp"

namespace layerlat {

namespace {

// Inverse of the Cantor pairing, walking each diagonal with the left index
// descending: 0 -> (0,0), 1 -> (1,0), 2 -> (0,1), 3 -> (2,0), ...
std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t n) {
  auto d = static_cast<std::uint64_t>((std::sqrt(8.0L * n + 1.0L) - 1.0L) / 2.0L);
  while (d * (d + 1) / 2 > n)
    --d;
  while ((d + 1) * (d + 2) / 2 <= n)
    ++d;
  const std::uint64_t k = n - d * (d + 1) / 2;
  return {d - k, k};
}

// Calkin-Wilf sequence, 1-based: 1, 1/2, 2, 1/3, 3/2, 2/3, 3, ...
Rational calkin_wilf(std::uint64_t k) {
  int top = 63;
  while (top > 0 && ((k >> top) & 1U) == 0)
    --top;
  Integer a = 1;
  Integer b = 1;
  for (int bit = top - 1; bit >= 0; --bit) {
    if ((k >> bit) & 1U)
      a = a + b;
    else
      b = a + b;
  }
  return Rational(a, b);
}

std::uint64_t signed_index_magnitude(std::uint64_t n) { return (n + 1) / 2; }

void skip_spaces(std::string_view s, std::size_t &pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
    ++pos;
}

Integer parse_integer_token(std::string_view s, std::size_t &pos) {
  skip_spaces(s, pos);
  const std::size_t start = pos;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+'))
    ++pos;
  const std::size_t digits = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
    ++pos;
  if (pos == digits)
    throw ParseError("offset " + std::to_string(start),
                     "expected an integer in '" + std::string(s) + "'");
  std::string token(s.substr(start, pos - start));
  if (token.front() == '+')
    token.erase(0, 1);
  return Integer(token);
}

} // namespace

// ---------------------------------------------------------------- GElem

GElem GElem::integer(Integer v) {
  GElem e;
  e.value_ = std::move(v);
  return e;
}

GElem GElem::rational(Rational v) {
  GElem e;
  e.value_ = std::move(v);
  return e;
}

GElem GElem::pair(GElem first, GElem second) {
  GElem e;
  e.value_ = Pair{std::move(first), std::move(second)};
  return e;
}

const Integer &GElem::as_integer() const {
  if (const auto *v = std::get_if<Integer>(&value_))
    return *v;
  throw TypeMismatch("element " + format_elem(*this) + " is not an integer");
}

const Rational &GElem::as_rational() const {
  if (const auto *v = std::get_if<Rational>(&value_))
    return *v;
  throw TypeMismatch("element " + format_elem(*this) + " is not a rational");
}

const GElem &GElem::first() const {
  if (const auto *v = std::get_if<Pair>(&value_))
    return (*v)[0];
  throw TypeMismatch("element " + format_elem(*this) + " is not a pair");
}

const GElem &GElem::second() const {
  if (const auto *v = std::get_if<Pair>(&value_))
    return (*v)[1];
  throw TypeMismatch("element " + format_elem(*this) + " is not a pair");
}

bool operator==(const GElem &a, const GElem &b) { return a.value_ == b.value_; }

std::string format_elem(const GElem &x) {
  switch (x.kind()) {
  case GElem::Kind::Unit:
    return "e";
  case GElem::Kind::Int:
    return x.as_integer().str();
  case GElem::Kind::Rat: {
    const Rational &q = x.as_rational();
    return boost::multiprecision::numerator(q).str() + "/" +
           boost::multiprecision::denominator(q).str();
  }
  case GElem::Kind::Pair:
    return "(" + format_elem(x.first()) + "," + format_elem(x.second()) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------- OGroup

OGroup OGroup::integers() {
  OGroup g;
  g.kind_ = Kind::Int;
  return g;
}

OGroup OGroup::rationals() {
  OGroup g;
  g.kind_ = Kind::Rat;
  return g;
}

OGroup OGroup::lex(OGroup left, OGroup right) {
  OGroup g;
  g.kind_ = Kind::Lex;
  g.factors_ = std::make_shared<const std::pair<OGroup, OGroup>>(std::move(left),
                                                                 std::move(right));
  return g;
}

const OGroup &OGroup::left() const {
  if (kind_ != Kind::Lex)
    throw TypeMismatch(describe() + " has no lex factors");
  return factors_->first;
}

const OGroup &OGroup::right() const {
  if (kind_ != Kind::Lex)
    throw TypeMismatch(describe() + " has no lex factors");
  return factors_->second;
}

bool OGroup::is_trivial() const {
  switch (kind_) {
  case Kind::Trivial:
    return true;
  case Kind::Lex:
    return left().is_trivial() && right().is_trivial();
  default:
    return false;
  }
}

bool OGroup::is_discrete() const {
  switch (kind_) {
  case Kind::Trivial:
  case Kind::Rat:
    return false;
  case Kind::Int:
    return true;
  case Kind::Lex:
    return right().is_trivial() ? left().is_discrete() : right().is_discrete();
  }
  return false;
}

std::optional<std::uint64_t> OGroup::size() const {
  return is_trivial() ? std::optional<std::uint64_t>(1) : std::nullopt;
}

bool OGroup::contains(const GElem &x) const {
  switch (kind_) {
  case Kind::Trivial:
    return x.kind() == GElem::Kind::Unit;
  case Kind::Int:
    return x.kind() == GElem::Kind::Int;
  case Kind::Rat:
    return x.kind() == GElem::Kind::Rat;
  case Kind::Lex:
    return x.kind() == GElem::Kind::Pair && left().contains(x.first()) &&
           right().contains(x.second());
  }
  return false;
}

void OGroup::require(const GElem &x) const {
  if (!contains(x))
    throw TypeMismatch("element " + format_elem(x) + " does not belong to " +
                       describe());
}

std::strong_ordering OGroup::compare(const GElem &x, const GElem &y) const {
  require(x);
  require(y);
  switch (kind_) {
  case Kind::Trivial:
    return std::strong_ordering::equal;
  case Kind::Int: {
    const int c = x.as_integer().compare(y.as_integer());
    return c <=> 0;
  }
  case Kind::Rat: {
    const int c = x.as_rational().compare(y.as_rational());
    return c <=> 0;
  }
  case Kind::Lex: {
    const auto c = left().compare(x.first(), y.first());
    if (c != 0)
      return c;
    return right().compare(x.second(), y.second());
  }
  }
  return std::strong_ordering::equal;
}

GElem OGroup::op(const GElem &x, const GElem &y) const {
  require(x);
  require(y);
  switch (kind_) {
  case Kind::Trivial:
    return GElem::unit_mark();
  case Kind::Int:
    return GElem::integer(x.as_integer() + y.as_integer());
  case Kind::Rat:
    return GElem::rational(x.as_rational() + y.as_rational());
  case Kind::Lex:
    return GElem::pair(left().op(x.first(), y.first()),
                       right().op(x.second(), y.second()));
  }
  return GElem::unit_mark();
}

GElem OGroup::inverse(const GElem &x) const {
  require(x);
  switch (kind_) {
  case Kind::Trivial:
    return GElem::unit_mark();
  case Kind::Int:
    return GElem::integer(-x.as_integer());
  case Kind::Rat:
    return GElem::rational(-x.as_rational());
  case Kind::Lex:
    return GElem::pair(left().inverse(x.first()), right().inverse(x.second()));
  }
  return GElem::unit_mark();
}

GElem OGroup::unit() const {
  switch (kind_) {
  case Kind::Trivial:
    return GElem::unit_mark();
  case Kind::Int:
    return GElem::integer(0);
  case Kind::Rat:
    return GElem::rational(0);
  case Kind::Lex:
    return GElem::pair(left().unit(), right().unit());
  }
  return GElem::unit_mark();
}

std::optional<GElem> OGroup::cover_up(const GElem &x) const {
  require(x);
  switch (kind_) {
  case Kind::Int:
    return GElem::integer(x.as_integer() + 1);
  case Kind::Lex:
    if (!right().is_trivial()) {
      auto b = right().cover_up(x.second());
      if (!b)
        return std::nullopt;
      return GElem::pair(x.first(), std::move(*b));
    } else {
      auto a = left().cover_up(x.first());
      if (!a)
        return std::nullopt;
      return GElem::pair(std::move(*a), x.second());
    }
  default:
    return std::nullopt;
  }
}

std::optional<GElem> OGroup::cover_down(const GElem &x) const {
  require(x);
  switch (kind_) {
  case Kind::Int:
    return GElem::integer(x.as_integer() - 1);
  case Kind::Lex:
    if (!right().is_trivial()) {
      auto b = right().cover_down(x.second());
      if (!b)
        return std::nullopt;
      return GElem::pair(x.first(), std::move(*b));
    } else {
      auto a = left().cover_down(x.first());
      if (!a)
        return std::nullopt;
      return GElem::pair(std::move(*a), x.second());
    }
  default:
    return std::nullopt;
  }
}

GElem OGroup::nth(std::uint64_t n) const {
  switch (kind_) {
  case Kind::Trivial:
    if (n != 0)
      throw std::out_of_range("trivial group has a single element");
    return GElem::unit_mark();
  case Kind::Int: {
    if (n == 0)
      return GElem::integer(0);
    const Integer m(signed_index_magnitude(n));
    return GElem::integer(n % 2 == 1 ? m : Integer(-m));
  }
  case Kind::Rat: {
    if (n == 0)
      return GElem::rational(0);
    Rational q = calkin_wilf(signed_index_magnitude(n));
    return GElem::rational(n % 2 == 1 ? q : Rational(-q));
  }
  case Kind::Lex: {
    const bool left_trivial = left().is_trivial();
    const bool right_trivial = right().is_trivial();
    if (left_trivial && right_trivial) {
      if (n != 0)
        throw std::out_of_range("trivial group has a single element");
      return unit();
    }
    if (left_trivial)
      return GElem::pair(left().unit(), right().nth(n));
    if (right_trivial)
      return GElem::pair(left().nth(n), right().unit());
    const auto [i, j] = cantor_unpair(n);
    return GElem::pair(left().nth(i), right().nth(j));
  }
  }
  return GElem::unit_mark();
}

GElem OGroup::parse_elem(std::string_view text) const {
  std::size_t pos = 0;
  GElem x = parse_elem_at(text, pos);
  skip_spaces(text, pos);
  if (pos != text.size())
    throw ParseError("offset " + std::to_string(pos),
                     "trailing input in element '" + std::string(text) + "'");
  return x;
}

GElem OGroup::parse_elem_at(std::string_view s, std::size_t &pos) const {
  skip_spaces(s, pos);
  switch (kind_) {
  case Kind::Trivial:
    if (pos < s.size() && s[pos] == 'e') {
      ++pos;
      return GElem::unit_mark();
    }
    throw ParseError("offset " + std::to_string(pos),
                     "expected 'e' for the trivial group in '" + std::string(s) + "'");
  case Kind::Int:
    return GElem::integer(parse_integer_token(s, pos));
  case Kind::Rat: {
    Integer num = parse_integer_token(s, pos);
    Integer den = 1;
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      den = parse_integer_token(s, pos);
      if (den == 0)
        throw ParseError("offset " + std::to_string(pos), "zero denominator");
    }
    return GElem::rational(Rational(num, den));
  }
  case Kind::Lex: {
    auto expect = [&](char c) {
      skip_spaces(s, pos);
      if (pos >= s.size() || s[pos] != c)
        throw ParseError("offset " + std::to_string(pos),
                         std::string("expected '") + c + "' in '" + std::string(s) + "'");
      ++pos;
    };
    expect('(');
    GElem a = left().parse_elem_at(s, pos);
    expect(',');
    GElem b = right().parse_elem_at(s, pos);
    expect(')');
    return GElem::pair(std::move(a), std::move(b));
  }
  }
  return GElem::unit_mark();
}

std::string OGroup::describe() const {
  switch (kind_) {
  case Kind::Trivial:
    return "trivial";
  case Kind::Int:
    return "int";
  case Kind::Rat:
    return "rat";
  case Kind::Lex:
    return "lex(" + left().describe() + "," + right().describe() + ")";
  }
  return "?";
}

bool operator==(const OGroup &a, const OGroup &b) {
  if (a.kind_ != b.kind_)
    return false;
  if (a.kind_ != OGroup::Kind::Lex)
    return true;
  return a.left() == b.left() && a.right() == b.right();
}

std::optional<GElem> GroupStream::next() {
  if (auto n = group_.size(); n && index_ >= *n)
    return std::nullopt;
  return group_.nth(index_++);
}

// ---------------------------------------------------------------- Hom

Hom Hom::unit_map(OGroup source, OGroup target) {
  return Hom(Kind::UnitMap, std::move(source), std::move(target));
}

Hom Hom::identity(OGroup g) { return Hom(Kind::Identity, g, g); }

Hom Hom::scale_int(std::int64_t k) {
  if (k <= 0)
    throw TypeMismatch("scale_int factor must be positive, got " + std::to_string(k));
  Hom h(Kind::ScaleInt, OGroup::integers(), OGroup::integers());
  h.factor_ = k;
  return h;
}

Hom Hom::int_to_rat() { return Hom(Kind::IntToRat, OGroup::integers(), OGroup::rationals()); }

Hom Hom::inject_first(OGroup source, OGroup right) {
  OGroup target = OGroup::lex(source, std::move(right));
  return Hom(Kind::InjectFirst, std::move(source), std::move(target));
}

Hom Hom::project_first(OGroup lex_source) {
  if (lex_source.kind() != OGroup::Kind::Lex)
    throw TypeMismatch("project_first needs a lex source, got " + lex_source.describe());
  OGroup target = lex_source.left();
  return Hom(Kind::ProjectFirst, std::move(lex_source), std::move(target));
}

Hom Hom::compose(Hom outer, Hom inner) {
  if (!(inner.target() == outer.source()))
    throw TypeMismatch("cannot compose " + outer.describe() + " after " +
                       inner.describe() + ": " + inner.target().describe() +
                       " != " + outer.source().describe());
  Hom h(Kind::Compose, inner.source(), outer.target());
  h.parts_ = std::make_shared<const std::pair<Hom, Hom>>(std::move(outer), std::move(inner));
  return h;
}

Hom Hom::include(Subgroup sub) {
  Hom h(Kind::Include, sub.carrier(), sub.ambient());
  h.sub_ = std::make_shared<const Subgroup>(std::move(sub));
  return h;
}

Hom Hom::restrict(Subgroup sub) {
  Hom h(Kind::Restrict, sub.ambient(), sub.carrier());
  h.sub_ = std::make_shared<const Subgroup>(std::move(sub));
  return h;
}

const Subgroup &Hom::subgroup() const {
  if (!sub_)
    throw TypeMismatch(describe() + " carries no subgroup");
  return *sub_;
}

const Hom &Hom::outer() const {
  if (kind_ != Kind::Compose)
    throw TypeMismatch(describe() + " is not a composition");
  return parts_->first;
}

const Hom &Hom::inner() const {
  if (kind_ != Kind::Compose)
    throw TypeMismatch(describe() + " is not a composition");
  return parts_->second;
}

GElem Hom::apply(const GElem &x) const {
  source_.require(x);
  switch (kind_) {
  case Kind::UnitMap:
    return target_.unit();
  case Kind::Identity:
    return x;
  case Kind::ScaleInt:
    return GElem::integer(x.as_integer() * factor_);
  case Kind::IntToRat:
    return GElem::rational(Rational(x.as_integer()));
  case Kind::InjectFirst:
    return GElem::pair(x, target_.right().unit());
  case Kind::ProjectFirst:
    return x.first();
  case Kind::Include:
    return sub_->embed(x);
  case Kind::Restrict:
    return sub_->retract(x);
  case Kind::Compose:
    return outer().apply(inner().apply(x));
  }
  return x;
}

bool Hom::is_constant() const {
  if (target_.is_trivial() || kind_ == Kind::UnitMap)
    return true;
  if (kind_ == Kind::Compose)
    return outer().is_constant() || inner().is_constant();
  return false;
}

std::string Hom::describe() const {
  switch (kind_) {
  case Kind::UnitMap:
    return "unit";
  case Kind::Identity:
    return "id";
  case Kind::ScaleInt:
    return "scale_int(" + std::to_string(factor_) + ")";
  case Kind::IntToRat:
    return "int_to_rat";
  case Kind::InjectFirst:
    return "inject_first";
  case Kind::ProjectFirst:
    return "project_first";
  case Kind::Include:
    return "include(" + sub_->describe() + ")";
  case Kind::Restrict:
    return "restrict(" + sub_->describe() + ")";
  case Kind::Compose:
    return outer().describe() + " o " + inner().describe();
  }
  return "?";
}

bool operator==(const Hom &a, const Hom &b) {
  if (a.kind_ != b.kind_ || a.factor_ != b.factor_ || !(a.source_ == b.source_) ||
      !(a.target_ == b.target_))
    return false;
  if (a.sub_ && !(*a.sub_ == *b.sub_))
    return false;
  if (a.kind_ != Hom::Kind::Compose)
    return true;
  return a.outer() == b.outer() && a.inner() == b.inner();
}

CheckOutcome hom_check(const Hom &h, std::size_t samples) {
  CheckOutcome out;
  const OGroup &src = h.source();
  const OGroup &dst = h.target();
  auto fail = [&](const std::string &what) {
    out.ok = false;
    out.failure = h.describe() + ": " + what;
  };
  if (!(dst.compare(h.apply(src.unit()), dst.unit()) == 0)) {
    fail("unit not preserved");
    return out;
  }
  const auto finite = src.size();
  const std::uint64_t total = finite ? 1 : samples;
  for (std::uint64_t k = 0; k < total; ++k) {
    const auto [i, j] = finite ? std::pair<std::uint64_t, std::uint64_t>{0, 0}
                               : cantor_unpair(k);
    const GElem x = src.nth(i);
    const GElem y = src.nth(j);
    const GElem hx = h.apply(x);
    const GElem hy = h.apply(y);
    if (!dst.contains(hx)) {
      fail("image of " + format_elem(x) + " is ill-typed");
      return out;
    }
    if (!(dst.compare(h.apply(src.op(x, y)), dst.op(hx, hy)) == 0)) {
      fail("op not preserved at " + format_elem(x) + ", " + format_elem(y));
      return out;
    }
    if (!(dst.compare(h.apply(src.inverse(x)), dst.inverse(hx)) == 0)) {
      fail("inverse not preserved at " + format_elem(x));
      return out;
    }
    if (src.compare(x, y) <= 0 && dst.compare(hx, hy) > 0) {
      fail("order not preserved at " + format_elem(x) + ", " + format_elem(y));
      return out;
    }
    ++out.checked;
  }
  return out;
}

// ---------------------------------------------------------------- Subgroup

Subgroup Subgroup::whole(OGroup ambient) { return Subgroup(Kind::Whole, std::move(ambient)); }

Subgroup Subgroup::int_multiples(std::int64_t k) {
  if (k <= 0)
    throw TypeMismatch("int_multiples modulus must be positive, got " + std::to_string(k));
  Subgroup s(Kind::IntMultiples, OGroup::integers());
  s.modulus_ = k;
  return s;
}

Subgroup Subgroup::int_in_rat() { return Subgroup(Kind::IntInRat, OGroup::rationals()); }

Subgroup Subgroup::first_zero(OGroup lex_ambient) {
  if (lex_ambient.kind() != OGroup::Kind::Lex)
    throw TypeMismatch("first_zero needs a lex ambient group, got " + lex_ambient.describe());
  return Subgroup(Kind::FirstZero, std::move(lex_ambient));
}

bool Subgroup::contains(const GElem &x) const {
  ambient_.require(x);
  switch (kind_) {
  case Kind::Whole:
    return true;
  case Kind::IntMultiples:
    return x.as_integer() % modulus_ == 0;
  case Kind::IntInRat:
    return boost::multiprecision::denominator(x.as_rational()) == 1;
  case Kind::FirstZero:
    return ambient_.left().compare(x.first(), ambient_.left().unit()) == 0;
  }
  return false;
}

OGroup Subgroup::carrier() const {
  switch (kind_) {
  case Kind::Whole:
    return ambient_;
  case Kind::IntMultiples:
  case Kind::IntInRat:
    return OGroup::integers();
  case Kind::FirstZero:
    return ambient_.right();
  }
  return ambient_;
}

GElem Subgroup::embed(const GElem &x) const {
  carrier().require(x);
  switch (kind_) {
  case Kind::Whole:
    return x;
  case Kind::IntMultiples:
    return GElem::integer(x.as_integer() * modulus_);
  case Kind::IntInRat:
    return GElem::rational(Rational(x.as_integer()));
  case Kind::FirstZero:
    return GElem::pair(ambient_.left().unit(), x);
  }
  return x;
}

GElem Subgroup::retract(const GElem &x) const {
  if (!contains(x))
    throw InvalidElement(format_elem(x) + " is outside " + describe());
  switch (kind_) {
  case Kind::Whole:
    return x;
  case Kind::IntMultiples:
    return GElem::integer(x.as_integer() / modulus_);
  case Kind::IntInRat:
    return GElem::integer(boost::multiprecision::numerator(x.as_rational()));
  case Kind::FirstZero:
    return x.second();
  }
  return x;
}

std::string Subgroup::describe() const {
  switch (kind_) {
  case Kind::Whole:
    return "whole";
  case Kind::IntMultiples:
    return "int_multiples(" + std::to_string(modulus_) + ")";
  case Kind::IntInRat:
    return "int_in_rat";
  case Kind::FirstZero:
    return "first_zero";
  }
  return "?";
}

} // namespace layerlat
