#pragma once

// Decidable abelian totally ordered groups (o-groups), their elements,
// order-preserving homomorphisms and subgroups. All types are immutable
// values built from a closed set of constructors, which keeps equality,
// membership and covers decidable.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace layerlat {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// The unit of the trivial group, written `e`.
struct UnitMark {
  friend bool operator==(UnitMark, UnitMark) = default;
};

/// An element of some OGroup: unit mark, integer, rational or a lex pair.
class GElem {
public:
  enum class Kind { Unit, Int, Rat, Pair };

  GElem() = default;

  static GElem unit_mark() { return GElem{}; }
  static GElem integer(Integer v);
  static GElem rational(Rational v);
  static GElem pair(GElem first, GElem second);

  Kind kind() const noexcept { return static_cast<Kind>(value_.index()); }

  const Integer &as_integer() const;
  const Rational &as_rational() const;
  const GElem &first() const;
  const GElem &second() const;

  friend bool operator==(const GElem &a, const GElem &b);

private:
  using Pair = std::vector<GElem>; // always two entries
  std::variant<UnitMark, Integer, Rational, Pair> value_;
};

/// Text form: `e`, `3`, `-7`, `3/4`, `(x,y)`.
std::string format_elem(const GElem &x);

/// An abelian o-group from the family Trivial | Int | Rat | Lex(A, B).
class OGroup {
public:
  enum class Kind { Trivial, Int, Rat, Lex };

  OGroup() = default; // Trivial

  static OGroup trivial() { return OGroup{}; }
  static OGroup integers();
  static OGroup rationals();
  static OGroup lex(OGroup left, OGroup right);

  Kind kind() const noexcept { return kind_; }
  const OGroup &left() const;
  const OGroup &right() const;

  /// True when the group has exactly one element (Trivial, or Lex of trivials).
  bool is_trivial() const;
  bool is_discrete() const;
  /// Number of elements; nullopt when infinite.
  std::optional<std::uint64_t> size() const;

  /// Well-typedness of an element against this group.
  bool contains(const GElem &x) const;
  /// Throws TypeMismatch unless contains(x).
  void require(const GElem &x) const;

  std::strong_ordering compare(const GElem &x, const GElem &y) const;
  GElem op(const GElem &x, const GElem &y) const;
  GElem inverse(const GElem &x) const;
  GElem unit() const;

  /// Upper/lower cover when the group is discrete, nullopt otherwise.
  std::optional<GElem> cover_up(const GElem &x) const;
  std::optional<GElem> cover_down(const GElem &x) const;

  /// n-th element of the fixed enumeration (Int: 0,1,-1,2,-2,...;
  /// Rat: 0 then Calkin-Wilf q, -q; Lex: Cantor diagonals). Requires
  /// n < size() for finite groups.
  GElem nth(std::uint64_t n) const;

  /// Parses an element in the text grammar, typed against this group.
  GElem parse_elem(std::string_view text) const;

  std::string describe() const;

  friend bool operator==(const OGroup &a, const OGroup &b);

private:
  GElem parse_elem_at(std::string_view text, std::size_t &pos) const;

  Kind kind_ = Kind::Trivial;
  std::shared_ptr<const std::pair<OGroup, OGroup>> factors_;
};

/// Infinite stream over OGroup::nth; stops for finite groups.
class GroupStream {
public:
  explicit GroupStream(OGroup g) : group_(std::move(g)) {}
  std::optional<GElem> next();

private:
  OGroup group_;
  std::uint64_t index_ = 0;
};

/// A decidable subgroup of an OGroup.
class Subgroup {
public:
  enum class Kind { Whole, IntMultiples, IntInRat, FirstZero };

  static Subgroup whole(OGroup ambient);
  static Subgroup int_multiples(std::int64_t k);
  static Subgroup int_in_rat();
  /// Elements (unit, b) of a Lex group.
  static Subgroup first_zero(OGroup lex_ambient);

  Kind kind() const noexcept { return kind_; }
  std::int64_t modulus() const noexcept { return modulus_; }
  const OGroup &ambient() const noexcept { return ambient_; }

  bool contains(const GElem &x) const;

  /// A standalone group isomorphic to the subgroup: the ambient group for
  /// Whole, Int for IntMultiples and IntInRat, the right factor for FirstZero.
  OGroup carrier() const;
  /// carrier -> ambient, and its inverse on members (InvalidElement otherwise).
  GElem embed(const GElem &x) const;
  GElem retract(const GElem &x) const;

  std::string describe() const;

  friend bool operator==(const Subgroup &a, const Subgroup &b) = default;

private:
  Subgroup(Kind kind, OGroup ambient) : kind_(kind), ambient_(std::move(ambient)) {}

  Kind kind_ = Kind::Whole;
  std::int64_t modulus_ = 1;
  OGroup ambient_;
};

/// Order-preserving group homomorphism from a closed DSL.
class Hom {
public:
  enum class Kind {
    UnitMap,
    Identity,
    ScaleInt,
    IntToRat,
    InjectFirst,
    ProjectFirst,
    Include,
    Restrict,
    Compose
  };

  static Hom unit_map(OGroup source, OGroup target);
  static Hom identity(OGroup g);
  static Hom scale_int(std::int64_t k);
  static Hom int_to_rat();
  /// a -> (a, unit) into Lex(source, right).
  static Hom inject_first(OGroup source, OGroup right);
  /// (a, b) -> a out of a Lex group.
  static Hom project_first(OGroup lex_source);
  /// Subgroup carrier into the ambient group.
  static Hom include(Subgroup sub);
  /// Inverse of include; only defined on members of the subgroup.
  static Hom restrict(Subgroup sub);
  /// outer after inner; throws TypeMismatch unless inner.target == outer.source.
  static Hom compose(Hom outer, Hom inner);

  Kind kind() const noexcept { return kind_; }
  std::int64_t factor() const noexcept { return factor_; }
  const OGroup &source() const noexcept { return source_; }
  const OGroup &target() const noexcept { return target_; }
  const Subgroup &subgroup() const;
  const Hom &outer() const;
  const Hom &inner() const;

  GElem apply(const GElem &x) const;

  /// True when every element is sent to the unit (a UnitMap occurs in the
  /// composition, or the target is trivial).
  bool is_constant() const;

  std::string describe() const;

  friend bool operator==(const Hom &a, const Hom &b);

private:
  Hom(Kind kind, OGroup source, OGroup target)
      : kind_(kind), source_(std::move(source)), target_(std::move(target)) {}

  Kind kind_ = Kind::Identity;
  std::int64_t factor_ = 1;
  OGroup source_;
  OGroup target_;
  std::shared_ptr<const std::pair<Hom, Hom>> parts_; // (outer, inner)
  std::shared_ptr<const Subgroup> sub_;
};

struct CheckOutcome {
  bool ok = true;
  std::size_t checked = 0;
  std::string failure; // first counterexample, empty when ok
};

/// Verifies preservation of op, unit, inverse and order on `samples`
/// deterministic pairs drawn from the source enumeration.
CheckOutcome hom_check(const Hom &h, std::size_t samples);

} // namespace layerlat
