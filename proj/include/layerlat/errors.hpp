#pragma once

#include <stdexcept>
#include <string>

namespace layerlat {

/// Base class of every domain error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define LAYERLAT_DEFINE_ERROR(Name)                                            \
  class Name : public Error {                                                  \
  public:                                                                      \
    explicit Name(const std::string &what) : Error(#Name ": " + what) {}       \
  }

// ogroup
LAYERLAT_DEFINE_ERROR(TypeMismatch);
// bunch
LAYERLAT_DEFINE_ERROR(LayerOrderError);
LAYERLAT_DEFINE_ERROR(UnknownLayer);
LAYERLAT_DEFINE_ERROR(StructureError);
LAYERLAT_DEFINE_ERROR(InvalidBunch);
// chain
LAYERLAT_DEFINE_ERROR(CoverMissing);
LAYERLAT_DEFINE_ERROR(InvalidElement);
// decompose / oracle
LAYERLAT_DEFINE_ERROR(NotResiduated);
LAYERLAT_DEFINE_ERROR(NotInvolutive);
LAYERLAT_DEFINE_ERROR(NotOddOrEven);
LAYERLAT_DEFINE_ERROR(AxiomFailure);
LAYERLAT_DEFINE_ERROR(RoundTripMismatch);
LAYERLAT_DEFINE_ERROR(BoundExceeded);
LAYERLAT_DEFINE_ERROR(InfiniteChain);
// densify
LAYERLAT_DEFINE_ERROR(LayerClassError);
LAYERLAT_DEFINE_ERROR(LeastLayerError);
LAYERLAT_DEFINE_ERROR(EvenTypeUnsupported);
LAYERLAT_DEFINE_ERROR(NotLess);
// standardize
LAYERLAT_DEFINE_ERROR(Unbounded);

#undef LAYERLAT_DEFINE_ERROR

/// Malformed textual input. `where` names the line or field at fault.
class ParseError : public Error {
public:
  ParseError(const std::string &where, const std::string &what)
      : Error("ParseError at " + where + ": " + what), where_(where) {}

  const std::string &where() const noexcept { return where_; }

private:
  std::string where_;
};

} // namespace layerlat
