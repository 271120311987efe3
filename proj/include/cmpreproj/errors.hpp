#pragma once

#include <stdexcept>
#include <string>

namespace cmpreproj {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define CMPREPROJ_ERROR(Name)                       \
  struct Name : Error {                             \
    explicit Name(const std::string& what)          \
        : Error(std::string(#Name ": ") + what) {}  \
  }

CMPREPROJ_ERROR(InvalidInput);
CMPREPROJ_ERROR(InvalidRank);
CMPREPROJ_ERROR(CutoffExceeded);
CMPREPROJ_ERROR(AlgebraMismatch);
CMPREPROJ_ERROR(EmptySubset);
CMPREPROJ_ERROR(ParseError);
CMPREPROJ_ERROR(DecompositionInconclusive);
CMPREPROJ_ERROR(UndeterminedDimension);
CMPREPROJ_ERROR(NotNGorenstein);
CMPREPROJ_ERROR(NotCotilting);
CMPREPROJ_ERROR(ApproximationNotSurjective);
CMPREPROJ_ERROR(DomDimTooSmall);
CMPREPROJ_ERROR(InvalidModule);
CMPREPROJ_ERROR(SyzygyUndecided);

#undef CMPREPROJ_ERROR

}  // namespace cmpreproj
