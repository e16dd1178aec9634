#pragma once

#include <stdexcept>
#include <string>

namespace alcove {

// Every domain failure derives from Error so callers can catch them as a group.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define ALCOVE_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

ALCOVE_DEFINE_ERROR(InvalidType);
ALCOVE_DEFINE_ERROR(RankTooLarge);
ALCOVE_DEFINE_ERROR(NotACoroot);
ALCOVE_DEFINE_ERROR(NotDominant);
ALCOVE_DEFINE_ERROR(NonExactDivision);
ALCOVE_DEFINE_ERROR(NotInvariant);
ALCOVE_DEFINE_ERROR(InfiniteParabolic);
ALCOVE_DEFINE_ERROR(PointsNotSeparated);
ALCOVE_DEFINE_ERROR(InsufficientTruncation);
ALCOVE_DEFINE_ERROR(IdealTooComplex);
ALCOVE_DEFINE_ERROR(InadmissibleLevel);
ALCOVE_DEFINE_ERROR(UsageError);

#undef ALCOVE_DEFINE_ERROR

}  // namespace alcove
