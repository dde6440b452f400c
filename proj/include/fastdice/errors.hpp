#pragma once

#include <stdexcept>
#include <string>

namespace fastdice {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define FASTDICE_DEFINE_ERROR(Name)          \
  class Name : public Error {                \
   public:                                   \
    using Error::Error;                      \
  }

FASTDICE_DEFINE_ERROR(InvalidArgument);
FASTDICE_DEFINE_ERROR(ScriptExhausted);
FASTDICE_DEFINE_ERROR(RangeTooLarge);
FASTDICE_DEFINE_ERROR(EmptyRange);
FASTDICE_DEFINE_ERROR(Overflow);
FASTDICE_DEFINE_ERROR(ImproperFraction);
FASTDICE_DEFINE_ERROR(RankOutOfRange);
FASTDICE_DEFINE_ERROR(DigitOutOfRange);
FASTDICE_DEFINE_ERROR(FactorialOverflow);
FASTDICE_DEFINE_ERROR(PoleAtOne);

#undef FASTDICE_DEFINE_ERROR

}  // namespace fastdice
