#pragma once

#include <stdexcept>
#include <string>

namespace multirec {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define MULTIREC_ERROR(Name)                 \
  class Name : public Error {                \
   public:                                   \
    explicit Name(const std::string& what)   \
        : Error(std::string(#Name ": ") + what) {} \
  }

MULTIREC_ERROR(DegenerateDirection);
MULTIREC_ERROR(DimensionError);
MULTIREC_ERROR(InvalidInput);
MULTIREC_ERROR(NotProlongable);
MULTIREC_ERROR(ConstructionBug);
MULTIREC_ERROR(ScheduleExhausted);
MULTIREC_ERROR(NotCoprime);
MULTIREC_ERROR(OnLine);
MULTIREC_ERROR(CompositeSize);
MULTIREC_ERROR(NotApplicable);
MULTIREC_ERROR(ReturnScanFailed);
MULTIREC_ERROR(EmptyVisit);
MULTIREC_ERROR(NotFound);
MULTIREC_ERROR(FixtureMissing);
MULTIREC_ERROR(ArithmeticOverflow);

#undef MULTIREC_ERROR

}  // namespace multirec
