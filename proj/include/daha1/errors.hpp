#pragma once

#include <stdexcept>
#include <string>

namespace daha1 {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define DAHA1_ERROR(Name)                         \
  class Name : public Error {                     \
   public:                                        \
    explicit Name(const std::string& what_arg)    \
        : Error(#Name ": " + what_arg) {}         \
  }

DAHA1_ERROR(DenominatorVanishes);
DAHA1_ERROR(PoleAtQZero);
DAHA1_ERROR(NonDivisible);
DAHA1_ERROR(SingularSystem);
DAHA1_ERROR(PoleProximity);
DAHA1_ERROR(NoConvergence);
DAHA1_ERROR(OnWall);
DAHA1_ERROR(OddCase);
DAHA1_ERROR(SumDiverges);
DAHA1_ERROR(NormVanishes);
DAHA1_ERROR(OutsideDomain);
DAHA1_ERROR(CalibrationFailure);
DAHA1_ERROR(ExponentOverflow);
DAHA1_ERROR(ConfigError);

#undef DAHA1_ERROR

// Parse failure with the byte offset where it happened.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& msg, std::size_t pos)
      : Error("SyntaxError at " + std::to_string(pos) + ": " + msg), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

}  // namespace daha1
