#pragma once

#include <stdexcept>
#include <string>

namespace cyclecover {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract input (bad modulus, non-monic f, degrees too small).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class NotSquarefree : public Error {
 public:
  using Error::Error;
};

// The standing hypothesis p ∤ r fails.
class CharacteristicDividesDegree : public Error {
 public:
  using Error::Error;
};

class NonUnitError : public Error {
 public:
  using Error::Error;
};

// Internal precision exhausted or an internal consistency assertion failed.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

class VerificationError : public Error {
 public:
  enum class Kind { DivisionInexact, WeilBound, FunctionalEquation, JacobianOrder };
  VerificationError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

[[noreturn]] void throw_precision(const std::string& what);

}  // namespace cyclecover

#define CC_ASSERT(cond, msg)                                                       \
  do {                                                                             \
    if (!(cond)) ::cyclecover::throw_precision(std::string("internal check: ") + (msg)); \
  } while (0)
