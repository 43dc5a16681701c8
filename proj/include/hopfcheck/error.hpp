#ifndef HOPFCHECK_ERROR_HPP_
#define HOPFCHECK_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace hopfcheck {

enum class ErrorKind {
  DivisionByZero,
  ShapeMismatch,
  DimensionMismatch,
  Parse,
  NoSolution,
  NonUnique,
  CapExceeded,
  NotUnitary,
  NotUnimodular,
  NotStable,
  NotInvolutive,
  NotCentral,
  AxiomFailure,
  NotClosed,
  ModelMismatch,
  Bicharacter,
  IncompleteIrreducibles,
  NoBijection,
  NoneFound,
  UnknownCheck,
  ModelFormat,
  Io,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

} // namespace hopfcheck

#endif
