#ifndef HOMKERNEL_ERROR_HPP
#define HOMKERNEL_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace homkernel {

enum class ErrorKind {
  DivisionByZero,
  InhomogeneousInput,
  NotPrime,
  RingMismatch,
  RankMismatch,
  ZeroDivisorIdeal,
  ZeroModule,
  IndexOutOfRange,
  UnitIdeal,
  NotMonomial,
  NotRegularSequence,
  PdNotOne,
  NotBurch,
  UnknownExampleId,
  ParseError,
  UndeclaredIdentifier,
  TypeMismatch,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the kernel carries one of the kinds above so the
/// driver can map it onto an exit code and a per-statement diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace homkernel

#endif
