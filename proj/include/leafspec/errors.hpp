#ifndef LEAFSPEC_ERRORS_HPP
#define LEAFSPEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace leafspec {

// Failure categories, in the order of the process exit codes they map to:
// parse -> 2, resource -> 3, domain -> 4 (precondition on otherwise
// well-formed input), validation -> 5 (input violates a semantic invariant).
enum class ErrorKind { Parse = 2, Resource = 3, Domain = 4, Validation = 5 };

struct Error : std::runtime_error {
  ErrorKind kind;
  Error(ErrorKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(ErrorKind::Parse, msg) {}
};

struct DivisionByZero : Error {
  explicit DivisionByZero(const std::string& msg = "division by zero")
      : Error(ErrorKind::Domain, msg) {}
};

struct GroupTooLarge : Error {
  explicit GroupTooLarge(const std::string& msg) : Error(ErrorKind::Resource, msg) {}
};

struct NotInvertible : Error {
  explicit NotInvertible(const std::string& msg) : Error(ErrorKind::Validation, msg) {}
};

struct PoleAtOrigin : Error {
  explicit PoleAtOrigin(const std::string& msg = "denominator vanishes at z = 0")
      : Error(ErrorKind::Domain, msg) {}
};

struct NonCyclotomicPole : Error {
  explicit NonCyclotomicPole(const std::string& msg) : Error(ErrorKind::Domain, msg) {}
};

struct NoPoleAtOne : Error {
  explicit NoPoleAtOne(const std::string& msg = "series has no pole at z = 1")
      : Error(ErrorKind::Domain, msg) {}
};

struct NegativeMultiplicity : Error {
  explicit NegativeMultiplicity(const std::string& msg) : Error(ErrorKind::Validation, msg) {}
};

struct TruncationTooSmall : Error {
  explicit TruncationTooSmall(const std::string& msg) : Error(ErrorKind::Domain, msg) {}
};

struct TailNotNegligible : Error {
  explicit TailNotNegligible(const std::string& msg) : Error(ErrorKind::Domain, msg) {}
};

struct InternalIrrationality : Error {
  explicit InternalIrrationality(const std::string& msg) : Error(ErrorKind::Validation, msg) {}
};

struct NotAHilbertSeries : Error {
  explicit NotAHilbertSeries(const std::string& msg) : Error(ErrorKind::Validation, msg) {}
};

struct UnknownEntry : Error {
  explicit UnknownEntry(const std::string& msg) : Error(ErrorKind::Domain, msg) {}
};

}  // namespace leafspec

#endif
