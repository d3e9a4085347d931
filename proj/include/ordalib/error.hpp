#pragma once

#include <stdexcept>
#include <string>

namespace ordalib {

enum class Err {
  UnknownGenerator,
  MalformedExponent,
  AlphabetMismatch,
  DegreeMismatch,
  StrandMismatch,
  NonTermination,
  NotAKnot,
  NormalizationFailure,
  NotCoprime,
  MissingFibredFlag,
  MissingParameters,
  OutOfRange,
  BadParameters,
  InconsistentDiagram,
  UnsupportedBackend,
  OracleIncomplete,
  BallTooLarge,
  IdentityInList,
  EmptyRelator,
  UnverifiedExtraRelator,
  DimensionMismatch,
  NotArchimedean,
  ParseError,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) { throw Error(code, msg); }

}  // namespace ordalib
