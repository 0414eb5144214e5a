#pragma once

#include <stdexcept>
#include <string>

namespace alstat {

enum class Errc {
  ObjectOutOfBounds,
  UnknownFamily,
  CapTooLarge,
  EmptyModel,
  WeightSumNotOne,
  MixedUniverse,
  NotAMember,
  ZeroLikelihood,
  FractionalThreshold,
  EmptySum,
  BudgetExceeded,
  HeavinessViolated,
  NoAdmissibleDistribution,
  RefreezeRefused,
  ParseError,
  Internal,
};

const char* errc_name(Errc c);

/// All recoverable failures surface as Error; the C API maps them to
/// status codes plus a retrievable message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace alstat
