#pragma once

#include <stdexcept>
#include <string>

namespace latorb {

// Error conditions surfaced by the library. Names follow the failure they
// report; lattice validation codes name the violated hypothesis.
enum class Errc {
  ZeroLeadingCoefficient,
  ExponentNotRepresentable,
  PrecisionInsufficient,
  NotSymmetric,
  NotPositiveDefinite,
  NotEven,
  RankNotMultipleOf8,
  DualConditionFails,
  EnumerationTooLarge,
  GradeTooLarge,
  ParityViolation,
  RankMismatch,
  StateNotInDomain,
  NotUnimodular,
  ParseError,
  IoError,
  Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace latorb
