#ifndef LEVI_ERRORS_HPP
#define LEVI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace levi {

enum class ErrorCode {
  NotLatinSquare,
  NoIdentity,
  NotAssociative,
  NotAPermutation,
  OrderLimitExceeded,
  BadIndex,
  GroupMismatch,
  NotAHomomorphism,
  NotASubgroup,
  NotNormal,
  BimoduleMismatch,
  DegenerateCarrier,
  NotRightFree,
  NotATransversal,
  GammaNotFunctional,
  ProductsNotEqual,
  NotAMorphism,
  WellDefinednessViolation,
  AxiomViolation,
  NotEndomorphism,
  QuotientIllDefined,
  NotIrreducible,
  InverseLetterWithoutAutomorphism,
  SyllableLimitExceeded,
  MixedGroups,
  NotLeftSymmetric,
  ParseError,
  UnknownName,
};

const char* to_string(ErrorCode code);

/// Every failure the library reports goes through this type; the code
/// identifies the violated precondition and what() carries the witness.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace levi

#endif  // LEVI_ERRORS_HPP
