#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "triadlab/scalar.hpp"

namespace triadlab {

struct Limits {
  std::size_t max_pairs = 2000000;  // S-pairs per Groebner computation
  int max_degree = 64;              // largest degree an S-pair may have
  int finiteness_bound = 20;        // N in the nilpotency test X^N m = 0
};

/// Scalar field plus resource limits; passed to every computation.
struct Context {
  Field field;
  Limits limits;

  Scalar zero() const { return Scalar(field, 0); }
  Scalar one() const { return Scalar(field, 1); }
};

enum class ErrorCode {
  NotAComplex,
  HeartNotFinite,
  CokernelNotFinite,
  Inconclusive,
  RankMismatch,
  NonInteger,
  NotAMorphism,
  InvalidDrapeau,
  NotSurjective,
  ShapeMismatch,
  NotHomogeneous,
  NotFinite,
  NotAdequate,
  Internal,
};

const char* error_code_name(ErrorCode c);

/// Mathematical precondition failure (CLI exit status 1).
class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_code_name(code)) + (detail.empty() ? "" : ": " + detail)),
        code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// A configured resource limit was hit (CLI exit status 3).
class ResourceAbort : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace triadlab
