#pragma once

#include <stdexcept>
#include <string>

namespace fjh {

/// Failure categories surfaced by the library. The CLI maps them to exit codes.
enum class ErrorKind {
  invalid_input,
  not_nilpotent,
  cap_exceeded,
  internal_inconsistency,
  non_convergence,
  not_normal,
  not_exact_factorization,
  invalid_matched_pair,
  degenerate_combination,
  non_integral_coefficient,
  not_abelian,
  invalid_series,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_input: return "InvalidInput";
    case ErrorKind::not_nilpotent: return "NotNilpotent";
    case ErrorKind::cap_exceeded: return "CapExceeded";
    case ErrorKind::internal_inconsistency: return "InternalInconsistency";
    case ErrorKind::non_convergence: return "NonConvergence";
    case ErrorKind::not_normal: return "NotNormal";
    case ErrorKind::not_exact_factorization: return "NotExactFactorization";
    case ErrorKind::invalid_matched_pair: return "InvalidMatchedPair";
    case ErrorKind::degenerate_combination: return "DegenerateCombination";
    case ErrorKind::non_integral_coefficient: return "NonIntegralCoefficient";
    case ErrorKind::not_abelian: return "NotAbelian";
    case ErrorKind::invalid_series: return "InvalidSeries";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// 0 success, 1 validation/input, 2 not nilpotent, 3 cap exceeded, 4 bug guard.
  int exit_code() const noexcept {
    switch (kind_) {
      case ErrorKind::not_nilpotent: return 2;
      case ErrorKind::cap_exceeded: return 3;
      case ErrorKind::internal_inconsistency:
      case ErrorKind::non_convergence:
      case ErrorKind::degenerate_combination:
      case ErrorKind::non_integral_coefficient: return 4;
      default: return 1;
    }
  }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace fjh
