#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nsg {

enum class ErrorKind {
  empty_input,
  gcd_not_one,
  not_an_element,
  budget_exceeded,
  cap_exceeded,
  unique_length,
  certification_failed,
  trivial_semigroup,
  not_coprime,
  not_minimal,
  wrong_embedding_dimension,
  not_med,
  not_med4,
  not_prime_multiplicity,
  not_composite,
  invalid_gluing,
  invalid_argument,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::empty_input: return "EmptyInput";
    case ErrorKind::gcd_not_one: return "GcdNotOne";
    case ErrorKind::not_an_element: return "NotAnElement";
    case ErrorKind::budget_exceeded: return "BudgetExceeded";
    case ErrorKind::cap_exceeded: return "CapExceeded";
    case ErrorKind::unique_length: return "UniqueLength";
    case ErrorKind::certification_failed: return "CertificationFailed";
    case ErrorKind::trivial_semigroup: return "TrivialSemigroup";
    case ErrorKind::not_coprime: return "NotCoprime";
    case ErrorKind::not_minimal: return "NotMinimal";
    case ErrorKind::wrong_embedding_dimension: return "WrongEmbeddingDimension";
    case ErrorKind::not_med: return "NotMed";
    case ErrorKind::not_med4: return "NotMed4";
    case ErrorKind::not_prime_multiplicity: return "NotPrimeMultiplicity";
    case ErrorKind::not_composite: return "NotComposite";
    case ErrorKind::invalid_gluing: return "InvalidGluing";
    case ErrorKind::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Domain error raised by every library operation. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace nsg
