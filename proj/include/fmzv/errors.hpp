#pragma once

#include <stdexcept>
#include <string>

namespace fmzv {

// Raised when text cannot be parsed as an index ("1,2,3") or a word ("yxy").
struct ParseError : std::invalid_argument {
  explicit ParseError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Raised when a modulus is not an odd prime; carries the smallest witness.
struct NotPrimeError : std::invalid_argument {
  NotPrimeError(long value, const std::string& msg)
      : std::invalid_argument(msg), value(value) {}
  long value;
};

// Raised when an operand lies outside an operation's domain (for example a
// word outside y*H or an empty index where a non-empty one is required).
// The message names the offending monomial.
struct DomainError : std::domain_error {
  explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

// Raised when reducing a rational coefficient a/b modulo p with p | b.
// Callers treat this as "instance not testable at this prime" and skip.
struct PDividesDenominator : std::runtime_error {
  PDividesDenominator(unsigned long p, std::string coeff, std::string where)
      : std::runtime_error("prime " + std::to_string(p) +
                           " divides the denominator of " + coeff +
                           (where.empty() ? "" : " at " + where)),
        p(p),
        coeff(std::move(coeff)),
        where(std::move(where)) {}
  unsigned long p;
  std::string coeff;
  std::string where;
};

}  // namespace fmzv
