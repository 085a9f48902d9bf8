// Error taxonomy for the library. Every precondition violation throws
// partlib::error carrying a machine-readable code plus a human message.
#pragma once

#include <stdexcept>
#include <string>

namespace partlib {

enum class errc {
  not_strictly_increasing,  // index sequence fails k_0 < k_1 < ...
  first_term_nonzero,       // index sequence must start at k_0 = 0
  prefix_length_mismatch,   // declared prefix length differs from the data
  invalid_degree,           // tail step m < 2
  seed_too_short,           // initial values do not determine the sequence
  domain_error,             // argument outside the documented domain
  zero_digit,               // digit expansion contains a 0 where all digits must be nonzero
  odd_base,                 // operation defined only for even base
  hypothesis_violated,      // a stated hypothesis of the identity/check fails
  unsupported_triple,       // operation restricted to L=(1,-1), R=(1) shapes
  below_threshold,          // symbolic window not yet clear of the seed region
  coefficient_overflow,     // symbolic coefficients exceed 64-bit range
  parse_error,              // malformed input file / flag payload
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::not_strictly_increasing: return "NotStrictlyIncreasing";
    case errc::first_term_nonzero:      return "FirstTermNonzero";
    case errc::prefix_length_mismatch:  return "PrefixLengthMismatch";
    case errc::invalid_degree:          return "InvalidDegree";
    case errc::seed_too_short:          return "SeedTooShort";
    case errc::domain_error:            return "DomainError";
    case errc::zero_digit:              return "ZeroDigit";
    case errc::odd_base:                return "OddBase";
    case errc::hypothesis_violated:     return "HypothesisViolated";
    case errc::unsupported_triple:      return "UnsupportedTriple";
    case errc::below_threshold:         return "BelowThreshold";
    case errc::coefficient_overflow:    return "CoefficientOverflow";
    case errc::parse_error:             return "ParseError";
  }
  return "UnknownError";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

inline void require(bool cond, errc code, const std::string& what) {
  if (!cond) throw error(code, what);
}

}  // namespace partlib
