#ifndef CRN_RATIONAL_HPP
#define CRN_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace crn {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "3", "-7" or "2/3" into an exact rational. Throws
/// std::invalid_argument on anything else (including zero denominators
/// and floating-point syntax).
Rational parse_rational(const std::string& text);

/// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

/// base^exponent with a non-negative integer exponent; pow(q, 0) == 1.
Rational pow(const Rational& base, unsigned exponent);

/// splitmix64 with hand-rolled bounded sampling, so identical seeds replay
/// identically on every platform (std::uniform_int_distribution does not
/// guarantee that).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  /// Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform in [lo, hi], inclusive.
  long range(long lo, long hi);

 private:
  std::uint64_t state_;
};

/// Derives an independent deterministic stream from (seed, salt).
SplitMix64 derive_stream(std::uint64_t seed, std::uint64_t salt);

}  // namespace crn

#endif
