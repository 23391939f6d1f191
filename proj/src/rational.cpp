#include "crn/rational.hpp"

#include <stdexcept>

namespace crn {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t slash = text.find('/');
  auto check_int = [&](const std::string& part) {
    if (part.empty()) throw std::invalid_argument("bad rational literal: " + text);
    std::size_t i = (part[0] == '-') ? 1 : 0;
    if (i == part.size()) throw std::invalid_argument("bad rational literal: " + text);
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9')
        throw std::invalid_argument("bad rational literal: " + text);
  };
  if (slash == std::string::npos) {
    check_int(text);
    return Rational(BigInt(text));
  }
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  check_int(num);
  check_int(den);
  BigInt d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + text);
  Rational r(BigInt(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational pow(const Rational& base, unsigned exponent) {
  if (exponent == 0) return Rational(1);
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  // gcd(n,d) = 1 implies gcd(n^e, d^e) = 1, but the sign may sit in the
  // denominator after mpz_pow_ui on a negative base; canonicalize anyway.
  out.canonicalize();
  return out;
}

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  // Rejection sampling keeps the draw unbiased and deterministic.
  std::uint64_t limit = bound * ((~0ULL) / bound);
  std::uint64_t v = next();
  while (v >= limit) v = next();
  return v % bound;
}

long SplitMix64::range(long lo, long hi) {
  return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

SplitMix64 derive_stream(std::uint64_t seed, std::uint64_t salt) {
  SplitMix64 mixer(seed ^ (0xD1B54A32D192ED03ULL * (salt + 1)));
  return SplitMix64(mixer.next());
}

}  // namespace crn
