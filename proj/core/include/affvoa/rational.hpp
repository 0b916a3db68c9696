#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace affvoa {

/// Exact scalar type. mpq_class keeps values canonical (reduced, positive denominator)
/// as long as every construction goes through make_rational or parse_rational.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

/// Parses "p", "-p", "p/q". Anything else (decimals, complex units, whitespace) throws
/// std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" text; integers print without a denominator.
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);

/// Deterministic random source shared by every sampling routine. Draws use plain modular
/// reduction of the engine output so results do not depend on the standard library's
/// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi].
  long integer(long lo, long hi);
  /// Random rational num/den with num in [-span, span] and den in [1, max_den].
  Rational rational(long span, long max_den);
  /// Same as rational() but never zero.
  Rational nonzero_rational(long span, long max_den);

 private:
  std::mt19937_64 engine_;
};

}  // namespace affvoa
