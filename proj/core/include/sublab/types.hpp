#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sublab {

/// Exact rational scalar. Always stored in lowest terms with positive
/// denominator (gmpxx canonicalizes on construction and arithmetic).
using Rational = mpq_class;

/// Dense coordinate vector over Rational.
using RVec = std::vector<Rational>;

/// Raised when an input fails validation (malformed expression, bad
/// dimension, unsupported label, ...).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a computation cannot certify its result (degenerate metric,
/// indistinguishable float spectrum, irreducibility test failure, ...).
class ComputeError : public std::runtime_error {
 public:
  explicit ComputeError(const std::string& what) : std::runtime_error(what) {}
};

/// Formats a rational as "p/q", or just "p" when the denominator is 1.
std::string to_fraction_string(const Rational& r);

/// Parses "p/q" or "p" (optional leading '-'). Throws InputError on any
/// other shape, including q == 0.
Rational parse_fraction(const std::string& text);

/// Exact rational from a small integer.
inline Rational rat(long num, long den = 1) { return Rational(num, den); }

}  // namespace sublab
