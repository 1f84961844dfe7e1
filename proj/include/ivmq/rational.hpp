#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace ivmq {

using Rational = mpq_class;

// Canonicalized rational from numerator/denominator.
Rational make_rational(long num, long den = 1);

// Parses "a", "-a", or "a/b". Throws schema_error on malformed input.
Rational parse_rational(const std::string& s);

std::string rational_str(const Rational& r);

// Exact conversion to long; throws math_error if not an integer or out of range.
long rational_to_long(const Rational& r);

bool is_integer(const Rational& r);

// Least common multiple of the denominators' values, as a positive integer.
mpz_class lcm_denominator(const mpz_class& acc, const Rational& r);

// An element of Q ∪ {+inf}; nullopt encodes +inf throughout the library
// (used for valuations and precision cutoffs).
using ExtRational = std::optional<Rational>;

// Order on Q ∪ {+inf}.
bool ext_less(const ExtRational& a, const ExtRational& b);
ExtRational ext_min(const ExtRational& a, const ExtRational& b);
std::string ext_str(const ExtRational& r);

} // namespace ivmq
